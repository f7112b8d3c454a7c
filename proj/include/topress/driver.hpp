#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "topress/common.hpp"
#include "topress/filter.hpp"
#include "topress/material.hpp"
#include "topress/mesh.hpp"
#include "topress/mma.hpp"
#include "topress/problems.hpp"

namespace topress {

struct RunConfig {
  PresetName preset = PresetName::Lid;
  int nelx = 0, nely = 0, nelz = 0;
  double volfrac = 0.0;
  double rmin = std::sqrt(3.0);
  bool lst = true;
  int maxit = 100;
  double pin = 1.0;
  double move_limit = 0.1;
  double change_tol = 1e-4;
  double norm_target = 1000.0;
  FilterBackend filter = FilterBackend::Convolution;
  /// eta and beta of the flow projection come from etaf / betaf.
  FlowModel flow;
  /// penal lives here.
  ElasticModel elastic;
  MmaSettings mma;

  std::string history_path;     ///< CSV, rewritten every iteration; empty = off
  std::string vtk_path;         ///< final density export; empty = off
  std::string checkpoint_path;  ///< final design checkpoint; empty = off
  bool quiet = false;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

struct IterationRecord {
  int iter = 0;
  double compliance = 0.0;             ///< raw uᵀF
  double compliance_normalized = 0.0;  ///< normf · uᵀF
  double volfrac = 0.0;                ///< mean physical density after the update
  double change = 0.0;                 ///< max |x_new - x| over active elements
  double seconds = 0.0;                ///< wall time of the iteration
};

using RunHistory = std::vector<IterationRecord>;

struct RunResult {
  Vector x;      ///< design densities (passive entries at 1 / 0)
  Vector xphys;  ///< physical densities after the last update
  Vector p;      ///< pressure of the last analysed design
  Vector u;      ///< displacement of the last analysed design
  RunHistory history;
  double normf = 0.0;
  ProblemPreset preset;
};

/// Called after every iteration.
using ProgressFn = std::function<void(const IterationRecord&)>;

/// "It.:   1 Obj.: 1000.0000 Vol.:0.2500 ch.:0.1000"
std::string format_progress(const IterationRecord& rec);

/// Runs the optimization loop. Solver failures are rethrown as SolverError
/// with the iteration number prepended.
RunResult run(const RunConfig& config, const ProgressFn& progress = {});

/// Mean physical density over active elements at which the volume constraint
/// is active: (volfrac nel - |solid|) / |active|.
double effective_volfrac(const GridMesh& mesh, const ProblemPreset& preset, double volfrac);

/// Sum over active elements divided by their count.
double active_mean(const Vector& xphys, const std::vector<Index>& active);

}  // namespace topress
