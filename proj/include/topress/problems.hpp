#pragma once

#include <string_view>
#include <vector>

#include "topress/common.hpp"
#include "topress/linsolve.hpp"
#include "topress/mesh.hpp"

namespace topress {

enum class PresetName { Lid, ExtPress, Dam, Hull };

/// Throws InvalidArgument for names other than lid, extpress, dam and hull.
PresetName parse_preset_name(std::string_view name);
const char* to_string(PresetName name) noexcept;

/// Boundary data, passive regions and export symmetry of a benchmark.
struct ProblemPreset {
  PresetName name = PresetName::Lid;
  PressureBC pressure_bc;
  DisplacementBC displacement_bc;
  std::vector<Index> passive_solid;  ///< sorted element indices
  std::vector<Index> passive_void;   ///< sorted element indices
  std::vector<Axis> mirror;          ///< axes doubled at export

  /// Elements that are neither passive solid nor passive void, ascending.
  std::vector<Index> active_elements(Index nel) const;
};

/// Builds a preset on `mesh` with inlet pressure `pin`.
///
///   lid       p = pin on top, 0 on bottom; all DOFs fixed on the four top edges.
///   extpress  p = pin on top, 0 on bottom; all DOFs fixed on the bottom-right
///             edge, x fixed on the left face, x and y fixed on the right face;
///             mirrored across x.
///   dam       p = pin on back, 0 on front; all DOFs fixed on bottom and right,
///             x fixed on the left face; mirrored across x.
///   hull      p = pin on all outer faces, 0 on the nodes of the central void
///             block [8/18, 10/18]^3, which are also fully fixed.
ProblemPreset make_preset(PresetName name, const GridMesh& mesh, double pin = 1.0);

/// Uniform start design: active elements at
/// (volfrac (nel - |void|) - |solid|) / |active|, passive solid 1, passive void 0.
/// Throws InvalidArgument if that value leaves [0, 1] or no element is active.
Vector initial_design(const GridMesh& mesh, const ProblemPreset& preset, double volfrac);

}  // namespace topress
