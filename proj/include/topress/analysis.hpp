#pragma once

#include <memory>

#include "topress/assembly.hpp"
#include "topress/linsolve.hpp"
#include "topress/material.hpp"
#include "topress/mesh.hpp"
#include "topress/sensitivity.hpp"

namespace topress {

/// Solution of the coupled pressure / elasticity problem for one design.
struct AnalysisState {
  Vector p;  ///< nodal pressure
  Vector f;  ///< nodal load -T p
  Vector u;  ///< displacement
  double compliance = 0.0;
  /// Pressure factorization, kept for the adjoint solve.
  std::shared_ptr<const PressureSolver> flow;
};

/// Pressure-loaded compliance problem on a fixed mesh and boundary data.
/// Sparsity patterns and T are built once; each solve reassembles values only.
class Analysis {
 public:
  Analysis(GridMesh mesh, PressureBC pressure_bc, DisplacementBC displacement_bc,
           FlowModel flow, ElasticModel elastic);

  const GridMesh& mesh() const noexcept { return mesh_; }
  const FlowModel& flow_model() const noexcept { return flow_; }
  const ElasticModel& elastic_model() const noexcept { return elastic_; }
  const PressureBC& pressure_bc() const noexcept { return pbc_; }
  const DisplacementBC& displacement_bc() const noexcept { return ubc_; }
  const RectSparse& transformation() const noexcept { return t_; }
  const Mat24& element_stiffness() const noexcept { return ke_; }

  SymmetricSparse flow_matrix(const Vector& xphys) const;
  SymmetricSparse stiffness_matrix(const Vector& xphys) const;

  /// Pressure, load, displacement and compliance for physical densities `xphys`.
  AnalysisState solve(const Vector& xphys) const;

  /// Displacement and compliance under a prescribed load (the pressure part
  /// of the returned state is left empty).
  AnalysisState solve_with_load(const Vector& xphys, const Vector& f) const;

  /// Adjoint gradients of compliance and the volume constraint at `state`.
  SensitivityBundle sensitivities(const AnalysisState& state, const Vector& xphys,
                                  double volfrac, bool lst) const;

 private:
  void check_design(const Vector& xphys) const;

  GridMesh mesh_;
  PressureBC pbc_;
  DisplacementBC ubc_;
  FlowModel flow_;
  ElasticModel elastic_;
  FlowAssembler flow_asm_;
  StiffnessAssembler stiff_asm_;
  RectSparse t_;
  Mat24 ke_;
};

}  // namespace topress
