#include "topress/analysis.hpp"

#include <cmath>
#include <vector>

namespace topress {

Analysis::Analysis(GridMesh mesh, PressureBC pressure_bc, DisplacementBC displacement_bc,
                   FlowModel flow, ElasticModel elastic)
    : mesh_(std::move(mesh)),
      pbc_(std::move(pressure_bc)),
      ubc_(std::move(displacement_bc)),
      flow_(flow),
      elastic_(elastic),
      flow_asm_(mesh_),
      stiff_asm_(mesh_, elastic_.nu),
      t_(assemble_transformation(mesh_)),
      ke_(topress::stiffness_matrix(elastic_.nu)) {
  flow_.validate();
  elastic_.validate();
  pbc_.validate(mesh_.nno());
  ubc_.validate(mesh_.ndof());
}

void Analysis::check_design(const Vector& xphys) const {
  if (xphys.size() != mesh_.nel()) {
    throw InvalidArgument("analysis: design has " + std::to_string(xphys.size()) +
                          " entries, mesh has " + std::to_string(mesh_.nel()) + " elements");
  }
  if (!xphys.allFinite()) throw InvalidArgument("analysis: design contains NaN or Inf");
}

SymmetricSparse Analysis::flow_matrix(const Vector& xphys) const {
  check_design(xphys);
  std::vector<double> k(static_cast<std::size_t>(mesh_.nel())), d(k.size());
  for (Index e = 0; e < mesh_.nel(); ++e) {
    k[e] = flow_coefficient(xphys[e], flow_);
    d[e] = drainage_coefficient(xphys[e], flow_);
  }
  return flow_asm_.assemble(k, d);
}

SymmetricSparse Analysis::stiffness_matrix(const Vector& xphys) const {
  check_design(xphys);
  std::vector<double> e(static_cast<std::size_t>(mesh_.nel()));
  for (Index i = 0; i < mesh_.nel(); ++i) e[i] = simp_modulus(xphys[i], elastic_);
  return stiff_asm_.assemble(e);
}

AnalysisState Analysis::solve(const Vector& xphys) const {
  auto flow = std::make_shared<const PressureSolver>(flow_matrix(xphys), pbc_);
  AnalysisState s = solve_with_load(xphys, -(t_ * flow->pressure()));
  s.p = flow->pressure();
  s.flow = std::move(flow);
  return s;
}

AnalysisState Analysis::solve_with_load(const Vector& xphys, const Vector& f) const {
  if (f.size() != mesh_.ndof()) throw InvalidArgument("analysis: load vector has wrong length");
  AnalysisState s;
  s.f = f;
  s.u = ElasticSolver(stiffness_matrix(xphys), ubc_).solve(f);
  s.compliance = compliance(s.u, s.f);
  return s;
}

SensitivityBundle Analysis::sensitivities(const AnalysisState& state, const Vector& xphys,
                                          double volfrac, bool lst) const {
  check_design(xphys);
  if (!state.flow) throw InvalidArgument("sensitivities: state has no pressure solution");
  SensitivityBundle b;
  b.objective = state.compliance;
  b.lst = lst;
  b.lam1 = adjoint_lambda1(state.u, t_, *state.flow);
  b.obj_grad =
      objective_gradient(mesh_, xphys, state.u, state.p, b.lam1, flow_, elastic_, ke_, lst);
  auto vol = volume_constraint(xphys, volfrac);
  b.vol = vol.value;
  b.vol_grad = std::move(vol.gradient);
  return b;
}

}  // namespace topress
