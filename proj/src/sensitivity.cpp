#include "topress/sensitivity.hpp"

#include <string>

namespace topress {

double compliance(const Vector& u, const Vector& f) {
  if (u.size() != f.size()) throw InvalidArgument("compliance: u and F differ in length");
  return u.dot(f);
}

Vector adjoint_lambda1(const Vector& u, const RectSparse& t, const PressureSolver& flow) {
  if (u.size() != t.rows()) throw InvalidArgument("adjoint_lambda1: u has wrong length");
  const DofPartition& part = flow.partition();
  Vector lam = Vector::Zero(part.size());
  if (part.free().empty()) return lam;
  const Vector rhs = part.gather_free(2.0 * t.transpose_times(u));
  return part.scatter_free(flow.solve_free(rhs));
}

Vector objective_gradient(const GridMesh& mesh, const Vector& xphys, const Vector& u,
                          const Vector& p, const Vector& lam1, const FlowModel& flow,
                          const ElasticModel& elastic, const Mat24& ke, bool lst) {
  const Index nel = mesh.nel();
  if (xphys.size() != nel || u.size() != mesh.ndof() || p.size() != mesh.nno() ||
      lam1.size() != mesh.nno()) {
    throw InvalidArgument("objective_gradient: field sizes do not match the mesh");
  }
  const Mat8& kp = darcy_matrix();
  const Mat8& kdp = drainage_matrix();
  Vector g(nel);
#pragma omp parallel for schedule(static)
  for (Index e = 0; e < nel; ++e) {
    Eigen::Matrix<double, 24, 1> ue;
    const auto ud = mesh.displacement_dofs(e);
    for (int i = 0; i < 24; ++i) ue[i] = u[ud[i]];
    double ge = -simp_derivative(xphys[e], elastic) * ue.dot(ke * ue);
    if (lst) {
      Eigen::Matrix<double, 8, 1> le, pe;
      const auto pd = mesh.pressure_dofs(e);
      for (int i = 0; i < 8; ++i) {
        le[i] = lam1[pd[i]];
        pe[i] = p[pd[i]];
      }
      const double dk = flow_coefficient_derivative(xphys[e], flow);
      const double dd = drainage_coefficient_derivative(xphys[e], flow);
      ge += dk * le.dot(kp * pe) + dd * le.dot(kdp * pe);
    }
    g[e] = ge;
  }
  return g;
}

VolumeConstraint volume_constraint(const Vector& xphys, double volfrac) {
  if (!(volfrac > 0.0 && volfrac <= 1.0)) {
    throw InvalidArgument("volume_constraint: volfrac must lie in (0, 1] (got " +
                          std::to_string(volfrac) + ")");
  }
  const auto nel = static_cast<double>(xphys.size());
  if (xphys.size() == 0) throw InvalidArgument("volume_constraint: empty design");
  VolumeConstraint v;
  v.value = xphys.sum() / (nel * volfrac) - 1.0;
  v.gradient = Vector::Constant(xphys.size(), 1.0 / (nel * volfrac));
  return v;
}

}  // namespace topress
