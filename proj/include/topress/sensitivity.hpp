#pragma once

#include "topress/assembly.hpp"
#include "topress/common.hpp"
#include "topress/linsolve.hpp"
#include "topress/material.hpp"
#include "topress/mesh.hpp"

namespace topress {

/// Compliance and volume constraint with their derivatives with respect to
/// the physical densities.
struct SensitivityBundle {
  double objective = 0.0;  ///< compliance uᵀF
  Vector obj_grad;         ///< dC/dx̃, one value per element
  double vol = 0.0;        ///< Σx̃ / (nel volfrac) - 1
  Vector vol_grad;         ///< 1 / (nel volfrac) for every element
  Vector lam1;             ///< pressure adjoint, zero on prescribed DOFs
  bool lst = true;         ///< load-sensitivity term included
};

/// uᵀF.
double compliance(const Vector& u, const Vector& f);

/// Pressure adjoint: solves A_ff λ_f = 2 (Tᵀu)_f and returns the full nodal
/// field with zeros on prescribed DOFs. Reuses the factorization in `flow`.
Vector adjoint_lambda1(const Vector& u, const RectSparse& t, const PressureSolver& flow);

/// Per-element compliance gradient
///   g_e = -E'(x̃_e) u_eᵀ Ke u_e + lst · λ_eᵀ (K'(x̃_e) Kp + D'(x̃_e) KDp) p_e.
Vector objective_gradient(const GridMesh& mesh, const Vector& xphys, const Vector& u,
                          const Vector& p, const Vector& lam1, const FlowModel& flow,
                          const ElasticModel& elastic, const Mat24& ke, bool lst);

struct VolumeConstraint {
  double value = 0.0;
  Vector gradient;
};

/// Σx̃ / (nel volfrac) - 1 and its constant gradient. Requires volfrac in (0, 1].
VolumeConstraint volume_constraint(const Vector& xphys, double volfrac);

}  // namespace topress
