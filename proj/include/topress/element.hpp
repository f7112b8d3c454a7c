#pragma once

#include <Eigen/Dense>

namespace topress {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat24 = Eigen::Matrix<double, 24, 24>;
using Mat24x8 = Eigen::Matrix<double, 24, 8>;

/// Unit-coefficient Darcy matrix ∫ BpᵀBp dV of the unit cube (entries n/12).
const Mat8& darcy_matrix();

/// Unit-coefficient drainage (consistent mass) matrix ∫ NpᵀNp dV (entries n/216).
const Mat8& drainage_matrix();

/// Pressure-to-nodal-force matrix ∫ NuᵀBp dV (entries n/72). Rows follow the
/// element displacement DOFs (x, y, z of local nodes 1..8), columns the local
/// pressure nodes. Global loads are F = -T p.
const Mat24x8& transformation_matrix();

/// Number of entries in the packed lower triangle of Ke.
inline constexpr int kStiffnessLowerSize = 300;

/// Elastic stiffness of the unit cube for E = 1, Poisson ratio `nu`:
/// (A + nu*B) / ((1+nu)(2nu-1)*144) with the integer vectors A, B holding the
/// lower triangle column by column. Requires 0 <= nu < 0.5.
Mat24 stiffness_matrix(double nu);

/// The packed lower triangle (column-major) that `stiffness_matrix` expands.
Eigen::Matrix<double, kStiffnessLowerSize, 1> stiffness_lower(double nu);

/// Element matrices for one Poisson ratio; Ke is computed once per instance.
class ElementMatrices {
 public:
  explicit ElementMatrices(double nu) : nu_(nu), ke_(stiffness_matrix(nu)) {}

  double nu() const noexcept { return nu_; }
  const Mat24& ke() const noexcept { return ke_; }
  const Mat8& kp() const noexcept { return darcy_matrix(); }
  const Mat8& kdp() const noexcept { return drainage_matrix(); }
  const Mat24x8& te() const noexcept { return transformation_matrix(); }

 private:
  double nu_;
  Mat24 ke_;
};

enum class ElementKind { Stiffness, Darcy, Drainage, Transformation };

/// Gauss-Legendre integration of the defining integral of `kind` over the
/// unit cube with trilinear shape functions and `points_per_axis` points per
/// direction (1 to 4). Independent of the closed forms above; used to verify
/// them. `nu` is only read for ElementKind::Stiffness.
Eigen::MatrixXd quadrature_oracle(ElementKind kind, double nu = 0.3, int points_per_axis = 2);

}  // namespace topress
