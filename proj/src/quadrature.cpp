#include <array>
#include <string>

#include "topress/common.hpp"
#include "topress/element.hpp"

namespace topress {

namespace {

struct Rule {
  std::array<double, 4> points{};
  std::array<double, 4> weights{};
  int size = 0;
};

// Gauss-Legendre on [-1, 1].
Rule gauss_rule(int n) {
  switch (n) {
    case 1:
      return {{0.0}, {2.0}, 1};
    case 2: {
      const double g = 0.57735026918962576451;  // 1/sqrt(3)
      return {{-g, g}, {1.0, 1.0}, 2};
    }
    case 3: {
      const double g = 0.77459666924148337704;  // sqrt(3/5)
      return {{-g, 0.0, g}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}, 3};
    }
    case 4: {
      const double a = 0.33998104358485626480, b = 0.86113631159405257522;
      const double wa = 0.65214515486254614263, wb = 0.34785484513745385737;
      return {{-b, -a, a, b}, {wb, wa, wa, wb}, 4};
    }
    default:
      throw InvalidArgument("quadrature_oracle supports 1 to 4 points per axis, got " +
                            std::to_string(n));
  }
}

// Natural coordinates of the local nodes: bottom face first, counter-clockwise.
constexpr std::array<std::array<double, 3>, 8> kNodeXi{{
    {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
    {-1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1},
}};

}  // namespace

Eigen::MatrixXd quadrature_oracle(ElementKind kind, double nu, int points_per_axis) {
  const Rule rule = gauss_rule(points_per_axis);
  // Unit cube: x = (xi + 1)/2, so d/dx = 2 d/dxi and |det J| = 1/8.
  constexpr double det_j = 0.125;
  constexpr double inv_j = 2.0;

  Eigen::Matrix<double, 6, 6> dmat = Eigen::Matrix<double, 6, 6>::Zero();
  if (kind == ElementKind::Stiffness) {
    const double lambda = nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    const double mu = 1.0 / (2.0 * (1.0 + nu));
    dmat.topLeftCorner<3, 3>().setConstant(lambda);
    dmat.topLeftCorner<3, 3>().diagonal().array() += 2.0 * mu;
    dmat.bottomRightCorner<3, 3>().diagonal().setConstant(mu);
  }

  Eigen::MatrixXd result;
  switch (kind) {
    case ElementKind::Stiffness: result = Eigen::MatrixXd::Zero(24, 24); break;
    case ElementKind::Darcy:
    case ElementKind::Drainage: result = Eigen::MatrixXd::Zero(8, 8); break;
    case ElementKind::Transformation: result = Eigen::MatrixXd::Zero(24, 8); break;
  }

  for (int a = 0; a < rule.size; ++a) {
    for (int b = 0; b < rule.size; ++b) {
      for (int c = 0; c < rule.size; ++c) {
        const std::array<double, 3> xi{rule.points[a], rule.points[b], rule.points[c]};
        const double w = rule.weights[a] * rule.weights[b] * rule.weights[c] * det_j;

        Eigen::Matrix<double, 1, 8> n;
        Eigen::Matrix<double, 3, 8> bp;  // rows: d/dx, d/dy, d/dz
        for (int k = 0; k < 8; ++k) {
          const auto& xk = kNodeXi[k];
          const double f0 = 1.0 + xk[0] * xi[0];
          const double f1 = 1.0 + xk[1] * xi[1];
          const double f2 = 1.0 + xk[2] * xi[2];
          n(k) = f0 * f1 * f2 / 8.0;
          bp(0, k) = inv_j * xk[0] * f1 * f2 / 8.0;
          bp(1, k) = inv_j * f0 * xk[1] * f2 / 8.0;
          bp(2, k) = inv_j * f0 * f1 * xk[2] / 8.0;
        }

        switch (kind) {
          case ElementKind::Darcy: result.noalias() += w * bp.transpose() * bp; break;
          case ElementKind::Drainage: result.noalias() += w * n.transpose() * n; break;
          case ElementKind::Transformation: {
            Eigen::Matrix<double, 3, 24> nu_mat = Eigen::Matrix<double, 3, 24>::Zero();
            for (int k = 0; k < 8; ++k) nu_mat.block<3, 3>(0, 3 * k).diagonal().setConstant(n(k));
            result.noalias() += w * nu_mat.transpose() * bp;
            break;
          }
          case ElementKind::Stiffness: {
            // Voigt order xx, yy, zz, xy, yz, zx with engineering shear strains.
            Eigen::Matrix<double, 6, 24> bu = Eigen::Matrix<double, 6, 24>::Zero();
            for (int k = 0; k < 8; ++k) {
              const double dx = bp(0, k), dy = bp(1, k), dz = bp(2, k);
              bu(0, 3 * k) = dx;
              bu(1, 3 * k + 1) = dy;
              bu(2, 3 * k + 2) = dz;
              bu(3, 3 * k) = dy;
              bu(3, 3 * k + 1) = dx;
              bu(4, 3 * k + 1) = dz;
              bu(4, 3 * k + 2) = dy;
              bu(5, 3 * k) = dz;
              bu(5, 3 * k + 2) = dx;
            }
            result.noalias() += w * bu.transpose() * dmat * bu;
            break;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace topress
