#pragma once

#include <string_view>

#include "topress/common.hpp"

namespace topress {

/// Which box sets the asymptote scale: the per-call bounds [xmin, xmax]
/// (the move-limited box, as in the reference mmasub) or the fixed [0, 1].
enum class AsymptoteBox { MoveLimited, Global };

AsymptoteBox parse_asymptote_box(std::string_view name);
const char* to_string(AsymptoteBox box) noexcept;

struct MmaSettings {
  double a0 = 1.0;
  double a = 0.0;     ///< per-constraint a_i (m = 1)
  double c = 1000.0;  ///< cost of the elastic variable
  double d = 0.0;     ///< quadratic cost of the elastic variable
  double asyinit = 0.5;
  double asyincr = 1.2;
  double asydecr = 0.7;
  double albefa = 0.1;
  double move = 0.5;
  double raa0 = 1e-5;
  AsymptoteBox box = AsymptoteBox::MoveLimited;

  /// Throws InvalidArgument on out-of-range values.
  void validate() const;
};

/// Separable convex subproblem with one constraint, in the form
///   min  Σ p0_j/(U_j - x_j) + q0_j/(x_j - L_j) + a0 z + c y + d y²/2
///   s.t. Σ P_j/(U_j - x_j) + Q_j/(x_j - L_j) - a z - y <= b,
///        alpha <= x <= beta, y >= 0, z >= 0.
struct MmaSubproblem {
  Vector low, upp, alpha, beta;
  Vector p0, q0, p, q;
  double b = 0.0;
  double a0 = 1.0, a = 0.0, c = 1000.0, d = 0.0;

  /// Σ P/(U - x) + Q/(x - L).
  double constraint_sum(const Vector& x) const;
  /// x(λ) minimizing the Lagrangian for a fixed dual value.
  Vector primal(double lambda) const;
};

struct MmaSubproblemSolution {
  Vector x;
  double y = 0.0;
  double z = 0.0;
  double lambda = 0.0;
};

/// Solves the subproblem through its one-dimensional concave dual.
MmaSubproblemSolution solve_subproblem(const MmaSubproblem& sp);

/// Max-norm KKT residual of a candidate solution: projected stationarity in
/// x, stationarity in y and z, primal feasibility and complementarity.
double kkt_residual(const MmaSubproblem& sp, const MmaSubproblemSolution& sol);

/// Method of Moving Asymptotes for n variables and one inequality constraint
/// f(x) <= 0. Keeps the asymptotes and the two previous iterates.
class Mma {
 public:
  explicit Mma(Index n, MmaSettings settings = {});

  /// One outer iteration. Throws InvalidArgument on size mismatch, NaN/Inf
  /// input or xmin > x / x > xmax.
  Vector update(const Vector& x, double f0, const Vector& df0, double f, const Vector& df,
                const Vector& xmin, const Vector& xmax);

  Index size() const noexcept { return n_; }
  int iteration() const noexcept { return iter_; }
  const Vector& low() const noexcept { return low_; }
  const Vector& upp() const noexcept { return upp_; }
  const MmaSettings& settings() const noexcept { return s_; }
  /// Subproblem of the most recent update (for diagnostics).
  const MmaSubproblem& last_subproblem() const noexcept { return sp_; }
  double last_lambda() const noexcept { return lambda_; }

 private:
  Index n_;
  MmaSettings s_;
  int iter_ = 0;
  Vector low_, upp_, xold1_, xold2_;
  MmaSubproblem sp_;
  double lambda_ = 0.0;
};

}  // namespace topress
