#include "topress/mma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace topress {

AsymptoteBox parse_asymptote_box(std::string_view name) {
  if (name == "move") return AsymptoteBox::MoveLimited;
  if (name == "global") return AsymptoteBox::Global;
  throw InvalidArgument("unknown asymptote box '" + std::string(name) +
                        "' (expected move or global)");
}

const char* to_string(AsymptoteBox box) noexcept {
  return box == AsymptoteBox::Global ? "global" : "move";
}

void MmaSettings::validate() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw InvalidArgument(msg);
  };
  require(a0 > 0.0, "mma: a0 must be > 0");
  require(a >= 0.0, "mma: a must be >= 0");
  require(c >= 0.0 && d >= 0.0 && c + d > 0.0, "mma: c and d must be >= 0, not both zero");
  require(asyinit > 0.0 && asyinit <= 1.0, "mma: asyinit must lie in (0, 1]");
  require(asyincr >= 1.0, "mma: asyincr must be >= 1");
  require(asydecr > 0.0 && asydecr <= 1.0, "mma: asydecr must lie in (0, 1]");
  require(albefa > 0.0 && albefa < 1.0, "mma: albefa must lie in (0, 1)");
  require(move > 0.0, "mma: move must be > 0");
  require(raa0 > 0.0, "mma: raa0 must be > 0");
}

double MmaSubproblem::constraint_sum(const Vector& x) const {
  return ((p.array() / (upp - x).array()) + (q.array() / (x - low).array())).sum();
}

Vector MmaSubproblem::primal(double lambda) const {
  const Eigen::Index n = low.size();
  Vector x(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double sp = std::sqrt(p0[j] + lambda * p[j]);
    const double sq = std::sqrt(q0[j] + lambda * q[j]);
    const double xj = (sp * low[j] + sq * upp[j]) / (sp + sq);
    x[j] = std::clamp(xj, alpha[j], beta[j]);
  }
  return x;
}

namespace {

struct DualPoint {
  Vector x;
  double y = 0.0, z = 0.0;
  double slope = 0.0;  // g(x) - a z - y - b
};

DualPoint dual_point(const MmaSubproblem& sp, double lambda) {
  DualPoint d;
  d.x = sp.primal(lambda);
  if (sp.d > 0.0) d.y = std::max(0.0, (lambda - sp.c) / sp.d);
  d.slope = sp.constraint_sum(d.x) - sp.a * d.z - d.y - sp.b;
  return d;
}

}  // namespace

MmaSubproblemSolution solve_subproblem(const MmaSubproblem& sp) {
  const double inf = std::numeric_limits<double>::infinity();
  // Upper end of the dual domain: beyond it the Lagrangian is unbounded in y or z.
  double lmax = inf;
  bool y_bound = false;
  if (sp.d == 0.0) {
    lmax = sp.c;
    y_bound = true;
  }
  if (sp.a > 0.0 && sp.a0 / sp.a < lmax) {
    lmax = sp.a0 / sp.a;
    y_bound = false;
  }

  MmaSubproblemSolution sol;
  DualPoint at0 = dual_point(sp, 0.0);
  if (at0.slope <= 0.0) {
    sol.x = std::move(at0.x);
    sol.y = at0.y;
    return sol;
  }

  double lo = 0.0, hi;
  if (std::isfinite(lmax)) {
    DualPoint top = dual_point(sp, lmax);
    if (top.slope > 0.0) {
      // Constraint cannot be met at finite cost: the elastic variable absorbs the rest.
      sol.lambda = lmax;
      sol.x = std::move(top.x);
      sol.y = top.y;
      if (y_bound) {
        sol.y += top.slope;
      } else {
        sol.z = top.slope / sp.a;
      }
      return sol;
    }
    hi = lmax;
  } else {
    hi = 1.0;
    while (dual_point(sp, hi).slope > 0.0) {
      hi *= 2.0;
      if (!std::isfinite(hi)) throw SolverError("mma: dual bracket diverged");
    }
  }

  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dual_point(sp, mid).slope > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const DualPoint a = dual_point(sp, lo), b = dual_point(sp, hi);
  const bool take_hi = std::abs(b.slope) <= std::abs(a.slope);
  const DualPoint& best = take_hi ? b : a;
  sol.lambda = take_hi ? hi : lo;
  sol.x = best.x;
  sol.y = best.y;
  return sol;
}

double kkt_residual(const MmaSubproblem& sp, const MmaSubproblemSolution& s) {
  const double lam = s.lambda;
  double r = std::max(0.0, -lam);
  for (Eigen::Index j = 0; j < s.x.size(); ++j) {
    const double ux = sp.upp[j] - s.x[j], xl = s.x[j] - sp.low[j];
    const double grad =
        (sp.p0[j] + lam * sp.p[j]) / (ux * ux) - (sp.q0[j] + lam * sp.q[j]) / (xl * xl);
    const double proj = std::clamp(s.x[j] - grad, sp.alpha[j], sp.beta[j]);
    r = std::max(r, std::abs(s.x[j] - proj));
    r = std::max(r, std::max(sp.alpha[j] - s.x[j], s.x[j] - sp.beta[j]));
  }
  const double gy = sp.c + sp.d * s.y - lam;
  r = std::max(r, std::abs(s.y - std::max(0.0, s.y - gy)));
  const double gz = sp.a0 - lam * sp.a;
  r = std::max(r, std::abs(s.z - std::max(0.0, s.z - gz)));
  const double slack = sp.constraint_sum(s.x) - sp.a * s.z - s.y - sp.b;
  r = std::max(r, std::max(0.0, slack));
  r = std::max(r, std::abs(lam * slack));
  return r;
}

Mma::Mma(Index n, MmaSettings settings) : n_(n), s_(settings) {
  if (n < 1) throw InvalidArgument("mma: need at least one variable");
  s_.validate();
}

Vector Mma::update(const Vector& x, double f0, const Vector& df0, double f, const Vector& df,
                   const Vector& xmin, const Vector& xmax) {
  if (x.size() != n_ || df0.size() != n_ || df.size() != n_ || xmin.size() != n_ ||
      xmax.size() != n_) {
    throw InvalidArgument("mma: vector sizes do not match the number of variables");
  }
  if (!std::isfinite(f0) || !std::isfinite(f) || !x.allFinite() || !df0.allFinite() ||
      !df.allFinite() || !xmin.allFinite() || !xmax.allFinite()) {
    throw InvalidArgument("mma: NaN or Inf in the optimizer input");
  }
  if ((xmin.array() > x.array()).any() || (x.array() > xmax.array()).any()) {
    throw InvalidArgument("mma: x outside [xmin, xmax]");
  }

  ++iter_;
  if (iter_ == 1) {
    xold1_ = x;
    xold2_ = x;
  }
  const Vector range = s_.box == AsymptoteBox::Global ? Vector::Ones(n_) : Vector(xmax - xmin);
  const Vector xmami = range.cwiseMax(1e-5);

  if (iter_ < 3) {
    low_ = x - s_.asyinit * range;
    upp_ = x + s_.asyinit * range;
  } else {
    for (Index j = 0; j < n_; ++j) {
      const double zzz = (x[j] - xold1_[j]) * (xold1_[j] - xold2_[j]);
      const double factor = zzz > 0.0 ? s_.asyincr : (zzz < 0.0 ? s_.asydecr : 1.0);
      double l = x[j] - factor * (xold1_[j] - low_[j]);
      double u = x[j] + factor * (upp_[j] - xold1_[j]);
      l = std::clamp(l, x[j] - 10.0 * range[j], x[j] - 0.01 * range[j]);
      u = std::clamp(u, x[j] + 0.01 * range[j], x[j] + 10.0 * range[j]);
      low_[j] = l;
      upp_[j] = u;
    }
  }
  // Degenerate ranges fall back to the floor so that low < x < upp holds strictly.
  low_ = low_.cwiseMin(x - 1e-5 * xmami);
  upp_ = upp_.cwiseMax(x + 1e-5 * xmami);

  MmaSubproblem& sp = sp_;
  sp.low = low_;
  sp.upp = upp_;
  sp.alpha.resize(n_);
  sp.beta.resize(n_);
  sp.p0.resize(n_);
  sp.q0.resize(n_);
  sp.p.resize(n_);
  sp.q.resize(n_);
  double b = -f;
  for (Index j = 0; j < n_; ++j) {
    sp.alpha[j] = std::max({low_[j] + s_.albefa * (x[j] - low_[j]),
                            x[j] - s_.move * range[j], xmin[j]});
    sp.beta[j] = std::min({upp_[j] - s_.albefa * (upp_[j] - x[j]),
                           x[j] + s_.move * range[j], xmax[j]});
    const double ux = upp_[j] - x[j], xl = x[j] - low_[j];
    const double reg = s_.raa0 / xmami[j];
    const double gp = std::max(df0[j], 0.0), gm = std::max(-df0[j], 0.0);
    const double reg0 = 0.001 * (gp + gm) + reg;
    sp.p0[j] = (gp + reg0) * ux * ux;
    sp.q0[j] = (gm + reg0) * xl * xl;
    const double cp = std::max(df[j], 0.0), cm = std::max(-df[j], 0.0);
    const double reg1 = 0.001 * (cp + cm) + reg;
    sp.p[j] = (cp + reg1) * ux * ux;
    sp.q[j] = (cm + reg1) * xl * xl;
    b += sp.p[j] / ux + sp.q[j] / xl;
  }
  sp.b = b;
  sp.a0 = s_.a0;
  sp.a = s_.a;
  sp.c = s_.c;
  sp.d = s_.d;

  MmaSubproblemSolution sol = solve_subproblem(sp);
  lambda_ = sol.lambda;
  xold2_ = xold1_;
  xold1_ = x;
  return sol.x;
}

}  // namespace topress
