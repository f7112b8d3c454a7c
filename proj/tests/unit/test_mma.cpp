#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "topress/mma.hpp"

using namespace topress;

namespace {

// Golden-section minimum of a convex function on [a, b].
template <class F>
double golden_min(F&& f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Brute-force solve: componentwise golden section for fixed λ, bisection on
// λ in [0, c] for the constraint (a = d = 0).
Vector brute_force(const MmaSubproblem& sp) {
  auto primal = [&](double lam) {
    Vector x(sp.low.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      auto phi = [&](double t) {
        return (sp.p0[j] + lam * sp.p[j]) / (sp.upp[j] - t) +
               (sp.q0[j] + lam * sp.q[j]) / (t - sp.low[j]);
      };
      x[j] = golden_min(phi, sp.alpha[j], sp.beta[j]);
    }
    return x;
  };
  auto slope = [&](double lam) { return sp.constraint_sum(primal(lam)) - sp.b; };
  if (slope(0.0) <= 0.0) return primal(0.0);
  if (slope(sp.c) > 0.0) return primal(sp.c);
  double lo = 0.0, hi = sp.c;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return primal(0.5 * (lo + hi));
}

MmaSubproblem random_subproblem(std::mt19937& gen, int n, double bias) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  MmaSubproblem sp;
  sp.low.resize(n);
  sp.upp.resize(n);
  sp.alpha.resize(n);
  sp.beta.resize(n);
  sp.p0.resize(n);
  sp.q0.resize(n);
  sp.p.resize(n);
  sp.q.resize(n);
  Vector x(n);
  for (int j = 0; j < n; ++j) {
    x[j] = u(gen);
    sp.low[j] = x[j] - 0.05 - 0.5 * u(gen);
    sp.upp[j] = x[j] + 0.05 + 0.5 * u(gen);
    sp.alpha[j] = std::max(sp.low[j] + 0.1 * (x[j] - sp.low[j]), x[j] - 0.1);
    sp.beta[j] = std::min(sp.upp[j] - 0.1 * (sp.upp[j] - x[j]), x[j] + 0.1);
    sp.p0[j] = 1e-4 + u(gen);
    sp.q0[j] = 1e-4 + u(gen);
    sp.p[j] = 1e-4 + u(gen) * u(gen);
    sp.q[j] = 1e-4 + u(gen) * u(gen);
  }
  sp.b = sp.constraint_sum(x) * bias;
  return sp;
}

}  // namespace

TEST_CASE("MMA converges on a constrained quadratic", "[mma]") {
  for (auto box : {AsymptoteBox::MoveLimited, AsymptoteBox::Global}) {
    MmaSettings s;
    s.box = box;
    Mma mma(2, s);
    Vector x(2);
    x << 0.2, 0.9;
    const Vector xmin = Vector::Zero(2), xmax = Vector::Ones(2);
    int it = 0;
    for (; it < 50; ++it) {
      const double f0 = (x.array() - 1.0).square().sum();
      const Vector df0 = 2.0 * (x.array() - 1.0);
      const double f = x.sum() - 1.0;
      const Vector x_new = mma.update(x, f0, df0, f, Vector::Ones(2), xmin, xmax);
      const double step = (x_new - x).cwiseAbs().maxCoeff();
      x = x_new;
      if (step < 1e-9) break;
    }
    INFO("box " << to_string(box) << " after " << it << " iterations");
    CHECK(std::abs(x[0] - 0.5) < 1e-4);
    CHECK(std::abs(x[1] - 0.5) < 1e-4);
    CHECK(mma.last_lambda() == Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("MMA moves up on a decreasing objective with a slack constraint", "[mma]") {
  const int n = 5;
  Mma mma(n);
  const Vector x = Vector::Constant(n, 0.3);
  const Vector xmin = (x.array() - 0.1).cwiseMax(0.0), xmax = (x.array() + 0.1).cwiseMin(1.0);
  const Vector x_new =
      mma.update(x, 1.0, Vector::Constant(n, -1.0), -0.5, Vector::Constant(n, 0.1), xmin, xmax);
  for (int j = 0; j < n; ++j) {
    CHECK(x_new[j] > x[j]);
    CHECK(x_new[j] <= xmax[j]);
  }
}

TEST_CASE("MMA keeps a stationary point", "[mma]") {
  const int n = 4;
  Mma mma(n);
  Vector x(n);
  x << 0.1, 0.35, 0.6, 0.95;
  const Vector xmin = (x.array() - 0.1).cwiseMax(0.0), xmax = (x.array() + 0.1).cwiseMin(1.0);
  const Vector x_new =
      mma.update(x, 2.0, Vector::Zero(n), -1.0, Vector::Constant(n, 0.25), xmin, xmax);
  CHECK((x_new - x).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(mma.last_lambda() == 0.0);
}

TEST_CASE("MMA respects the bounds exactly", "[mma]") {
  std::mt19937 gen(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 50;
  Mma mma(n);
  Vector x = Vector::Constant(n, 0.5);
  for (int it = 0; it < 10; ++it) {
    Vector df0(n), df(n);
    for (int j = 0; j < n; ++j) {
      df0[j] = 10.0 * u(gen);
      df[j] = std::abs(u(gen));
    }
    const Vector xmin = (x.array() - 0.1).cwiseMax(0.0), xmax = (x.array() + 0.1).cwiseMin(1.0);
    const Vector x_new = mma.update(x, 1.0, df0, u(gen), df, xmin, xmax);
    for (int j = 0; j < n; ++j) {
      CHECK(x_new[j] >= xmin[j]);
      CHECK(x_new[j] <= xmax[j]);
      CHECK(mma.low()[j] < x[j]);
      CHECK(mma.upp()[j] > x[j]);
    }
    x = x_new;
  }
}

TEST_CASE("asymptotes start at half the box and adapt to oscillation", "[mma]") {
  Mma mma(2);
  const Vector df0 = Vector::Constant(2, 1.0), df = Vector::Constant(2, 1.0);
  auto step = [&](const Vector& x) {
    const Vector xmin = (x.array() - 0.1).cwiseMax(0.0), xmax = (x.array() + 0.1).cwiseMin(1.0);
    mma.update(x, 0.0, df0, -1.0, df, xmin, xmax);
    return Vector(xmax - xmin);
  };
  Vector x0(2), x1(2), x2(2);
  x0 << 0.5, 0.5;
  x1 << 0.55, 0.55;
  x2 << 0.5, 0.6;  // component 0 oscillates, component 1 keeps moving up
  const Vector r0 = step(x0);
  CHECK(mma.low()[0] == Approx(0.5 - 0.5 * r0[0]));
  CHECK(mma.upp()[0] == Approx(0.5 + 0.5 * r0[0]));
  const Vector r1 = step(x1);
  const Vector low1 = mma.low(), upp1 = mma.upp();
  CHECK(low1[0] == Approx(0.55 - 0.5 * r1[0]));
  const Vector r2 = step(x2);
  auto clip_low = [&](double v, double x, double r) {
    return std::clamp(v, x - 10 * r, x - 0.01 * r);
  };
  auto clip_upp = [&](double v, double x, double r) {
    return std::clamp(v, x + 0.01 * r, x + 10 * r);
  };
  CHECK(mma.low()[0] == Approx(clip_low(0.5 - 0.7 * (0.55 - low1[0]), 0.5, r2[0])));
  CHECK(mma.upp()[0] == Approx(clip_upp(0.5 + 0.7 * (upp1[0] - 0.55), 0.5, r2[0])));
  CHECK(mma.low()[1] == Approx(clip_low(0.6 - 1.2 * (0.55 - low1[1]), 0.6, r2[1])));
  CHECK(mma.upp()[1] == Approx(clip_upp(0.6 + 1.2 * (upp1[1] - 0.55), 0.6, r2[1])));
  CHECK(mma.iteration() == 3);
}

TEST_CASE("subproblem solutions meet KKT and agree with brute force", "[mma]") {
  std::mt19937 gen(1234);
  double worst_kkt = 0.0, worst_diff = 0.0;
  int active = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 100);
    const double bias = (trial % 4 == 0) ? 1.5 : 0.8 + 0.05 * (trial % 3);
    const MmaSubproblem sp = random_subproblem(gen, n, bias);
    const MmaSubproblemSolution sol = solve_subproblem(sp);
    if (sol.lambda > 0.0) ++active;
    worst_kkt = std::max(worst_kkt, kkt_residual(sp, sol));
    worst_diff = std::max(worst_diff, (sol.x - brute_force(sp)).cwiseAbs().maxCoeff());
  }
  CHECK(active > 10);
  CHECK(worst_kkt < 1e-9);
  CHECK(worst_diff < 1e-6);
}

TEST_CASE("infeasible subproblems use the elastic variable", "[mma]") {
  std::mt19937 gen(5);
  MmaSubproblem sp = random_subproblem(gen, 10, 1.0);
  sp.b = -1e6;
  const MmaSubproblemSolution sol = solve_subproblem(sp);
  CHECK(sol.lambda == sp.c);
  CHECK(sol.y > 0.0);
  CHECK(kkt_residual(sp, sol) < 1e-9);
}

TEST_CASE("MMA rejects bad input", "[mma]") {
  Mma mma(2);
  const Vector x = Vector::Constant(2, 0.5), lo = Vector::Zero(2), hi = Vector::Ones(2);
  Vector bad = x;
  bad[0] = std::nan("");
  CHECK_THROWS_AS(mma.update(x, 1.0, bad, 0.0, x, lo, hi), InvalidArgument);
  CHECK_THROWS_AS(mma.update(x, INFINITY, x, 0.0, x, lo, hi), InvalidArgument);
  CHECK_THROWS_AS(mma.update(Vector::Ones(3), 1.0, x, 0.0, x, lo, hi), InvalidArgument);
  CHECK_THROWS_AS(mma.update(Vector::Constant(2, 2.0), 1.0, x, 0.0, x, lo, hi), InvalidArgument);
  CHECK_THROWS_AS(Mma(0), InvalidArgument);
  MmaSettings s;
  s.asyincr = 0.5;
  CHECK_THROWS_AS(Mma(2, s), InvalidArgument);
  CHECK(parse_asymptote_box("global") == AsymptoteBox::Global);
  CHECK_THROWS_AS(parse_asymptote_box("nope"), InvalidArgument);
}
