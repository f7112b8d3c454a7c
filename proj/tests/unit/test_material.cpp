#include <catch2/catch.hpp>

#include <cmath>

#include "topress/common.hpp"
#include "topress/material.hpp"

using namespace topress;

// Reference values computed in 50-digit arithmetic.

TEST_CASE("smooth Heaviside values", "[material]") {
  CHECK(heaviside(0.0, 10, 0.2) == Approx(0.0).margin(1e-15));
  CHECK(heaviside(1.0, 10, 0.2) == Approx(1.0).epsilon(1e-15));
  CHECK(heaviside(0.2, 10, 0.2) == Approx(0.49084223680434471).epsilon(1e-14));
  CHECK(heaviside_derivative(0.2, 10, 0.2) == Approx(5.0915787779198387).epsilon(1e-14));
  CHECK(heaviside_derivative(1.0, 10, 0.2) == Approx(2.2919263136356e-6).epsilon(1e-10));
}

TEST_CASE("Heaviside derivative agrees with central differences", "[material]") {
  // Tolerance covers O(h²) truncation and eps/h round-off.
  for (double x : {0.05, 0.2, 0.37, 0.6, 0.93}) {
    const double h = 1e-6;
    const double fd = (heaviside(x + h, 10, 0.2) - heaviside(x - h, 10, 0.2)) / (2 * h);
    CHECK(heaviside_derivative(x, 10, 0.2) == Approx(fd).epsilon(1e-7).margin(1e-9));
  }
  CHECK(heaviside_derivative(0.1, 10, 0.2) == Approx(2.1383324450328317).epsilon(1e-14));
  CHECK(heaviside_derivative(0.9, 10, 0.2) == Approx(1.6935147753539224e-5).epsilon(1e-12));
}

TEST_CASE("flow and drainage coefficients", "[material]") {
  const FlowModel m;
  CHECK(m.drainage_magnitude() == Approx(1.3254745276195995e-7).epsilon(1e-14));
  CHECK(flow_coefficient(0.0, m) == Approx(1.0).epsilon(1e-15));
  CHECK(flow_coefficient(1.0, m) == Approx(m.ks()).epsilon(1e-12));
  CHECK(flow_coefficient(0.2, m) == Approx(0.50915781227987897).epsilon(1e-14));
  CHECK(drainage_coefficient(0.2, m) == Approx(6.50598881963986e-8).epsilon(1e-12));
  CHECK(drainage_coefficient(0.0, m) == Approx(0.0).margin(1e-22));

  for (double x : {0.1, 0.2, 0.5, 0.8}) {
    const double h = 1e-6;
    CHECK(flow_coefficient_derivative(x, m) ==
          Approx((flow_coefficient(x + h, m) - flow_coefficient(x - h, m)) / (2 * h))
              .epsilon(1e-7)
              .margin(1e-9 * m.kv));
    CHECK(drainage_coefficient_derivative(x, m) ==
          Approx((drainage_coefficient(x + h, m) - drainage_coefficient(x - h, m)) / (2 * h))
              .epsilon(1e-7)
              .margin(1e-9 * m.drainage_magnitude()));
  }
  CHECK(flow_coefficient(1.0, m) == m.ks());
}

TEST_CASE("flow coefficient decreases monotonically from void to solid", "[material]") {
  const FlowModel m;
  double prev = flow_coefficient(0.0, m);
  for (int i = 1; i <= 100; ++i) {
    const double k = flow_coefficient(i / 100.0, m);
    CHECK(k < prev);
    prev = k;
  }
}

TEST_CASE("SIMP interpolation", "[material]") {
  const ElasticModel m;
  CHECK(simp_modulus(0.5, m) == Approx(0.12500875).epsilon(1e-15));
  CHECK(simp_modulus(0.0, m) == m.emin);
  CHECK(simp_modulus(1.0, m) == Approx(m.e1).epsilon(1e-15));
  CHECK(simp_derivative(0.5, m) == Approx(3 * 0.25 * (1 - 1e-5)).epsilon(1e-15));
}

TEST_CASE("model validation rejects out-of-range parameters", "[material]") {
  CHECK_NOTHROW(FlowModel{}.validate());
  CHECK_NOTHROW(ElasticModel{}.validate());
  FlowModel f;
  f.r = 1.0;
  CHECK_THROWS_AS(f.validate(), InvalidArgument);
  f = FlowModel{};
  f.eta = 0.0;
  CHECK_THROWS_AS(f.validate(), InvalidArgument);
  f = FlowModel{};
  f.epsf = 0.0;
  CHECK_THROWS_AS(f.validate(), InvalidArgument);
  ElasticModel e;
  e.emin = 2.0;
  CHECK_THROWS_AS(e.validate(), InvalidArgument);
  e = ElasticModel{};
  e.penal = 0.5;
  CHECK_THROWS_AS(e.validate(), InvalidArgument);
}
