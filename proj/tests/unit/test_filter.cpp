#include <catch2/catch.hpp>

#include <cmath>

#include "oracles.hpp"
#include "topress/filter.hpp"

using namespace topress;

TEST_CASE("hat kernel weights for rmin = sqrt(3)", "[filter]") {
  const FilterKernel k(std::sqrt(3.0));
  CHECK(k.half_width == 1);
  CHECK(k.weight(0, 0, 0) == Approx(1.7320508075688773).epsilon(1e-15));
  CHECK(k.weight(1, 0, 0) == Approx(0.7320508075688773).epsilon(1e-15));
  CHECK(k.weight(0, -1, 1) == Approx(0.3178372451957822).epsilon(1e-15));
  CHECK(k.weight(1, 1, 1) == 0.0);
  CHECK(k.sum() == Approx(9.938402595331528).epsilon(1e-14));
  for (const auto& t : k.taps) CHECK(k.weight(-t.dx, -t.dy, -t.dz) == t.weight);
}

TEST_CASE("kernel radius must be positive", "[filter]") {
  CHECK_THROWS_AS(FilterKernel(0.0), InvalidArgument);
  CHECK_THROWS_AS(FilterKernel(-1.0), InvalidArgument);
  CHECK_THROWS_AS(FilterKernel(std::nan("")), InvalidArgument);
  const GridMesh m(2, 2, 2);
  CHECK_THROWS_AS(ConvolutionFilter(m, 0.0), InvalidArgument);
  CHECK_THROWS_AS(MatrixFilter(m, 0.0), InvalidArgument);
}

TEST_CASE("filter preserves constants", "[filter]") {
  const GridMesh m(5, 4, 3);
  for (double r : {0.5, 1.5, std::sqrt(3.0), 2.5}) {
    const ConvolutionFilter f(m, r);
    CHECK((f.forward(Vector::Constant(m.nel(), 0.4)).array() - 0.4).abs().maxCoeff() < 1e-14);
    CHECK(f.normalization().minCoeff() > 0.0);
  }
}

TEST_CASE("interior normalization equals the stencil sum", "[filter]") {
  const GridMesh m(5, 5, 5);
  const ConvolutionFilter f(m, std::sqrt(3.0));
  CHECK(f.normalization()[m.element(2, 2, 2)] == Approx(9.938402595331528).epsilon(1e-14));
  CHECK(f.normalization()[m.element(0, 0, 0)] < f.normalization()[m.element(2, 2, 2)]);
}

TEST_CASE("interior spike spreads by the kernel", "[filter]") {
  const GridMesh m(5, 5, 5);
  const ConvolutionFilter f(m, std::sqrt(3.0));
  Vector x = Vector::Zero(m.nel());
  x[m.element(2, 2, 2)] = 1.0;
  const Vector y = f.forward(x);
  CHECK(y[m.element(2, 2, 2)] == Approx(0.17427859165038172).epsilon(1e-14));
  CHECK(y[m.element(3, 2, 2)] == Approx(0.7320508075688773 / 9.938402595331528).epsilon(1e-14));
  CHECK(y[m.element(3, 3, 3)] == 0.0);
}

TEST_CASE("backward filter is the adjoint of the forward filter", "[filter]") {
  const GridMesh m(4, 5, 3);
  const ConvolutionFilter f(m, 2.2);
  for (unsigned seed = 0; seed < 5; ++seed) {
    const Vector x = oracle::random_field(m.nel(), 0, 1, seed);
    const Vector s = oracle::random_field(m.nel(), -1, 1, seed + 100);
    CHECK(std::abs(f.forward(x).dot(s) - x.dot(f.backward(s))) < 1e-12);
  }
}

TEST_CASE("radius below one leaves fields unchanged", "[filter]") {
  const GridMesh m(3, 3, 3);
  const ConvolutionFilter f(m, 0.8);
  const Vector s = oracle::random_field(m.nel(), -1, 1, 7);
  CHECK((f.forward(s) - s).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((f.backward(s) - s).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("single-element matrix filter holds rmin", "[filter]") {
  const GridMesh m(1, 1, 1);
  const MatrixFilter f(m, 1.7);
  REQUIRE(f.matrix().rows() == 1);
  CHECK(f.matrix().coeff(0, 0) == 1.7);
  CHECK(f.normalization()[0] == 1.7);
}

TEST_CASE("matrix and convolution backends agree", "[filter]") {
  for (int n : {4, 5, 8}) {
    const GridMesh m(n, n - 1 > 3 ? n - 1 : n, n);
    for (double r : {1.2, std::sqrt(3.0), 2.6}) {
      const ConvolutionFilter conv(m, r);
      const MatrixFilter mat(m, r);
      CHECK((conv.normalization() - mat.normalization()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(((mat.matrix() * Vector::Ones(m.nel())).cwiseQuotient(mat.normalization()).array() - 1.0)
                .abs()
                .maxCoeff() < 1e-14);
      const Vector x = oracle::random_field(m.nel(), 0, 1, 40 + n);
      const Vector s = oracle::random_field(m.nel(), -1, 1, 50 + n);
      CHECK((conv.forward(x) - mat.forward(x)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((conv.backward(s) - mat.backward(s)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("filter is linear and keeps bounds", "[filter]") {
  const GridMesh m(6, 4, 4);
  const ConvolutionFilter f(m, std::sqrt(3.0));
  const Vector x = oracle::random_field(m.nel(), 0, 1, 60);
  const Vector y = oracle::random_field(m.nel(), 0, 1, 61);
  const Vector lhs = f.forward(0.3 * x + 1.7 * y);
  const Vector rhs = 0.3 * f.forward(x) + 1.7 * f.forward(y);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  const Vector fx = f.forward(x);
  CHECK(fx.minCoeff() >= 0.0);
  CHECK(fx.maxCoeff() <= 1.0);
  CHECK(f.forward(Vector::Ones(m.nel())).maxCoeff() <= 1.0);
}

TEST_CASE("backend names parse", "[filter]") {
  CHECK(parse_filter_backend("matrix") == FilterBackend::Matrix);
  CHECK(parse_filter_backend("convolution") == FilterBackend::Convolution);
  CHECK_THROWS_AS(parse_filter_backend("fft"), InvalidArgument);
  const GridMesh m(2, 2, 2);
  CHECK(make_filter(FilterBackend::Matrix, m, 1.5)->normalization().size() == 8);
}
