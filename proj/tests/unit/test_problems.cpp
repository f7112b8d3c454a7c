#include <catch2/catch.hpp>

#include <set>

#include "oracles.hpp"
#include "topress/analysis.hpp"
#include "topress/problems.hpp"

using namespace topress;

namespace {

std::set<Index> nodes_of(const std::vector<Index>& dofs) {
  std::set<Index> out;
  for (Index d : dofs) out.insert(d / 3);
  return out;
}

}  // namespace

TEST_CASE("lid supports the four top edges", "[problems]") {
  const GridMesh m(48, 24, 24);
  const ProblemPreset p = make_preset(PresetName::Lid, m);
  CHECK(p.displacement_bc.fixed_dofs.size() == 432);
  CHECK(nodes_of(p.displacement_bc.fixed_dofs).size() == 144);
  for (Index n : nodes_of(p.displacement_bc.fixed_dofs)) {
    const auto c = m.node_coords(n);
    CHECK(c[2] == 24);
    CHECK((c[0] == 0 || c[0] == 48 || c[1] == 0 || c[1] == 24));
  }
  CHECK(p.pressure_bc.fixed_dofs.size() == 2u * 49 * 25);
  CHECK(p.passive_solid.empty());
  CHECK(p.passive_void.empty());
  CHECK(p.mirror.empty());
}

TEST_CASE("extpress boundary data", "[problems]") {
  const GridMesh m(6, 4, 5);
  const ProblemPreset p = make_preset(PresetName::ExtPress, m);
  std::set<Index> zero, inlet;
  for (std::size_t k = 0; k < p.pressure_bc.fixed_dofs.size(); ++k) {
    (p.pressure_bc.fixed_values[k] == 0.0 ? zero : inlet).insert(p.pressure_bc.fixed_dofs[k]);
  }
  for (Index n : zero) CHECK(inlet.count(n) == 0);
  CHECK(zero.size() == 7u * 5);
  CHECK(inlet.size() == 7u * 5);
  const std::set<Index> fixed(p.displacement_bc.fixed_dofs.begin(), p.displacement_bc.fixed_dofs.end());
  const Index left = m.node(0, 2, 3), right = m.node(6, 2, 3), corner = m.node(6, 1, 0);
  CHECK(fixed.count(3 * left) == 1);
  CHECK(fixed.count(3 * left + 1) == 0);
  CHECK(fixed.count(3 * right) == 1);
  CHECK(fixed.count(3 * right + 1) == 1);
  CHECK(fixed.count(3 * right + 2) == 0);
  CHECK(fixed.count(3 * corner + 2) == 1);
  REQUIRE(p.mirror.size() == 1);
  CHECK(p.mirror[0] == Axis::X);
}

TEST_CASE("dam boundary data", "[problems]") {
  const GridMesh m(4, 5, 3);
  const ProblemPreset p = make_preset(PresetName::Dam, m);
  for (std::size_t k = 0; k < p.pressure_bc.fixed_dofs.size(); ++k) {
    const auto c = m.node_coords(p.pressure_bc.fixed_dofs[k]);
    if (p.pressure_bc.fixed_values[k] == 1.0) {
      CHECK(c[1] == 5);
    } else {
      CHECK(c[1] == 0);
    }
  }
  const std::set<Index> fixed(p.displacement_bc.fixed_dofs.begin(), p.displacement_bc.fixed_dofs.end());
  CHECK(fixed.count(3 * m.node(2, 2, 0) + 1) == 1);
  CHECK(fixed.count(3 * m.node(4, 2, 2) + 2) == 1);
  CHECK(fixed.count(3 * m.node(0, 2, 2)) == 1);
  CHECK(fixed.count(3 * m.node(0, 2, 2) + 1) == 0);
  CHECK(fixed.count(3 * m.node(2, 2, 2)) == 0);
}

TEST_CASE("hull void block is pressure-free and clamped", "[problems]") {
  const GridMesh m(36, 36, 36);
  const ProblemPreset p = make_preset(PresetName::Hull, m);
  CHECK(p.passive_void.size() == 125);
  const auto vnodes = element_nodes(m, p.passive_void);
  CHECK(vnodes.size() == 216);
  CHECK(p.displacement_bc.fixed_dofs.size() == 3 * 216);
  std::size_t zeros = 0;
  for (double v : p.pressure_bc.fixed_values) zeros += v == 0.0;
  CHECK(zeros == 216);
  CHECK(p.active_elements(m.nel()).size() == static_cast<std::size_t>(m.nel()) - 125);
  CHECK_THROWS_AS(make_preset(PresetName::Hull, GridMesh(2, 2, 2)), InvalidArgument);
}

TEST_CASE("every preset gives nonsingular systems on a 6 cubed mesh", "[problems]") {
  const GridMesh m(6, 6, 6);
  for (auto name : {PresetName::Lid, PresetName::ExtPress, PresetName::Dam, PresetName::Hull}) {
    const ProblemPreset p = make_preset(name, m);
    const Analysis a(m, p.pressure_bc, p.displacement_bc, FlowModel{}, ElasticModel{});
    for (unsigned seed : {1u, 2u}) {
      Vector x = oracle::random_field(m.nel(), 0.0, 1.0, seed);
      for (Index e : p.passive_void) x[e] = 0.0;
      INFO("preset " << to_string(name));
      AnalysisState s;
      CHECK_NOTHROW(s = a.solve(x));
      CHECK(s.compliance >= 0.0);
    }
    CHECK_NOTHROW(a.solve(Vector::Zero(m.nel())));
    CHECK_NOTHROW(a.solve(Vector::Ones(m.nel())));
  }
}

TEST_CASE("initial design hits the volume fraction", "[problems]") {
  const GridMesh m(18, 18, 18);
  const ProblemPreset hull = make_preset(PresetName::Hull, m);
  const Vector x = initial_design(m, hull, 0.2);
  const double expected = 0.2 * (m.nel() - 27) / (m.nel() - 27);
  for (Index e : hull.passive_void) CHECK(x[e] == 0.0);
  CHECK(x[0] == Approx(expected).epsilon(1e-15));

  ProblemPreset custom = make_preset(PresetName::Lid, GridMesh(4, 4, 4));
  custom.passive_solid = {0, 1, 2, 3};
  const Vector y = initial_design(GridMesh(4, 4, 4), custom, 0.25);
  CHECK(y[0] == 1.0);
  CHECK(y[10] == Approx((0.25 * 64 - 4) / 60.0).epsilon(1e-15));
  CHECK_THROWS_AS(initial_design(GridMesh(4, 4, 4), custom, 0.01), InvalidArgument);
  CHECK_THROWS_AS(initial_design(m, hull, 0.0), InvalidArgument);
}

TEST_CASE("preset names round-trip", "[problems]") {
  for (auto name : {PresetName::Lid, PresetName::ExtPress, PresetName::Dam, PresetName::Hull}) {
    CHECK(parse_preset_name(to_string(name)) == name);
  }
  CHECK_THROWS_AS(parse_preset_name("bridge"), InvalidArgument);
}
