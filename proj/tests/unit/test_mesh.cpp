#include <catch2/catch.hpp>

#include <set>

#include "topress/mesh.hpp"

using namespace topress;

TEST_CASE("grid numbering is y fastest, then z, then x", "[mesh]") {
  const GridMesh m(3, 2, 4);
  REQUIRE(m.nel() == 24);
  REQUIRE(m.nno() == 4 * 3 * 5);
  REQUIRE(m.ndof() == 3 * m.nno());
  CHECK(m.node(0, 1, 0) == 1);
  CHECK(m.node(0, 0, 1) == 3);
  CHECK(m.node(1, 0, 0) == 15);
  CHECK(m.element(0, 1, 0) == 1);
  CHECK(m.element(0, 0, 1) == 2);
  CHECK(m.element(1, 0, 0) == 8);

  for (Index n = 0; n < m.nno(); ++n) {
    const auto c = m.node_coords(n);
    CHECK(m.node(c[0], c[1], c[2]) == n);
  }
  for (Index e = 0; e < m.nel(); ++e) {
    const auto c = m.element_coords(e);
    CHECK(m.element(c[0], c[1], c[2]) == e);
  }
}

TEST_CASE("element connectivity lists bottom face then top face", "[mesh]") {
  const GridMesh m(2, 3, 2);
  const Index e = m.element(1, 2, 1);
  const auto pd = m.pressure_dofs(e);
  CHECK(pd[0] == m.node(1, 2, 1));
  CHECK(pd[1] == m.node(2, 2, 1));
  CHECK(pd[2] == m.node(2, 3, 1));
  CHECK(pd[3] == m.node(1, 3, 1));
  for (int i = 0; i < 4; ++i) {
    const auto lo = m.node_coords(pd[i]);
    const auto hi = m.node_coords(pd[i + 4]);
    CHECK(hi[0] == lo[0]);
    CHECK(hi[1] == lo[1]);
    CHECK(hi[2] == lo[2] + 1);
  }
  const auto ud = m.displacement_dofs(e);
  for (int i = 0; i < 8; ++i) {
    for (int c = 0; c < 3; ++c) CHECK(ud[3 * i + c] == 3 * pd[i] + c);
  }
}

TEST_CASE("every interior node is shared by eight elements", "[mesh]") {
  const GridMesh m(3, 3, 3);
  std::vector<int> count(m.nno(), 0);
  for (Index e = 0; e < m.nel(); ++e) {
    const auto pd = m.pressure_dofs(e);
    std::set<Index> uniq(pd.begin(), pd.end());
    REQUIRE(uniq.size() == 8);
    for (Index n : pd) ++count[n];
  }
  CHECK(count[m.node(1, 1, 1)] == 8);
  CHECK(count[m.node(0, 0, 0)] == 1);
  CHECK(count[m.node(0, 1, 1)] == 4);
}

TEST_CASE("face sets have plane sizes and lie on their planes", "[mesh]") {
  const GridMesh m(4, 3, 2);
  const FaceSets f = face_sets(m);
  CHECK(f.bottom.size() == 5 * 4);
  CHECK(f.top.size() == 5 * 4);
  CHECK(f.left.size() == 4 * 3);
  CHECK(f.right.size() == 4 * 3);
  CHECK(f.front.size() == 5 * 3);
  CHECK(f.back.size() == 5 * 3);
  for (Index n : f.top) CHECK(m.node_coords(n)[2] == 2);
  for (Index n : f.right) CHECK(m.node_coords(n)[0] == 4);
  for (Index n : f.back) CHECK(m.node_coords(n)[1] == 3);
  CHECK(std::is_sorted(f.bottom.begin(), f.bottom.end()));
  CHECK(std::is_sorted(f.left.begin(), f.left.end()));
  CHECK(std::is_sorted(f.front.begin(), f.front.end()));
}

TEST_CASE("top face edge curves of the flagship lid mesh hold 144 nodes", "[mesh]") {
  const GridMesh m(48, 24, 24);
  const FaceSets f = face_sets(m);
  auto edges = set_union(set_intersection(f.top, f.left), set_intersection(f.top, f.right));
  edges = set_union(edges, set_intersection(f.top, f.front));
  edges = set_union(edges, set_intersection(f.top, f.back));
  CHECK(edges.size() == 144);
}

TEST_CASE("passive blocks use inclusive fractional ranges", "[mesh]") {
  const double lo = 8.0 / 18.0, hi = 10.0 / 18.0;
  SECTION("36 cubed gives a 5x5x5 block on 6x6x6 nodes") {
    const GridMesh m(36, 36, 36);
    const auto blk = passive_block(m, {lo, lo, lo}, {hi, hi, hi});
    CHECK(blk.size() == 125);
    CHECK(element_nodes(m, blk).size() == 216);
    for (Index e : blk) {
      for (int c : m.element_coords(e)) {
        CHECK(c >= 15);
        CHECK(c <= 19);
      }
    }
  }
  SECTION("18 cubed gives a 3x3x3 block") {
    const GridMesh m(18, 18, 18);
    CHECK(passive_block(m, {lo, lo, lo}, {hi, hi, hi}).size() == 27);
  }
  SECTION("a degenerate box at the origin keeps one element") {
    const GridMesh m(4, 4, 4);
    const auto blk = passive_block(m, {0, 0, 0}, {0, 0, 0});
    REQUIRE(blk.size() == 1);
    CHECK(blk[0] == 0);
  }
  SECTION("the whole box is every element") {
    const GridMesh m(3, 2, 2);
    CHECK(passive_block(m, {0, 0, 0}, {1, 1, 1}).size() == 12);
  }
  SECTION("inverted or out-of-range boxes are rejected") {
    const GridMesh m(4, 4, 4);
    CHECK_THROWS_AS(passive_block(m, {0.5, 0, 0}, {0.4, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(passive_block(m, {-0.1, 0, 0}, {1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(passive_block(m, {0, 0, 0}, {1.5, 1, 1}), InvalidArgument);
  }
}

TEST_CASE("meshes reject non-positive sizes", "[mesh]") {
  CHECK_THROWS_AS(GridMesh(0, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(GridMesh(1, -2, 1), InvalidArgument);
  CHECK_THROWS_AS(GridMesh(1, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(GridMesh(2000, 2000, 2000), InvalidArgument);
}

TEST_CASE("set helpers keep sorted unique output", "[mesh]") {
  const std::vector<Index> a{1, 3, 5, 7}, b{3, 4, 5};
  CHECK(set_intersection(a, b) == std::vector<Index>{3, 5});
  CHECK(set_union(a, b) == std::vector<Index>{1, 3, 4, 5, 7});
}
