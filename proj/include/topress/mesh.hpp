#pragma once

#include <array>
#include <span>
#include <vector>

#include "topress/common.hpp"

namespace topress {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Structured grid of unit hexahedra.
///
/// Nodes are numbered with y fastest, then z, then x:
///   node(ix, iy, iz) = iy + iz*ndy + ix*ndy*ndz
/// and elements the same way over the element grid. Each element lists its
/// eight nodes bottom face first (z = iz), counter-clockwise seen from +z
/// starting at the (ix, iy) corner, then the top face (z = iz+1) in the same
/// order. Displacement DOFs of node k are 3k, 3k+1, 3k+2 (x, y, z).
///
/// Immutable after construction.
class GridMesh {
 public:
  static constexpr int kNodesPerElement = 8;
  static constexpr int kDofsPerElement = 24;

  /// Throws InvalidArgument for non-positive counts or if 3*nno overflows Index.
  GridMesh(int nelx, int nely, int nelz);

  int nelx() const noexcept { return nelx_; }
  int nely() const noexcept { return nely_; }
  int nelz() const noexcept { return nelz_; }
  int ndx() const noexcept { return nelx_ + 1; }
  int ndy() const noexcept { return nely_ + 1; }
  int ndz() const noexcept { return nelz_ + 1; }
  Index nel() const noexcept { return nel_; }
  Index nno() const noexcept { return nno_; }
  Index ndof() const noexcept { return 3 * nno_; }

  Index node(int ix, int iy, int iz) const noexcept {
    return static_cast<Index>(iy + iz * ndy() + ix * ndy() * ndz());
  }
  Index element(int ix, int iy, int iz) const noexcept {
    return static_cast<Index>(iy + iz * nely_ + ix * nely_ * nelz_);
  }
  /// Grid coordinates (ix, iy, iz) of a node.
  std::array<int, 3> node_coords(Index n) const noexcept;
  /// Grid coordinates (ix, iy, iz) of an element.
  std::array<int, 3> element_coords(Index e) const noexcept;

  std::span<const Index, kNodesPerElement> pressure_dofs(Index e) const noexcept {
    return std::span<const Index, kNodesPerElement>(
        elem_pressure_dofs_.data() + static_cast<std::size_t>(e) * kNodesPerElement,
        kNodesPerElement);
  }
  std::span<const Index, kDofsPerElement> displacement_dofs(Index e) const noexcept {
    return std::span<const Index, kDofsPerElement>(
        elem_disp_dofs_.data() + static_cast<std::size_t>(e) * kDofsPerElement, kDofsPerElement);
  }

  /// Row-major nel x 8 table.
  const std::vector<Index>& pressure_dof_table() const noexcept { return elem_pressure_dofs_; }
  /// Row-major nel x 24 table.
  const std::vector<Index>& displacement_dof_table() const noexcept { return elem_disp_dofs_; }

  bool operator==(const GridMesh&) const = default;

 private:
  int nelx_, nely_, nelz_;
  Index nel_, nno_;
  std::vector<Index> elem_pressure_dofs_;
  std::vector<Index> elem_disp_dofs_;
};

/// Boundary node sets named by grid plane. Each is sorted ascending.
struct FaceSets {
  std::vector<Index> bottom;  // z = 0
  std::vector<Index> top;     // z = nelz
  std::vector<Index> left;    // x = 0
  std::vector<Index> right;   // x = nelx
  std::vector<Index> front;   // y = 0
  std::vector<Index> back;    // y = nely
};

FaceSets face_sets(const GridMesh& mesh);

/// Elements whose grid index lies in the fractional box [lo, hi] (per axis,
/// ordered x, y, z). Fractions map to 1-based inclusive ranges
/// ceil(lo*n) .. floor(hi*n), clamped to [1, n]; the result is sorted.
std::vector<Index> passive_block(const GridMesh& mesh, const std::array<double, 3>& lo,
                                 const std::array<double, 3>& hi);

/// Sorted unique nodes touched by the given elements.
std::vector<Index> element_nodes(const GridMesh& mesh, std::span<const Index> elements);

/// Sorted intersection / union helpers for node sets.
std::vector<Index> set_intersection(std::span<const Index> a, std::span<const Index> b);
std::vector<Index> set_union(std::span<const Index> a, std::span<const Index> b);

}  // namespace topress
