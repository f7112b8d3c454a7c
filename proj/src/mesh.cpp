#include "topress/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace topress {

namespace {

// Local node offsets (dx, dy, dz) in element order.
constexpr std::array<std::array<int, 3>, 8> kLocalOffsets{{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
}};

}  // namespace

GridMesh::GridMesh(int nelx, int nely, int nelz) : nelx_(nelx), nely_(nely), nelz_(nelz) {
  if (nelx < 1 || nely < 1 || nelz < 1) {
    throw InvalidArgument("element counts must be >= 1, got (" + std::to_string(nelx) + ", " +
                          std::to_string(nely) + ", " + std::to_string(nelz) + ")");
  }
  const auto nno = static_cast<long long>(nelx + 1) * (nely + 1) * (nelz + 1);
  const auto nel = static_cast<long long>(nelx) * nely * nelz;
  if (3 * nno > std::numeric_limits<Index>::max()) {
    throw InvalidArgument("mesh too large: 3*nno exceeds 32-bit index range");
  }
  nel_ = static_cast<Index>(nel);
  nno_ = static_cast<Index>(nno);

  elem_pressure_dofs_.resize(static_cast<std::size_t>(nel_) * kNodesPerElement);
  elem_disp_dofs_.resize(static_cast<std::size_t>(nel_) * kDofsPerElement);
  for (int ix = 0; ix < nelx_; ++ix) {
    for (int iz = 0; iz < nelz_; ++iz) {
      for (int iy = 0; iy < nely_; ++iy) {
        const Index e = element(ix, iy, iz);
        Index* pd = elem_pressure_dofs_.data() + static_cast<std::size_t>(e) * kNodesPerElement;
        Index* ud = elem_disp_dofs_.data() + static_cast<std::size_t>(e) * kDofsPerElement;
        for (int k = 0; k < kNodesPerElement; ++k) {
          const auto& o = kLocalOffsets[k];
          const Index n = node(ix + o[0], iy + o[1], iz + o[2]);
          pd[k] = n;
          ud[3 * k] = 3 * n;
          ud[3 * k + 1] = 3 * n + 1;
          ud[3 * k + 2] = 3 * n + 2;
        }
      }
    }
  }
}

std::array<int, 3> GridMesh::node_coords(Index n) const noexcept {
  const int plane = ndy() * ndz();
  const int ix = n / plane;
  const int rem = n % plane;
  return {ix, rem % ndy(), rem / ndy()};
}

std::array<int, 3> GridMesh::element_coords(Index e) const noexcept {
  const int plane = nely_ * nelz_;
  const int ix = e / plane;
  const int rem = e % plane;
  return {ix, rem % nely_, rem / nely_};
}

FaceSets face_sets(const GridMesh& mesh) {
  FaceSets f;
  const int ndx = mesh.ndx(), ndy = mesh.ndy(), ndz = mesh.ndz();
  // Node numbering is monotone in (ix, iz, iy) lexicographic order, so these
  // loop orders produce sorted sets directly.
  for (int ix = 0; ix < ndx; ++ix) {
    for (int iy = 0; iy < ndy; ++iy) {
      f.bottom.push_back(mesh.node(ix, iy, 0));
      f.top.push_back(mesh.node(ix, iy, ndz - 1));
    }
  }
  for (int iz = 0; iz < ndz; ++iz) {
    for (int iy = 0; iy < ndy; ++iy) {
      f.left.push_back(mesh.node(0, iy, iz));
      f.right.push_back(mesh.node(ndx - 1, iy, iz));
    }
  }
  for (int ix = 0; ix < ndx; ++ix) {
    for (int iz = 0; iz < ndz; ++iz) {
      f.front.push_back(mesh.node(ix, 0, iz));
      f.back.push_back(mesh.node(ix, ndy - 1, iz));
    }
  }
  return f;
}

std::vector<Index> passive_block(const GridMesh& mesh, const std::array<double, 3>& lo,
                                 const std::array<double, 3>& hi) {
  const std::array<int, 3> n{mesh.nelx(), mesh.nely(), mesh.nelz()};
  std::array<int, 3> first{}, last{};
  for (int a = 0; a < 3; ++a) {
    if (!(lo[a] >= 0.0 && hi[a] <= 1.0 && lo[a] <= hi[a])) {
      throw InvalidArgument("passive_block: need 0 <= lo <= hi <= 1 on every axis");
    }
    // Tolerance absorbs fractions like 8/18 * 36 = 16.000000000000004.
    constexpr double tol = 1e-9;
    first[a] = std::max(1, static_cast<int>(std::ceil(lo[a] * n[a] - tol)));
    last[a] = std::clamp(static_cast<int>(std::floor(hi[a] * n[a] + tol)), 1, n[a]);
  }
  std::vector<Index> out;
  for (int ix = first[0]; ix <= last[0]; ++ix) {
    for (int iz = first[2]; iz <= last[2]; ++iz) {
      for (int iy = first[1]; iy <= last[1]; ++iy) {
        out.push_back(mesh.element(ix - 1, iy - 1, iz - 1));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> element_nodes(const GridMesh& mesh, std::span<const Index> elements) {
  std::vector<Index> out;
  out.reserve(elements.size() * GridMesh::kNodesPerElement);
  for (Index e : elements) {
    for (Index n : mesh.pressure_dofs(e)) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> set_intersection(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> set_union(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace topress
