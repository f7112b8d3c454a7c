#include "topress/io/vtk.hpp"

#include <array>
#include <cstdio>
#include <fstream>

namespace topress::io {

namespace {

// Source index along one axis of a (possibly mirrored) grid with `n` original
// intervals. Cells: mirrored range [0, 2n); nodes: [0, 2n].
int cell_source(int o, int n, bool mirrored) {
  if (!mirrored) return o;
  return o >= n ? o - n : n - 1 - o;
}

int node_source(int o, int n, bool mirrored) {
  if (!mirrored) return o;
  return o >= n ? o - n : n - o;
}

}  // namespace

VoxelExport make_voxel_export(const GridMesh& mesh, const Vector& xphys,
                              const std::vector<Axis>& mirror, const Vector* pressure,
                              const Vector* displacement) {
  if (xphys.size() != mesh.nel()) throw InvalidArgument("export: density has wrong length");
  if (pressure && pressure->size() != mesh.nno()) {
    throw InvalidArgument("export: pressure has wrong length");
  }
  if (displacement && displacement->size() != mesh.ndof()) {
    throw InvalidArgument("export: displacement has wrong length");
  }
  std::array<bool, 3> m{false, false, false};
  for (Axis a : mirror) m[static_cast<int>(a)] = true;
  const std::array<int, 3> n{mesh.nelx(), mesh.nely(), mesh.nelz()};

  VoxelExport out;
  out.nx = n[0] * (m[0] ? 2 : 1);
  out.ny = n[1] * (m[1] ? 2 : 1);
  out.nz = n[2] * (m[2] ? 2 : 1);

  out.density.reserve(static_cast<std::size_t>(out.nx) * out.ny * out.nz);
  for (int oz = 0; oz < out.nz; ++oz) {
    for (int oy = 0; oy < out.ny; ++oy) {
      for (int ox = 0; ox < out.nx; ++ox) {
        const Index e = mesh.element(cell_source(ox, n[0], m[0]), cell_source(oy, n[1], m[1]),
                                     cell_source(oz, n[2], m[2]));
        out.density.push_back(xphys[e]);
      }
    }
  }

  if (pressure || displacement) {
    for (int oz = 0; oz <= out.nz; ++oz) {
      for (int oy = 0; oy <= out.ny; ++oy) {
        for (int ox = 0; ox <= out.nx; ++ox) {
          const std::array<int, 3> o{ox, oy, oz};
          std::array<int, 3> s{};
          std::array<double, 3> sign{1.0, 1.0, 1.0};
          for (int a = 0; a < 3; ++a) {
            s[a] = node_source(o[a], n[a], m[a]);
            if (m[a] && o[a] < n[a]) sign[a] = -1.0;
          }
          const Index k = mesh.node(s[0], s[1], s[2]);
          if (pressure) out.pressure.push_back((*pressure)[k]);
          if (displacement) {
            for (int a = 0; a < 3; ++a) out.displacement.push_back(sign[a] * (*displacement)[3 * k + a]);
          }
        }
      }
    }
  }
  return out;
}

void write_vtk(const VoxelExport& d, const std::string& path) {
  const auto ncell = static_cast<std::size_t>(d.nx) * d.ny * d.nz;
  const auto nnode = static_cast<std::size_t>(d.nx + 1) * (d.ny + 1) * (d.nz + 1);
  if (d.nx < 1 || d.ny < 1 || d.nz < 1 || d.density.size() != ncell) {
    throw InvalidArgument("write_vtk: density count does not match the dimensions");
  }
  if (!d.pressure.empty() && d.pressure.size() != nnode) {
    throw InvalidArgument("write_vtk: pressure count does not match the dimensions");
  }
  if (!d.displacement.empty() && d.displacement.size() != 3 * nnode) {
    throw InvalidArgument("write_vtk: displacement count does not match the dimensions");
  }
  for (double v : d.density) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("write_vtk: density outside [0, 1]");
  }

  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("cannot open VTK file for writing: " + path);
  std::fprintf(f, "# vtk DataFile Version 3.0\n");
  std::fprintf(f, "topress3d density field, recommended isovalue %.1f\n", kRecommendedIsovalue);
  std::fprintf(f, "ASCII\nDATASET STRUCTURED_POINTS\n");
  std::fprintf(f, "DIMENSIONS %d %d %d\n", d.nx + 1, d.ny + 1, d.nz + 1);
  std::fprintf(f, "ORIGIN 0 0 0\nSPACING 1 1 1\n");
  std::fprintf(f, "CELL_DATA %zu\nSCALARS density double 1\nLOOKUP_TABLE default\n", ncell);
  for (double v : d.density) std::fprintf(f, "%.17g\n", v);
  if (!d.pressure.empty() || !d.displacement.empty()) {
    std::fprintf(f, "POINT_DATA %zu\n", nnode);
    if (!d.pressure.empty()) {
      std::fprintf(f, "SCALARS pressure double 1\nLOOKUP_TABLE default\n");
      for (double v : d.pressure) std::fprintf(f, "%.17g\n", v);
    }
    if (!d.displacement.empty()) {
      std::fprintf(f, "VECTORS displacement double\n");
      for (std::size_t i = 0; i < d.displacement.size(); i += 3) {
        std::fprintf(f, "%.17g %.17g %.17g\n", d.displacement[i], d.displacement[i + 1],
                     d.displacement[i + 2]);
      }
    }
  }
  const bool ok = std::ferror(f) == 0;
  if (std::fclose(f) != 0 || !ok) throw IoError("failed writing VTK file: " + path);
}

}  // namespace topress::io
