#pragma once

#include <string>
#include <vector>

#include "topress/common.hpp"
#include "topress/mesh.hpp"

namespace topress::io {

/// Isovalue recorded in exported files as the suggested contour level.
inline constexpr double kRecommendedIsovalue = 0.3;

/// Voxel field ready for writing. Arrays are stored x fastest, then y, then z,
/// the order of legacy VTK structured points.
struct VoxelExport {
  int nx = 0, ny = 0, nz = 0;
  std::vector<double> density;       ///< nx·ny·nz cell values
  std::vector<double> pressure;      ///< (nx+1)(ny+1)(nz+1) values, or empty
  std::vector<double> displacement;  ///< 3 per node (x, y, z), or empty
};

/// Reorders mesh fields into VTK order and reflects them across each axis in
/// `mirror`. A mirrored axis doubles: the original occupies the upper half and
/// its reflection the lower half, with the displacement component along that
/// axis negated. `pressure` and `displacement` may be null.
VoxelExport make_voxel_export(const GridMesh& mesh, const Vector& xphys,
                              const std::vector<Axis>& mirror = {},
                              const Vector* pressure = nullptr,
                              const Vector* displacement = nullptr);

/// Legacy ASCII STRUCTURED_POINTS file with CELL_DATA density and optional
/// POINT_DATA pressure / displacement. Throws InvalidArgument on inconsistent
/// sizes or densities outside [0, 1], IoError if the path is unwritable.
void write_vtk(const VoxelExport& data, const std::string& path);

}  // namespace topress::io
