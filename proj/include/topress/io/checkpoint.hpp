#pragma once

#include <string>
#include <vector>

#include "topress/common.hpp"
#include "topress/mesh.hpp"
#include "topress/problems.hpp"

namespace topress::io {

/// Saved design state, enough to re-export a finished or interrupted run.
struct Checkpoint {
  int nelx = 0, nely = 0, nelz = 0;
  PresetName preset = PresetName::Lid;
  std::vector<Axis> mirror;
  int iteration = 0;
  Vector xphys;         ///< physical densities, nel values
  Vector x;             ///< design densities, empty if not stored
  Vector pressure;      ///< nodal pressure, empty if not stored
  Vector displacement;  ///< nodal displacement, empty if not stored

  GridMesh mesh() const { return GridMesh(nelx, nely, nelz); }
};

/// JSON with full-precision numbers. Throws IoError if unwritable.
void write_checkpoint(const Checkpoint& cp, const std::string& path);

/// Throws IoError on unreadable or malformed files, including array lengths
/// that do not match the stored dimensions.
Checkpoint read_checkpoint(const std::string& path);

const char* axis_name(Axis a) noexcept;
Axis parse_axis(const std::string& name);

}  // namespace topress::io
