#include "topress/problems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace topress {

PresetName parse_preset_name(std::string_view name) {
  if (name == "lid") return PresetName::Lid;
  if (name == "extpress") return PresetName::ExtPress;
  if (name == "dam") return PresetName::Dam;
  if (name == "hull") return PresetName::Hull;
  throw InvalidArgument("unknown preset '" + std::string(name) +
                        "' (expected lid, extpress, dam or hull)");
}

const char* to_string(PresetName name) noexcept {
  switch (name) {
    case PresetName::Lid: return "lid";
    case PresetName::ExtPress: return "extpress";
    case PresetName::Dam: return "dam";
    case PresetName::Hull: return "hull";
  }
  return "?";
}

std::vector<Index> ProblemPreset::active_elements(Index nel) const {
  std::vector<char> passive(static_cast<std::size_t>(nel), 0);
  for (Index e : passive_solid) passive[e] = 1;
  for (Index e : passive_void) passive[e] = 1;
  std::vector<Index> act;
  for (Index e = 0; e < nel; ++e) {
    if (!passive[e]) act.push_back(e);
  }
  return act;
}

namespace {

void add_pressure(PressureBC& bc, std::span<const Index> nodes, double value) {
  for (Index n : nodes) {
    bc.fixed_dofs.push_back(n);
    bc.fixed_values.push_back(value);
  }
}

enum Component : int { kX = 1, kY = 2, kZ = 4, kAll = 7 };

void add_supports(std::vector<Index>& dofs, std::span<const Index> nodes, int components) {
  for (Index n : nodes) {
    for (int c = 0; c < 3; ++c) {
      if (components & (1 << c)) dofs.push_back(3 * n + c);
    }
  }
}

void finish_supports(DisplacementBC& bc) {
  auto& d = bc.fixed_dofs;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
}

}  // namespace

ProblemPreset make_preset(PresetName name, const GridMesh& mesh, double pin) {
  if (!std::isfinite(pin)) throw InvalidArgument("preset: inlet pressure must be finite");
  const FaceSets f = face_sets(mesh);
  ProblemPreset p;
  p.name = name;
  auto& sup = p.displacement_bc.fixed_dofs;

  switch (name) {
    case PresetName::Lid: {
      add_pressure(p.pressure_bc, f.top, pin);
      add_pressure(p.pressure_bc, f.bottom, 0.0);
      auto edges = set_union(set_intersection(f.top, f.left), set_intersection(f.top, f.right));
      edges = set_union(edges, set_intersection(f.top, f.front));
      edges = set_union(edges, set_intersection(f.top, f.back));
      add_supports(sup, edges, kAll);
      break;
    }
    case PresetName::ExtPress: {
      add_pressure(p.pressure_bc, f.top, pin);
      add_pressure(p.pressure_bc, f.bottom, 0.0);
      add_supports(sup, set_intersection(f.bottom, f.right), kAll);
      add_supports(sup, f.left, kX);
      add_supports(sup, f.right, kX | kY);
      p.mirror = {Axis::X};
      break;
    }
    case PresetName::Dam: {
      add_pressure(p.pressure_bc, f.back, pin);
      add_pressure(p.pressure_bc, f.front, 0.0);
      add_supports(sup, set_union(f.bottom, f.right), kAll);
      add_supports(sup, f.left, kX);
      p.mirror = {Axis::X};
      break;
    }
    case PresetName::Hull: {
      const double lo = 8.0 / 18.0, hi = 10.0 / 18.0;
      p.passive_void = passive_block(mesh, {lo, lo, lo}, {hi, hi, hi});
      const auto void_nodes = element_nodes(mesh, p.passive_void);
      auto outer = set_union(f.bottom, f.top);
      outer = set_union(outer, f.left);
      outer = set_union(outer, f.right);
      outer = set_union(outer, f.front);
      outer = set_union(outer, f.back);
      if (!set_intersection(outer, void_nodes).empty()) {
        throw InvalidArgument("hull: mesh too coarse, the void block touches the outer faces");
      }
      add_pressure(p.pressure_bc, outer, pin);
      add_pressure(p.pressure_bc, void_nodes, 0.0);
      add_supports(sup, void_nodes, kAll);
      break;
    }
  }
  finish_supports(p.displacement_bc);
  p.pressure_bc.validate(mesh.nno());
  p.displacement_bc.validate(mesh.ndof());
  return p;
}

Vector initial_design(const GridMesh& mesh, const ProblemPreset& preset, double volfrac) {
  if (!(volfrac > 0.0 && volfrac <= 1.0)) {
    throw InvalidArgument("initial_design: volfrac must lie in (0, 1]");
  }
  const Index nel = mesh.nel();
  const auto act = preset.active_elements(nel);
  if (act.empty()) throw InvalidArgument("initial_design: no active elements");
  const double nvoid = static_cast<double>(preset.passive_void.size());
  const double nsolid = static_cast<double>(preset.passive_solid.size());
  const double value = (volfrac * (static_cast<double>(nel) - nvoid) - nsolid) /
                       static_cast<double>(act.size());
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument("initial_design: volfrac incompatible with the passive regions (start "
                          "density " + std::to_string(value) + ")");
  }
  Vector x = Vector::Zero(nel);
  for (Index e : act) x[e] = value;
  for (Index e : preset.passive_solid) x[e] = 1.0;
  return x;
}

}  // namespace topress
