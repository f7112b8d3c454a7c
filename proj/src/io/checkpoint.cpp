#include "topress/io/checkpoint.hpp"

#include <fstream>

#include "json.hpp"

namespace topress::io {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "topress3d-checkpoint";
constexpr int kVersion = 1;

json to_array(const Vector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Vector from_array(const json& j, Eigen::Index expected, const char* name) {
  const auto values = j.get<std::vector<double>>();
  if (static_cast<Eigen::Index>(values.size()) != expected) {
    throw IoError(std::string("checkpoint: '") + name + "' has " + std::to_string(values.size()) +
                  " entries, expected " + std::to_string(expected));
  }
  return Eigen::Map<const Vector>(values.data(), expected);
}

}  // namespace

const char* axis_name(Axis a) noexcept {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis parse_axis(const std::string& name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  if (name == "z") return Axis::Z;
  throw InvalidArgument("unknown axis '" + name + "' (expected x, y or z)");
}

void write_checkpoint(const Checkpoint& cp, const std::string& path) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["nelx"] = cp.nelx;
  j["nely"] = cp.nely;
  j["nelz"] = cp.nelz;
  j["preset"] = to_string(cp.preset);
  j["mirror"] = json::array();
  for (Axis a : cp.mirror) j["mirror"].push_back(axis_name(a));
  j["iteration"] = cp.iteration;
  j["xphys"] = to_array(cp.xphys);
  if (cp.x.size() > 0) j["x"] = to_array(cp.x);
  if (cp.pressure.size() > 0) j["pressure"] = to_array(cp.pressure);
  if (cp.displacement.size() > 0) j["displacement"] = to_array(cp.displacement);

  std::ofstream out(path);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path);
  out << j.dump() << '\n';
  if (!out) throw IoError("failed writing checkpoint: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint: " + path);
  try {
    const json j = json::parse(in);
    if (j.value("format", std::string()) != kFormat) {
      throw IoError("checkpoint: not a topress3d checkpoint: " + path);
    }
    if (j.at("version").get<int>() != kVersion) {
      throw IoError("checkpoint: unsupported version in " + path);
    }
    Checkpoint cp;
    cp.nelx = j.at("nelx").get<int>();
    cp.nely = j.at("nely").get<int>();
    cp.nelz = j.at("nelz").get<int>();
    const GridMesh mesh = cp.mesh();
    cp.preset = parse_preset_name(j.at("preset").get<std::string>());
    for (const auto& a : j.at("mirror")) cp.mirror.push_back(parse_axis(a.get<std::string>()));
    cp.iteration = j.at("iteration").get<int>();
    cp.xphys = from_array(j.at("xphys"), mesh.nel(), "xphys");
    if (j.contains("x")) cp.x = from_array(j.at("x"), mesh.nel(), "x");
    if (j.contains("pressure")) cp.pressure = from_array(j.at("pressure"), mesh.nno(), "pressure");
    if (j.contains("displacement")) {
      cp.displacement = from_array(j.at("displacement"), mesh.ndof(), "displacement");
    }
    return cp;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError("checkpoint: malformed file " + path + ": " + e.what());
  }
}

}  // namespace topress::io
