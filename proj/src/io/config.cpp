#include "topress/io/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace topress::io {

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"problem", "preset", "benchmark: lid, extpress, dam or hull", true},
      {"problem", "nelx", "elements along x", true},
      {"problem", "nely", "elements along y", true},
      {"problem", "nelz", "elements along z", true},
      {"problem", "pin", "inlet pressure (default 1)", false},
      {"optimization", "volfrac", "volume fraction in (0, 1]", true},
      {"optimization", "penal", "SIMP penalty (default 3)", false},
      {"optimization", "rmin", "filter radius in elements (default sqrt(3))", false},
      {"optimization", "lst", "include load sensitivities, 0 or 1 (default 1)", false},
      {"optimization", "maxit", "maximum iterations (default 100)", false},
      {"optimization", "move", "external move limit (default 0.1)", false},
      {"optimization", "tol", "stop when the design change is <= tol (default 1e-4)", false},
      {"optimization", "norm-target", "normalized first-iteration objective (default 1000)",
       false},
      {"optimization", "filter", "filter backend: convolution or matrix", false},
      {"flow", "etaf", "flow projection step eta (default 0.2)", false},
      {"flow", "betaf", "flow projection slope beta (default 10)", false},
      {"flow", "kv", "void flow coefficient (default 1)", false},
      {"flow", "epsf", "flow contrast (default 1e-7)", false},
      {"flow", "r", "pressure drop ratio (default 0.1)", false},
      {"flow", "dels", "penetration depth in elements (default 2)", false},
      {"material", "e1", "solid Young's modulus (default 1)", false},
      {"material", "emin", "void Young's modulus (default 1e-5)", false},
      {"material", "nu", "Poisson ratio (default 0.3)", false},
      {"mma", "a0", "MMA a0 (default 1)", false},
      {"mma", "c", "MMA c (default 1000)", false},
      {"mma", "d", "MMA d (default 0)", false},
      {"mma", "asyinit", "initial asymptote distance (default 0.5)", false},
      {"mma", "asyincr", "asymptote growth factor (default 1.2)", false},
      {"mma", "asydecr", "asymptote shrink factor (default 0.7)", false},
      {"mma", "albefa", "inner bound factor (default 0.1)", false},
      {"mma", "raa0", "regularization (default 1e-5)", false},
      {"mma", "asymptote-box", "asymptote scale: move or global (default move)", false},
      {"output", "history", "CSV history path", false},
      {"output", "vtk", "final density VTK path", false},
      {"output", "checkpoint", "final checkpoint JSON path", false},
  };
  return keys;
}

namespace {

const ConfigKey* find_key(const std::string& name) {
  for (const auto& k : config_keys()) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

double to_double(const std::string& field, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end == text.c_str() || *end != '\0' || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ConfigError(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

int to_int(const std::string& field, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno == ERANGE || v < -1000000000 || v > 1000000000) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

bool to_flag(const std::string& field, const std::string& text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw ConfigError(field, "expected 0 or 1, got '" + text + "'");
}

template <class Fn>
auto wrap(const std::string& field, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

ConfigValues read_config_file(const std::string& path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw IoError("cannot read config file: " + std::string(e.what()));
  }
  ConfigValues values;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError(section, "key outside of any section");
    for (const auto& [key, node] : body) {
      const ConfigKey* k = find_key(key);
      if (!k) throw ConfigError(section + "." + key, "unknown key");
      if (section != k->section) {
        throw ConfigError(section + "." + key,
                          "belongs in section [" + std::string(k->section) + "]");
      }
      values[key] = node.get_value<std::string>();
    }
  }
  return values;
}

ConfigValues merge_config(ConfigValues base, const ConfigValues& overrides) {
  for (const auto& [k, v] : overrides) base[k] = v;
  return base;
}

RunConfig make_run_config(const ConfigValues& values) {
  for (const auto& [k, v] : values) {
    if (!find_key(k)) throw ConfigError(k, "unknown key");
  }
  std::string missing, first_missing;
  for (const auto& k : config_keys()) {
    if (k.required && !values.count(k.name)) {
      if (first_missing.empty()) first_missing = k.name;
      missing += missing.empty() ? k.name : std::string(", ") + k.name;
    }
  }
  if (!missing.empty()) {
    throw ConfigError(first_missing, "missing required field(s): " + missing);
  }

  RunConfig c;
  for (const auto& [key, text] : values) {
    const std::string& f = key;
    if (f == "preset") c.preset = wrap(f, [&] { return parse_preset_name(text); });
    else if (f == "nelx") c.nelx = to_int(f, text);
    else if (f == "nely") c.nely = to_int(f, text);
    else if (f == "nelz") c.nelz = to_int(f, text);
    else if (f == "pin") c.pin = to_double(f, text);
    else if (f == "volfrac") c.volfrac = to_double(f, text);
    else if (f == "penal") c.elastic.penal = to_double(f, text);
    else if (f == "rmin") c.rmin = to_double(f, text);
    else if (f == "lst") c.lst = to_flag(f, text);
    else if (f == "maxit") c.maxit = to_int(f, text);
    else if (f == "move") c.move_limit = to_double(f, text);
    else if (f == "tol") c.change_tol = to_double(f, text);
    else if (f == "norm-target") c.norm_target = to_double(f, text);
    else if (f == "filter") c.filter = wrap(f, [&] { return parse_filter_backend(text); });
    else if (f == "etaf") c.flow.eta = to_double(f, text);
    else if (f == "betaf") c.flow.beta = to_double(f, text);
    else if (f == "kv") c.flow.kv = to_double(f, text);
    else if (f == "epsf") c.flow.epsf = to_double(f, text);
    else if (f == "r") c.flow.r = to_double(f, text);
    else if (f == "dels") c.flow.dels = to_double(f, text);
    else if (f == "e1") c.elastic.e1 = to_double(f, text);
    else if (f == "emin") c.elastic.emin = to_double(f, text);
    else if (f == "nu") c.elastic.nu = to_double(f, text);
    else if (f == "a0") c.mma.a0 = to_double(f, text);
    else if (f == "c") c.mma.c = to_double(f, text);
    else if (f == "d") c.mma.d = to_double(f, text);
    else if (f == "asyinit") c.mma.asyinit = to_double(f, text);
    else if (f == "asyincr") c.mma.asyincr = to_double(f, text);
    else if (f == "asydecr") c.mma.asydecr = to_double(f, text);
    else if (f == "albefa") c.mma.albefa = to_double(f, text);
    else if (f == "raa0") c.mma.raa0 = to_double(f, text);
    else if (f == "asymptote-box") c.mma.box = wrap(f, [&] { return parse_asymptote_box(text); });
    else if (f == "history") c.history_path = text;
    else if (f == "vtk") c.vtk_path = text;
    else if (f == "checkpoint") c.checkpoint_path = text;
  }
  c.validate();
  return c;
}

}  // namespace topress::io
