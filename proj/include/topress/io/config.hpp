#pragma once

#include <map>
#include <string>
#include <vector>

#include "topress/driver.hpp"

namespace topress::io {

/// One configuration field. The name doubles as the CLI flag (--name) and the
/// key inside its INI section.
struct ConfigKey {
  const char* section;
  const char* name;
  const char* help;
  bool required;
};

const std::vector<ConfigKey>& config_keys();

/// Raw field values keyed by field name.
using ConfigValues = std::map<std::string, std::string>;

/// Reads an INI file with sections [problem], [optimization], [flow],
/// [material], [mma] and [output]. Throws ConfigError for unknown sections or
/// keys and IoError for unreadable files.
ConfigValues read_config_file(const std::string& path);

/// `base` overridden by `overrides`.
ConfigValues merge_config(ConfigValues base, const ConfigValues& overrides);

/// Converts raw values into a validated RunConfig with defaults for every
/// optional field. Throws ConfigError naming the offending field: unknown
/// key, unparsable or out-of-range value, or missing required fields (all of
/// them are listed).
RunConfig make_run_config(const ConfigValues& values);

}  // namespace topress::io
