// Plain key=value configuration files, flag merging and the canonical
// serialization used for config echo and hashing.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "growthnet/harness.hpp"

namespace growthnet {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "key=value" lines ('#' comments and blank lines ignored).
// Unknown keys and malformed values raise ConfigError naming the key.
SimConfig parse_config_text(const std::string& text,
                            const SimConfig& defaults = {});
SimConfig parse_config_file(const std::string& path,
                            const SimConfig& defaults = {});

// Applies one key to a config; used by both the file parser and the CLI
// flag layer so both accept the identical key set.
void apply_config_key(SimConfig& config, const std::string& key,
                      const std::string& value);

// Canonical serialization; parse_config_text round-trips it exactly.
std::string serialize_config(const SimConfig& config);

// FNV-1a over the canonical serialization.
std::string config_hash(const SimConfig& config);

std::string to_string(CollabBase c);

} // namespace growthnet
