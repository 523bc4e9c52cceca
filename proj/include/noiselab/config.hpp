#pragma once

#include <string>

#include "noiselab/experiments.hpp"

namespace noiselab {

/// Config file not found.
class MissingFileError : public ConfigError {
  public:
    explicit MissingFileError(const std::string& what) : ConfigError(what) {}
};

/// Unknown key or malformed value.
class SchemaError : public ConfigError {
  public:
    explicit SchemaError(const std::string& what) : ConfigError(what) {}
};

/// Parse the flat key = value format (with [section] prefixes, '#' comments).
/// Unknown keys are rejected; defaults are applied for everything absent.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

/// Apply one "key=value" override (CLI flags on top of file keys).
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);

/// Canonical snapshot of the effective config; also the hash input for the
/// run id and the manifest echo.
std::string config_to_string(const ExperimentConfig& cfg);

}  // namespace noiselab
