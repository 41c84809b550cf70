#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "btzharvest/quadrature.hpp"
#include "btzharvest/sweep.hpp"

namespace btzharvest {

/// Raw key -> value text from a run configuration.
///
/// The file format is one `key = value` per line; `#` starts a comment and
/// blank lines are ignored. Only the keys in config_keys() are accepted.
using ConfigValues = std::map<std::string, std::string>;

const std::vector<std::string>& config_keys();

/// Throws DomainError (with the line number) on malformed lines or unknown keys.
ConfigValues parse_config(std::istream& in);
ConfigValues load_config_file(const std::string& path);

/// Sets or replaces one key, with the same key check as the parser.
void set_config_value(ConfigValues& values, const std::string& key, const std::string& value);

/// Physical point from the parameter keys; missing keys keep ExperimentPoint defaults.
ExperimentPoint point_from(const ConfigValues& values);

/// quad.* keys over the QuadratureSettings defaults.
QuadratureSettings quadrature_from(const ConfigValues& values);

/// Full sweep description; axis.name, axis.min, axis.max and axis.count are required.
SweepSpec sweep_spec_from(const ConfigValues& values);

}  // namespace btzharvest
