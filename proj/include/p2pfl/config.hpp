#ifndef P2PFL_CONFIG_HPP_
#define P2PFL_CONFIG_HPP_

#include <string>

#include <json.hpp>

#include "p2pfl/experiment.hpp"

namespace p2pfl {

// Parses and validates an experiment config. Parsing is fail-closed: unknown
// keys and out-of-range values are errors with field-path diagnostics. The
// returned config has every default filled in; to_json echoes it back fully
// resolved.
ExperimentConfig parse_config_json(const nlohmann::json& j);
ExperimentConfig parse_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace p2pfl

#endif  // P2PFL_CONFIG_HPP_
