// params_io.hpp - JSON parameter files
//
// Schema (all keys optional, defaults from ChargingParams):
//   {
//     "units": "g" | "omega0",
//     "omega0": 1.0, "g": 1.0, "F": 2.0, "J": 2.0,
//     "delta_A": 0.0, "delta_B": 0.0,
//     "reservoir": {"kind": "bosonic" | "fermionic", "n": 0.0},
//     "beta": 100.0,
//     "thermo_log_base": "e" | "2"
//   }
// Dotted keys ("reservoir.kind", "reservoir.n") are accepted as well.
// With units "g" the values F, J, delta_A, delta_B are multiples of g; with
// units "omega0" every energy (g included) is a multiple of omega0. beta is
// always given as beta * omega0.

#pragma once

#include <string>

#include <json.hpp>

#include "qbw/model.hpp"

namespace qbw {

struct RunConfig {
    ChargingParams params{};
    LogBase thermo_log_base = LogBase::E;
};

// Throws UsageError on unknown keys, wrong types or invalid values.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Emits the canonical form (units "g").
nlohmann::json config_to_json(const RunConfig& cfg);

LogBase parse_log_base(const std::string& s);

} // namespace qbw
