#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hopwheel/controller.hpp"
#include "hopwheel/reference.hpp"
#include "hopwheel/robot_params.hpp"
#include "hopwheel/simulator.hpp"

namespace hopwheel {

/// Configuration rejection with the offending key path in the message.
struct ConfigError : std::runtime_error {
    ConfigError(std::string key_path, const std::string& msg)
        : std::runtime_error(key_path.empty() ? msg : key_path + ": " + msg),
          key(std::move(key_path)) {}
    std::string key;
};

struct OutputConfig {
    std::string dir = "out";
    bool trajectory_csv = true;
    bool metrics_json = true;
    bool diagnostics_json = true;
};

/// A fully resolved run configuration. All physical quantities are SI.
struct Scenario {
    RobotParams robot;
    ControllerConfig controller;
    ReferenceProfile profile;
    std::string profile_name;  ///< non-empty when the profile is a named builtin
    SimConfig sim;
    OutputConfig output;
};

/// Base configuration document for a named builtin scenario
/// ("vertical" or "horizontal").
nlohmann::json builtin_scenario_json(const std::string& name);

/// Reads and parses a JSON configuration file.
nlohmann::json load_scenario_json(const std::string& path);

/// Applies a `key.path=value` override onto a configuration document.
/// Dotted paths descend into objects (numeric tokens index arrays); the
/// value is parsed as JSON, falling back to a plain string. Overriding
/// below `profile` first expands a named profile into its segment list.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Validates the document (unknown keys are rejected, values checked) and
/// resolves defaults into a runnable Scenario. The hoop inertia defaults
/// to the thin-hoop value m_o R² when not given; the controller clamp
/// defaults to the robot torque limit.
Scenario parse_scenario(const nlohmann::json& doc);

/// Effective configuration of a resolved scenario; feeding the dump back
/// through parse_scenario reproduces the same scenario.
nlohmann::json dump_scenario(const Scenario& scenario);

nlohmann::json profile_to_json(const ReferenceProfile& profile);

}  // namespace hopwheel
