#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gda/generate.hpp"
#include "gda/gmsa.hpp"
#include "gda/types.hpp"

namespace gda {

// Everything a run needs, loadable from one JSON document. Paths inside the
// generator (trace files, ratio files) are resolved against the scenario
// file's directory at load time.
struct Scenario {
    SystemConfig system;
    GeneratorSpec generator;
    int horizon = 288;  // slots; 288 five-minute slots per day
    std::vector<double> v_values = {1.0};
    std::vector<std::string> schedulers = {"gmsa"};
    TieBreak tie_break = TieBreak::lowest_index;
    int replications = 1;
    std::string output_dir = "out";
};

// Malformed scenario documents: JSON syntax, missing keys, wrong types.
class ScenarioError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The file itself could not be read or written, as opposed to bad content.
class ScenarioIoError : public ScenarioError {
    using ScenarioError::ScenarioError;
};

Scenario load_scenario(const std::filesystem::path& path);
Scenario scenario_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
nlohmann::json scenario_to_json(const Scenario& scenario);
void save_scenario(const std::filesystem::path& path, const Scenario& scenario);

// Config with generator-produced allocation ratios applied (when requested).
// Structural problems surface as ScenarioError; value problems are left to
// validate_scenario so a validate command can report them all.
SystemConfig materialize_config(const Scenario& scenario);

// Config checks against the materialized config plus generator checks.
ValidationResult validate_scenario(const Scenario& scenario);

}  // namespace gda
