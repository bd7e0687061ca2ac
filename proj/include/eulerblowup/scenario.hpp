#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "eulerblowup/core_model.hpp"

namespace eb {

// Maps to exit code 64.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
// Maps to exit code 74.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class DataKind { exact, case2, field_file };

struct SolverConfig {
    int cells = 400;
    double cfl = 0.45;
    double x_min = -2.0;
    double x_max = 2.0;
};

struct ScenarioConfig {
    std::string case_label;  // "I" or "II"
    GasParameters gas{1, 3.0};
    double weight_R = 1.0;
    double weight_k = 2.0;
    DataKind kind = DataKind::exact;

    double a0 = 0.0;  // exact-solution data

    double rho_bar = 1.0, p_bar = 1.0, R0 = 0.25;  // case2 data
    double a_rho = 0.0, a_v = 0.0, a_p = 0.0;

    std::string field_path;  // field_file data

    double horizon = 1.0;
    std::optional<SolverConfig> solver;
    std::uint64_t seed = 0;
    int phantom_budget = 10000;
    std::string out_dir = ".";
};

// Parses and validates the JSON text; unknown keys are rejected.
ScenarioConfig parse_scenario(const std::string& json_text);
// Reads the file (IoError) and parses it (ConfigError).
ScenarioConfig load_scenario(const std::string& path);

// The resolved configuration as canonical JSON, embedded in every report.
std::string scenario_to_json(const ScenarioConfig& sc);

}  // namespace eb
