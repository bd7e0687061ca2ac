#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eulerblowup/scenario.hpp"

namespace eb {

// Process exit codes used by the CLI.
inline constexpr int kExitSmooth = 0;          // no certificate, bounds hold
inline constexpr int kExitBlowup = 2;          // blowup certified
inline constexpr int kExitViolation = 3;       // a guaranteed bound was violated
inline constexpr int kExitBadConfig = 64;      // unusable configuration
inline constexpr int kExitIo = 74;             // filesystem trouble
inline constexpr int kExitInternal = 70;       // unexpected failure

// Each command reads the scenario, writes its outputs under sc.out_dir and
// returns an exit code. IoError / ConfigError propagate to the caller.
int cmd_constants(const ScenarioConfig& sc);
int cmd_analyze(const ScenarioConfig& sc);
int cmd_figures(const ScenarioConfig& sc);
int cmd_phantom(const ScenarioConfig& sc);

// Loads the config, applies overrides and dispatches. All exceptions are
// converted into exit codes here; diagnostics go to stderr.
int run_command(const std::string& name, const std::string& config_path,
                const std::optional<std::string>& out_override,
                const std::optional<std::uint64_t>& seed_override);

}  // namespace eb
