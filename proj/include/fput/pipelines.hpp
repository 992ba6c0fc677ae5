#pragma once

#include <string>
#include <vector>

#include "fput/config.hpp"

namespace fput {

struct Check {
    std::string pipeline;
    std::string name;
    bool passed = false;
    double value = 0.0;
    // Human-readable pass condition, e.g. "< 1e-10".
    std::string condition;
};

struct RunResult {
    std::vector<Check> checks;
    // Paths relative to the output directory, in write order; manifest.json is last.
    std::vector<std::string> artifacts;
    int exit_code = 0;
    std::string error;
    double wall_seconds = 0.0;
};

// Exit status: 0 all checks pass, 1 some check failed, 2 invalid configuration, 3 numerical failure.
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfigInvalid = 2;
inline constexpr int kExitNumericalFailure = 3;

// Runs the configured pipeline, writing artifacts and manifest.json into cfg.output_dir.
RunResult run(const RunConfig& cfg);

// Version string baked in at configure time.
const char* version_string();

}  // namespace fput
