#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fput/params.hpp"

namespace fput {

enum class Command { Dispersion, Spectral, Nondegeneracy, Profile, Beale, Simulate, FullReport };
enum class OutputFormat { Csv, Json, Both };

const char* to_string(Command c);
Command parse_command(const std::string& name);

struct RunConfig {
    Command command = Command::FullReport;
    // "mass" or "spring"; selects defaults for kappa and w when they are not given.
    std::string dimer = "mass";
    DimerParams params = DimerParams::make(1.0, 1.0, 2.0);

    double tol = 1e-11;
    std::uint64_t seed = 0xD1E4;

    std::vector<double> deltas{0.0025, 0.01, 0.04};
    double root_scan_upper = 50.0;

    int spectral_states = 20;
    double contour_radius = 0.3;
    int contour_nodes = 256;

    std::vector<double> eps_list{0.4, 0.3, 0.2};
    double alpha = 0.0;
    int profile_points = 1024;
    double profile_half_length = 20.0;
    std::vector<double> normal_form_nu{0.1, 0.5};

    std::vector<double> nu_list{0.4, 0.3, 0.25, 0.2};
    int modes = 0;
    double domain_half_length = 0.0;
    double length_factor = 30.0;
    double k_max = 12.0;
    double branch_nu = 0.2;
    std::vector<double> branch_amplitudes{1e-3, 2e-3, 4e-3};
    int branch_modes = 24;

    double sim_nu = 0.25;
    double sim_dt = 0.005;
    double sim_time_factor = 50.0;
    int sim_snapshots = 20;
    double kdv_T0 = 1.0;
    int kdv_sites = 800;

    std::string output_dir = "fput_out";
    OutputFormat format = OutputFormat::Both;

    // Throws ConfigInvalid naming the violated condition.
    void validate() const;
};

struct ConfigKey {
    std::string name;
    std::string help;
};

// Every dotted key accepted in files and by --set, with a one-line description and default.
std::vector<ConfigKey> config_keys();

// Parses "[section]" headers and "key = value" lines ('#' starts a comment).  Overrides are
// dotted keys applied after the file, so flags take precedence.  Unknown keys are rejected.
RunConfig parse_config(const std::string& file_text,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Dotted key -> value text for every knob, in a fixed order.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg);

}  // namespace fput
