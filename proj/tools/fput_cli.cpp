#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fput/config.hpp"
#include "fput/error.hpp"
#include "fput/pipelines.hpp"

namespace {

std::string key_table() {
    std::ostringstream os;
    os << "\nConfiguration keys (file sections [section] key = value, or --set section.key=value):\n";
    for (const auto& k : fput::config_keys()) os << "  " << k.name << "  " << k.help << "\n";
    os << "\nExit status: 0 all embedded checks pass, 1 a check failed, 2 invalid configuration, 3 numerical failure.\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traveling waves in diatomic FPUT lattices: dispersion, spectral, nondegeneracy, profile, "
                 "Beale-type nanopteron and simulation pipelines"};
    app.footer(key_table());
    app.fallthrough();
    app.require_subcommand(1);

    struct Flag {
        const char* name;
        const char* key;
        const char* help;
        std::string value;
    };
    std::vector<Flag> flags{
        {"--kappa", "params.kappa", "linear stiffness of the even spring", {}},
        {"--beta", "params.beta", "quadratic coefficient of the even spring", {}},
        {"--w", "params.w", "mass ratio", {}},
        {"--dimer", "params.dimer", "mass or spring", {}},
        {"--nu-list", "scan.nu_list", "comma-separated nu values", {}},
        {"--eps-list", "scan.eps_list", "comma-separated epsilon values", {}},
        {"--alpha", "scan.alpha", "leading-order ripple amplitude", {}},
        {"--modes", "beale.modes", "Fourier modes of the nanopteron solve", {}},
        {"--domain-half-length", "beale.domain_half_length", "nanopteron half length L", {}},
        {"--tol", "solver.tol", "Newton residual tolerance", {}},
        {"--out", "output.dir", "output directory", {}},
        {"--format", "output.format", "csv, json or both", {}},
        {"--seed", "run.seed", "seed of random test states", {}},
    };
    for (auto& f : flags) app.add_option(f.name, f.value, std::string(f.help) + " (" + f.key + ")");
    std::string config_file;
    app.add_option("--config", config_file, "configuration file")->check(CLI::ExistingFile);
    std::vector<std::string> sets;
    app.add_option("--set", sets, "override any key: section.key=value (repeatable)");

    std::string command;
    for (const char* name : {"dispersion", "spectral", "nondegeneracy", "profile", "beale", "simulate", "full-report"})
        app.add_subcommand(name, std::string("run the ") + name + " pipeline")->callback([&command, name] {
            command = name;
        });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fput::kExitConfigInvalid;
    }

    try {
        std::string text;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        std::vector<std::pair<std::string, std::string>> overrides;
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw fput::Error(fput::ErrorKind::ConfigInvalid, "--set expects key=value, got '" + s + "'");
            overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
        }
        for (const auto& f : flags)
            if (app.count(f.name) > 0) overrides.emplace_back(f.key, f.value);
        overrides.emplace_back("run.command", command);
        const auto cfg = fput::parse_config(text, overrides);
        const auto result = fput::run(cfg);
        if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
        for (const auto& c : result.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.pipeline << ": " << c.name << " = " << c.value << " ("
                      << c.condition << ")\n";
        std::cout << "artifacts in " << cfg.output_dir << " (" << result.wall_seconds << " s)\n";
        return result.exit_code;
    } catch (const fput::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_config_error() ? fput::kExitConfigInvalid : fput::kExitNumericalFailure;
    }
}
