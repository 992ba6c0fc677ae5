#include "fput/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "fput/error.hpp"

namespace fput {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& what) {
    throw Error(ErrorKind::ConfigInvalid, "invalid value '" + value + "' for " + key + ": expected " + what);
}

double to_double(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    double out = 0.0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size()) bad_value(key, text, "a number");
    return out;
}

int to_int(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    int out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size()) bad_value(key, text, "an integer");
    return out;
}

std::uint64_t to_seed(const std::string& key, const std::string& text) {
    std::string v = trim(text);
    int base = 10;
    if (v.size() > 2 && v[0] == '0' && (v[1] == 'x' || v[1] == 'X')) {
        v = v.substr(2);
        base = 16;
    }
    std::uint64_t out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out, base);
    if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
        bad_value(key, text, "an unsigned integer (decimal or 0x-prefixed hex)");
    return out;
}

bool to_bool(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    bad_value(key, text, "true or false");
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
    if (out.empty()) bad_value(key, text, "a nonempty comma-separated list");
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_list(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + fmt(xs[i]);
    return out;
}

struct Entry {
    std::string name;
    std::string help;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define FPUT_DOUBLE(key, field, text)                                                           \
    Entry {                                                                                     \
        key, text, [](RunConfig& c, const std::string& v) { c.field = to_double(key, v); },    \
            [](const RunConfig& c) { return fmt(c.field); }                                     \
    }
#define FPUT_INT(key, field, text)                                                              \
    Entry {                                                                                     \
        key, text, [](RunConfig& c, const std::string& v) { c.field = to_int(key, v); },       \
            [](const RunConfig& c) { return std::to_string(c.field); }                          \
    }
#define FPUT_LIST(key, field, text)                                                             \
    Entry {                                                                                     \
        key, text, [](RunConfig& c, const std::string& v) { c.field = to_list(key, v); },      \
            [](const RunConfig& c) { return fmt_list(c.field); }                                \
    }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        Entry{"run.command", "pipeline: dispersion|spectral|nondegeneracy|profile|beale|simulate|full-report",
              [](RunConfig& c, const std::string& v) { c.command = parse_command(trim(v)); },
              [](const RunConfig& c) { return std::string(to_string(c.command)); }},
        Entry{"params.dimer", "mass (kappa=1, w=2 defaults) or spring (kappa=2, w=1 defaults)",
              [](RunConfig& c, const std::string& v) {
                  const std::string d = trim(v);
                  if (d != "mass" && d != "spring") bad_value("params.dimer", v, "mass or spring");
                  c.dimer = d;
              },
              [](const RunConfig& c) { return c.dimer; }},
        FPUT_DOUBLE("params.kappa", params.kappa, "linear stiffness of the even spring"),
        FPUT_DOUBLE("params.beta", params.beta, "quadratic coefficient of the even spring"),
        FPUT_DOUBLE("params.w", params.w, "mass ratio (odd mass 1, even mass 1/w)"),
        Entry{"params.allow_monatomic", "permit kappa = w = 1",
              [](RunConfig& c, const std::string& v) { c.params.allow_monatomic = to_bool("params.allow_monatomic", v); },
              [](const RunConfig& c) { return std::string(c.params.allow_monatomic ? "true" : "false"); }},
        FPUT_DOUBLE("solver.tol", tol, "Newton residual tolerance"),
        Entry{"run.seed", "seed of the random test states",
              [](RunConfig& c, const std::string& v) { c.seed = to_seed("run.seed", v); },
              [](const RunConfig& c) {
                  char buf[32];
                  std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(c.seed));
                  return std::string(buf);
              }},
        FPUT_LIST("dispersion.deltas", deltas, "c^2 - c_s^2 values for the supersonic split"),
        FPUT_DOUBLE("dispersion.scan_upper", root_scan_upper, "upper end of the root scan window"),
        FPUT_INT("spectral.states", spectral_states, "number of seeded random states"),
        FPUT_DOUBLE("spectral.contour_radius", contour_radius, "radius of the projection contour"),
        FPUT_INT("spectral.contour_nodes", contour_nodes, "trapezoid nodes on the contour"),
        FPUT_LIST("scan.eps_list", eps_list, "long-wave amplitudes for profiles and the KdV scan"),
        FPUT_DOUBLE("scan.alpha", alpha, "ripple amplitude of the leading-order nanopteron"),
        FPUT_LIST("scan.nu_list", nu_list, "supersonic speed offsets for the nanopteron scan"),
        FPUT_INT("profile.points", profile_points, "grid points of leading-order profiles"),
        FPUT_DOUBLE("profile.half_length", profile_half_length, "half length of the profile grid in X"),
        FPUT_LIST("profile.normal_form_nu", normal_form_nu, "nu values of the normal-form check"),
        FPUT_INT("beale.modes", modes, "Fourier modes M (0: from beale.k_max)"),
        FPUT_DOUBLE("beale.domain_half_length", domain_half_length, "half length L (0: aligned from 30/nu)"),
        FPUT_DOUBLE("beale.length_factor", length_factor, "L0 = length_factor / nu before alignment"),
        FPUT_DOUBLE("beale.k_max", k_max, "resolved wavenumber when modes = 0"),
        FPUT_DOUBLE("beale.branch_nu", branch_nu, "nu of the periodic branch"),
        FPUT_LIST("beale.branch_amplitudes", branch_amplitudes, "pinned amplitudes on the periodic branch"),
        FPUT_INT("beale.branch_modes", branch_modes, "Fourier modes per period on the branch"),
        FPUT_DOUBLE("simulate.nu", sim_nu, "nu of the simulated nanopteron"),
        FPUT_DOUBLE("simulate.dt", sim_dt, "velocity-Verlet step"),
        FPUT_DOUBLE("simulate.time_factor", sim_time_factor, "final time T = time_factor / c"),
        FPUT_INT("simulate.snapshots", sim_snapshots, "snapshots after t = 0"),
        FPUT_DOUBLE("simulate.kdv_T0", kdv_T0, "KdV scan final time T0 eps^-3"),
        FPUT_INT("simulate.kdv_sites", kdv_sites, "chain length of the KdV scan"),
        Entry{"output.dir", "output directory", [](RunConfig& c, const std::string& v) { c.output_dir = trim(v); },
              [](const RunConfig& c) { return c.output_dir; }},
        Entry{"output.format", "csv, json or both",
              [](RunConfig& c, const std::string& v) {
                  const std::string f = trim(v);
                  if (f == "csv")
                      c.format = OutputFormat::Csv;
                  else if (f == "json")
                      c.format = OutputFormat::Json;
                  else if (f == "both")
                      c.format = OutputFormat::Both;
                  else
                      bad_value("output.format", v, "csv, json or both");
              },
              [](const RunConfig& c) {
                  return std::string(c.format == OutputFormat::Csv    ? "csv"
                                     : c.format == OutputFormat::Json ? "json"
                                                                      : "both");
              }},
    };
    return table;
}

#undef FPUT_DOUBLE
#undef FPUT_INT
#undef FPUT_LIST

const Entry& find_entry(const std::string& key) {
    for (const auto& e : entries())
        if (e.name == key) return e;
    throw Error(ErrorKind::ConfigInvalid, "unknown configuration key '" + key + "'");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorKind::ConfigInvalid, message);
}

void require_positive_list(const std::vector<double>& xs, const std::string& key, bool allow_zero) {
    require(!xs.empty(), key + " must be nonempty");
    for (double x : xs) require(allow_zero ? x >= 0.0 : x > 0.0, key + " entries must be " + (allow_zero ? "nonnegative" : "positive"));
}

}  // namespace

const char* to_string(Command c) {
    switch (c) {
        case Command::Dispersion: return "dispersion";
        case Command::Spectral: return "spectral";
        case Command::Nondegeneracy: return "nondegeneracy";
        case Command::Profile: return "profile";
        case Command::Beale: return "beale";
        case Command::Simulate: return "simulate";
        case Command::FullReport: return "full-report";
    }
    return "?";
}

Command parse_command(const std::string& name) {
    for (Command c : {Command::Dispersion, Command::Spectral, Command::Nondegeneracy, Command::Profile, Command::Beale,
                      Command::Simulate, Command::FullReport})
        if (name == to_string(c)) return c;
    throw Error(ErrorKind::ConfigInvalid, "unknown command '" + name + "'");
}

std::vector<ConfigKey> config_keys() {
    const RunConfig defaults;
    std::vector<ConfigKey> out;
    for (const auto& e : entries()) out.push_back({e.name, e.help + " [default " + e.get(defaults) + "]"});
    return out;
}

void RunConfig::validate() const {
    params.validate();
    const DimerKind kind = params.kind();
    if (kind == DimerKind::General && command != Command::Dispersion)
        throw Error(ErrorKind::ConfigInvalid,
                    std::string("general dimers (unequal springs with w != 1) are not supported by '") + to_string(command) +
                        "': the symmetry-restricted analyses need a mass (kappa = 1, beta = 1) or spring (w = 1) dimer");
    if (kind == DimerKind::Mass) require(dimer == "mass", "params.dimer = spring requires w = 1");
    if (kind == DimerKind::Spring) require(dimer == "spring", "params.dimer = mass requires kappa = 1 and beta = 1");
    require(tol > 0.0, "solver.tol must be positive");
    require_positive_list(deltas, "dispersion.deltas", false);
    require(root_scan_upper > 0.0, "dispersion.scan_upper must be positive");
    require(spectral_states > 0, "spectral.states must be positive");
    require(contour_radius > 0.0, "spectral.contour_radius must be positive");
    require(contour_nodes >= 8, "spectral.contour_nodes must be at least 8");
    require_positive_list(eps_list, "scan.eps_list", true);
    require(alpha >= 0.0, "scan.alpha must be nonnegative");
    require_positive_list(nu_list, "scan.nu_list", false);
    require(profile_points >= 8 && profile_points % 2 == 0, "profile.points must be even and at least 8");
    require(profile_half_length > 0.0, "profile.half_length must be positive");
    require_positive_list(normal_form_nu, "profile.normal_form_nu", false);
    require(modes >= 0, "beale.modes must be nonnegative");
    require(domain_half_length >= 0.0, "beale.domain_half_length must be nonnegative");
    require(length_factor > 0.0 && k_max > 0.0, "beale.length_factor and beale.k_max must be positive");
    require(branch_nu > 0.0, "beale.branch_nu must be positive");
    require(branch_amplitudes.size() >= 2, "beale.branch_amplitudes needs at least two entries");
    require_positive_list(branch_amplitudes, "beale.branch_amplitudes", false);
    require(branch_modes >= 4, "beale.branch_modes must be at least 4");
    require(sim_nu > 0.0 && sim_dt > 0.0 && sim_time_factor > 0.0, "simulate.nu, dt and time_factor must be positive");
    require(sim_snapshots >= 1, "simulate.snapshots must be positive");
    require(kdv_T0 > 0.0, "simulate.kdv_T0 must be positive");
    require(kdv_sites >= 4 && kdv_sites % 2 == 0, "simulate.kdv_sites must be even and at least 4");
    require(!output_dir.empty(), "output.dir must be nonempty");
}

RunConfig parse_config(const std::string& file_text, const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::vector<std::pair<std::string, std::string>> assignments;
    std::stringstream ss(file_text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            require(line.back() == ']' && line.size() > 2, "malformed section header on line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        require(eq != std::string::npos, "expected 'key = value' on line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        require(!key.empty(), "empty key on line " + std::to_string(lineno));
        assignments.emplace_back(section.empty() ? key : section + "." + key, trim(line.substr(eq + 1)));
    }
    assignments.insert(assignments.end(), overrides.begin(), overrides.end());

    // Last assignment wins; the dimer choice is applied first because it sets parameter defaults.
    std::map<std::string, std::string> final_values;
    for (const auto& [k, v] : assignments) {
        find_entry(k);
        final_values[k] = v;
    }
    RunConfig cfg;
    if (auto it = final_values.find("params.dimer"); it != final_values.end()) {
        find_entry("params.dimer").set(cfg, it->second);
        if (cfg.dimer == "spring") cfg.params = DimerParams::make(2.0, 1.0, 1.0);
    }
    for (const auto& e : entries()) {
        if (e.name == "params.dimer") continue;
        if (auto it = final_values.find(e.name); it != final_values.end()) e.set(cfg, it->second);
    }
    const bool monatomic = cfg.params.allow_monatomic;
    cfg.params = DimerParams::make(cfg.params.kappa, cfg.params.beta, cfg.params.w, monatomic);
    cfg.validate();
    return cfg;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : entries()) out.emplace_back(e.name, e.get(cfg));
    return out;
}

}  // namespace fput
