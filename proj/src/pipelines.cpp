#include "fput/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>

#include "fput/beale.hpp"
#include "fput/diagnostics.hpp"
#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/invariants.hpp"
#include "fput/profiles.hpp"
#include "fput/simulate.hpp"

#ifndef FPUT_VERSION
#define FPUT_VERSION "unknown"
#endif

namespace fput {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string tag(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
    Csv& row() {
        rows_.emplace_back();
        return *this;
    }
    Csv& operator<<(double x) {
        rows_.back().push_back(fmt(x));
        return *this;
    }
    Csv& operator<<(const std::string& s) {
        rows_.back().push_back(s);
        return *this;
    }
    Csv& operator<<(const char* s) { return *this << std::string(s); }
    Csv& operator<<(int x) {
        rows_.back().push_back(std::to_string(x));
        return *this;
    }
    Csv& operator<<(long x) {
        rows_.back().push_back(std::to_string(x));
        return *this;
    }
    std::string text() const {
        std::string out;
        auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
            out += '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return out;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

class Writer {
public:
    Writer(const RunConfig& cfg, RunResult& result) : cfg_(cfg), result_(result), dir_(cfg.output_dir) {}

    bool csv_enabled() const { return cfg_.format != OutputFormat::Json; }
    bool json_enabled() const { return cfg_.format != OutputFormat::Csv; }

    void csv(const std::string& name, const Csv& table) {
        if (csv_enabled()) write(name, table.text());
    }
    void json_file(const std::string& name, const json& j) {
        if (json_enabled()) write(name, j.dump(2) + "\n");
    }
    void write(const std::string& name, const std::string& text) {
        std::ofstream out(dir_ / name, std::ios::binary);
        out << text;
        if (!out) throw Error(ErrorKind::ConfigInvalid, "cannot write " + (dir_ / name).string());
        result_.artifacts.push_back(name);
    }

    void check(const std::string& pipeline, const std::string& name, bool passed, double value,
               const std::string& condition) {
        result_.checks.push_back({pipeline, name, passed, value, condition});
    }

private:
    const RunConfig& cfg_;
    RunResult& result_;
    fs::path dir_;
};

json root_json(const RootReport& r) {
    return {{"location", r.location.real()},
            {"multiplicity", r.multiplicity},
            {"residual", r.residual},
            {"derivatives", std::vector<double>(r.derivatives.begin(), r.derivatives.end())}};
}

DimerKind profile_kind(const DimerParams& p) {
    return p.kind() == DimerKind::Spring ? DimerKind::Spring : DimerKind::Mass;
}

void run_dispersion(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    RootScanOptions opt;
    opt.upper = cfg.root_scan_upper;
    const auto s = dispersion_summary(p, cfg.deltas, opt);
    const auto root = critical_frequency(p, s.c_s, opt);
    json j;
    j["params"] = {{"kappa", p.kappa}, {"beta", p.beta}, {"w", p.w}, {"kind", to_string(p.kind())}};
    j["c_s"] = s.c_s;
    j["omega_star"] = root_json(root);
    j["taylor_at_zero"] = taylor_lambda_at_zero(p, s.c_s, 6);
    j["multiplicity_table"] = json::array({{{"location", 0.0}, {"multiplicity", s.zero_multiplicity}},
                                           {{"location", s.omega_star}, {"multiplicity", s.omega_star_multiplicity}}});
    json split = json::array();
    Csv sup({"delta", "c", "x_c"});
    for (std::size_t i = 0; i < s.deltas.size(); ++i) {
        const double c = std::sqrt(s.c_s * s.c_s + s.deltas[i]);
        split.push_back({{"delta", s.deltas[i]}, {"c", c}, {"x_c", s.x_c[i]}});
        sup.row() << s.deltas[i] << c << s.x_c[i];
    }
    j["supersonic_split"] = split;
    w.json_file("spectral_report.json", j);
    w.csv("supersonic_split.csv", sup);

    Csv curve({"k", "Lambda", "lambda_minus", "lambda_plus"});
    constexpr int kSamples = 513;
    for (int i = 0; i < kSamples; ++i) {
        const double k = 2.0 * 3.141592653589793 * i / (kSamples - 1);
        const auto [lm, lp] = lambda_pm(k, p);
        curve.row() << k << lambda_dispersion(k, p, s.c_s) << lm << lp;
    }
    w.csv("dispersion.csv", curve);

    w.check("dispersion", "Lambda(0) relative", s.lambda0_rel < 1e-10, s.lambda0_rel, "< 1e-10");
    w.check("dispersion", "Lambda''(0) relative", s.lambda2_rel < 1e-10, s.lambda2_rel, "< 1e-10");
    w.check("dispersion", "Lambda''''(0)", s.lambda4 < 0.0, s.lambda4, "< 0");
    w.check("dispersion", "|Lambda(omega_*)|", s.omega_star_residual < 1e-10, s.omega_star_residual, "< 1e-10");
    w.check("dispersion", "x_c monotone in delta", s.x_c_monotone, s.x_c.empty() ? 0.0 : s.x_c.front(),
            "monotone");
}

void run_spectral(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    const double cs = sound_speed(p);
    ContourOptions copt;
    copt.radius = cfg.contour_radius;
    copt.nodes = cfg.contour_nodes;
    const auto jr = jordan_summary(p);
    const auto pr = projection_summary(p, cfg.seed, cfg.spectral_states, copt);
    const auto fi = first_integral_summary(p, {cs, 1.1 * cs}, cfg.seed, cfg.spectral_states);
    const auto lc = laurent_constants(p);
    const auto alt = alternative_laurent_constants(p);

    Csv chi({"state", "chi0", "chi1", "chi2", "chi3", "chi2_closed", "chi3_closed"});
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.spectral_states; ++i) {
        const auto u = random_state(rng);
        const auto c = functional_chi_all(u, p);
        chi.row() << i << c[0] << c[1] << c[2] << c[3] << functional_chi_closed(2, u, p)
                  << functional_chi_closed(3, u, p);
    }
    w.csv("chi_functionals.csv", chi);

    json j;
    j["laurent"] = {{"a_m4", lc.a_m4}, {"a_m2", lc.a_m2}, {"alternative_a_m4", alt.a_m4}, {"alternative_a_m2", alt.a_m2}};
    j["jordan"] = {{"chain_residual", jr.chain_residual}, {"parity_defect", jr.parity_defect}};
    j["projection"] = {{"idempotency_defect", pr.idempotency_defect},
                       {"commutation_defect", pr.commutation_defect},
                       {"series_defect", pr.series_defect},
                       {"calibration_ratio", pr.ratio_mean},
                       {"calibration_spread", pr.ratio_spread},
                       {"states", pr.states}};
    j["first_integral"] = {{"conservation_defect", fi.conservation_defect},
                           {"translation_defect", fi.translation_defect},
                           {"symmetry_defect", fi.symmetry_defect},
                           {"speeds", {cs, 1.1 * cs}}};
    w.json_file("spectral.json", j);

    w.check("spectral", "Jordan chain residual", jr.chain_residual < 1e-12, jr.chain_residual, "< 1e-12");
    w.check("spectral", "symmetry parity defect", jr.parity_defect < 1e-12, jr.parity_defect, "< 1e-12");
    w.check("spectral", "projection idempotency", pr.idempotency_defect < 1e-6, pr.idempotency_defect, "< 1e-6");
    w.check("spectral", "projection commutes with L0", pr.commutation_defect < 1e-6, pr.commutation_defect, "< 1e-6");
    w.check("spectral", "chi* series vs contour", pr.series_defect < 1e-6, pr.series_defect, "< 1e-6");
    w.check("spectral", "calibration ratio spread", pr.ratio_spread < 1e-6, pr.ratio_spread, "< 1e-6");
    w.check("spectral", "DJ . F", fi.conservation_defect < 1e-8, fi.conservation_defect, "< 1e-8 (1 + |U|^2)");
    w.check("spectral", "J translation invariance", fi.translation_defect < 1e-12, fi.translation_defect, "< 1e-12");
    w.check("spectral", "J symmetry invariance", fi.symmetry_defect < 1e-12, fi.symmetry_defect, "< 1e-12");
}

void run_nondegeneracy(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    const auto r = nondegeneracy_report(p);
    json j = {{"lfrak0_closed", r.lfrak0_closed},
              {"lfrak0_oracle", r.lfrak0_oracle},
              {"qfrak0_closed", r.qfrak0_closed},
              {"qfrak0_oracle", r.qfrak0_oracle},
              {"normalization_ratio", r.normalization_ratio},
              {"d2j0_formula", r.d2j0_formula},
              {"d2j0_finite_difference", r.d2j0_finite_difference},
              {"core_coefficient_from_constants", r.core_coefficient_from_constants},
              {"core_coefficient_theorem", r.core_coefficient_theorem},
              {"core_coefficient_ratio", r.core_coefficient_theorem / r.core_coefficient_from_constants}};
    Csv t({"quantity", "value"});
    for (const auto& [k, v] : j.items()) t.row() << k << v.get<double>();

    w.check("nondegeneracy", "Lfrak0 oracle", r.lfrak0_oracle > 0.0, r.lfrak0_oracle, "> 0");
    const double lrel = std::abs(r.lfrak0_closed - r.lfrak0_oracle) / std::abs(r.lfrak0_oracle);
    w.check("nondegeneracy", "Lfrak0 closed vs oracle", lrel < 1e-8, lrel, "< 1e-8 relative");
    const double qrel = std::abs(r.qfrak0_closed - r.qfrak0_oracle) / std::max(1e-300, std::abs(r.qfrak0_oracle));
    w.check("nondegeneracy", "Qfrak0 closed vs oracle", qrel < 1e-8, qrel, "< 1e-8 relative");
    const double drel = std::abs(r.d2j0_formula - r.d2j0_finite_difference) / std::max(1.0, std::abs(r.d2j0_formula));
    w.check("nondegeneracy", "D^2 J formula vs finite difference", drel < 1e-6, drel, "< 1e-6 relative");
    if (p.kind() == DimerKind::Spring) {
        const double k3 = p.kappa * p.kappa * p.kappa;
        const double root = qfrak0_sign_change(p.kappa, -1.5 * k3, -0.5 * k3);
        j["qfrak0_sign_change_beta"] = root;
        w.check("nondegeneracy", "Qfrak0 sign change at -kappa^3", std::abs(root + k3) < 1e-6, root + k3, "|.| < 1e-6");
    } else {
        const double mw = p.w;
        const double target = 6.0 * mw * (1.0 + mw) / (mw * mw - mw + 1.0);
        const double lc = lfrak0(DimerParams::make(1.0, 1.0, mw), Route::Closed);
        w.check("nondegeneracy", "Lfrak0(1,w) identity", std::abs(lc - target) < 1e-10 * target, lc - target,
                "|.| < 1e-10 relative");
    }
    w.json_file("nondegeneracy.json", j);
    w.csv("nondegeneracy.csv", t);
}

void run_profile(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    json j;
    j["profiles"] = json::array();
    for (double eps : cfg.eps_list) {
        if (eps == 0.0) continue;
        ProfileSpec spec;
        spec.params = p;
        spec.dimer_kind = profile_kind(p);
        spec.epsilon = eps;
        std::vector<double> grid(cfg.profile_points);
        const double h = 2.0 * cfg.profile_half_length / cfg.profile_points;
        for (int i = 0; i < cfg.profile_points; ++i) grid[i] = -cfg.profile_half_length + i * h;
        NanopteronComponents comp;
        comp.alpha = cfg.alpha;
        const auto lp = assemble_nanopteron(spec, comp, grid);
        Csv t({"X", "x", "rho_odd", "rho_even", "front"});
        for (int i = 0; i < cfg.profile_points; ++i)
            t.row() << grid[i] << grid[i] / eps << lp.values_odd[i] << lp.values_even[i] << front_profile(spec, grid[i]);
        w.csv("profile_eps" + tag(eps) + ".csv", t);
        j["profiles"].push_back({{"epsilon", eps},
                                 {"wave_speed", wave_speed(spec)},
                                 {"decay_rate", lp.decay_rate},
                                 {"core_amplitude_even", lp.core_amplitude},
                                 {"stegoton_factor", lp.stegoton_factor},
                                 {"ripple_frequency", lp.frequency}});
    }
    std::vector<double> tg;
    for (int i = 0; i <= 800; ++i) tg.push_back(-20.0 + 0.05 * i);
    Csv nf({"nu", "t", "sigma1", "sigma2"});
    j["normal_form"] = json::array();
    for (double nu : cfg.normal_form_nu) {
        const auto r = truncated_normalform_check(nu, tg);
        j["normal_form"].push_back({{"nu", nu}, {"max_residual", r.max_residual}});
        w.check("profile", "normal form residual nu=" + tag(nu), r.max_residual < 1e-10, r.max_residual, "< 1e-10");
        for (double t : tg) {
            const auto s = normal_form_sigma(t);
            nf.row() << nu << t << s[0] << s[1];
        }
    }
    w.csv("normal_form.csv", nf);
    w.json_file("profile.json", j);
}

NanopteronOptions nanopteron_options(const RunConfig& cfg) {
    NanopteronOptions o;
    o.L = cfg.domain_half_length;
    o.length_factor = cfg.length_factor;
    o.modes = cfg.modes;
    o.k_max = cfg.k_max;
    o.newton.tol = cfg.tol;
    return o;
}

void run_beale(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    NewtonOptions nopt;
    nopt.tol = cfg.tol;
    const auto br = branch_summary(cfg.branch_nu, cfg.branch_amplitudes, p, cfg.branch_modes, nopt);
    Csv bt({"a", "Omega", "omega", "Omega_minus_Omega_nu", "residual"});
    for (const auto& pt : br.points) bt.row() << pt.a << pt.Omega << pt.omega << pt.Omega - br.Omega_nu << pt.residual;
    w.csv("branch.csv", bt);

    std::vector<double> nus = cfg.nu_list;
    std::sort(nus.begin(), nus.end(), std::greater<>());
    const auto scan = amplitude_scan(nus, p, nanopteron_options(cfg));
    Csv st({"nu", "c", "amplitude", "residual", "refined_residual", "L", "modes", "iterations", "peak_ratio",
            "dominant_wavenumber", "omega_c"});
    double max_res = 0.0;
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
        const auto& row = scan.rows[i];
        const auto& prof = scan.profiles[i];
        const double refined = refined_residual(prof);
        max_res = std::max({max_res, row.residual, refined});
        st.row() << row.nu << prof.c << row.amplitude << row.residual << refined << row.L << row.modes
                 << row.iterations << peak_ratio(prof) << dominant_ripple_wavenumber(prof) << prof.omega_c;
        Csv pt({"x", "rho1", "rho2"});
        for (int k = 0; k < prof.grid_size(); ++k) pt.row() << prof.x[k] << prof.rho1[k] << prof.rho2[k];
        w.csv("nanopteron_nu" + tag(row.nu) + ".csv", pt);
    }
    w.csv("beale_scan.csv", st);
    json j = {{"branch", {{"nu", cfg.branch_nu}, {"Omega_nu", br.Omega_nu}, {"exponent", br.exponent},
                          {"max_residual", br.max_residual}}},
              {"scan",
               {{"has_fits", scan.has_fits},
                {"algebraic_order", scan.algebraic_order},
                {"exponential_slope", scan.exponential_slope},
                {"exponential_r2", scan.exponential_r2},
                {"strictly_decreasing", scan.strictly_decreasing}}}};
    w.json_file("beale.json", j);

    w.check("beale", "branch residual", br.max_residual < 1e-10, br.max_residual, "< 1e-10");
    w.check("beale", "branch exponent", br.exponent >= 1.8 && br.exponent <= 2.2, br.exponent, "in [1.8, 2.2]");
    w.check("beale", "nanopteron residual", max_res < 1e-9, max_res, "< 1e-9");
    if (scan.rows.size() >= 2)
        w.check("beale", "ripple amplitude strictly decreasing", scan.strictly_decreasing,
                scan.rows.back().amplitude, "decreasing as nu decreases");
    if (scan.rows.size() >= 3 && p.kind() != DimerKind::Spring) {
        w.check("beale", "algebraic order", scan.algebraic_order >= 8.0, scan.algebraic_order, ">= 8");
        w.check("beale", "exponential fit R^2", scan.exponential_r2 > 0.95, scan.exponential_r2, "> 0.95");
    }
}

void run_simulate(const RunConfig& cfg, Writer& w) {
    const auto& p = cfg.params;
    SimulationOptions so;
    so.nu = cfg.sim_nu;
    so.dt = cfg.sim_dt;
    so.time_factor = cfg.sim_time_factor;
    so.snapshots = cfg.sim_snapshots;
    so.solver = nanopteron_options(cfg);
    const auto s = simulation_summary(p, so);

    Csv trace({"t", "j", "r"});
    for (const auto& snap : s.trace.snapshots)
        for (std::size_t i = 0; i < snap.r.size(); ++i)
            trace.row() << snap.t << static_cast<long>(s.trace.first_index + static_cast<long>(i)) << snap.r[i];
    w.csv("trace.csv", trace);
    Csv diag({"t", "shape_error", "shape_error_core_only", "shift", "energy_drift", "stegoton_ratio"});
    for (std::size_t i = 0; i < s.trace.snapshots.size(); ++i)
        diag.row() << s.trace.snapshots[i].t << s.nanopteron.errors[i] << s.core_only.errors[i]
                   << s.nanopteron.shifts[i] << s.trace.energy_drift[i] << s.stegoton[i];
    w.csv("simulate_diagnostics.csv", diag);

    std::vector<double> eps = cfg.eps_list;
    std::sort(eps.begin(), eps.end(), std::greater<>());
    KdvOptions ko;
    ko.T0 = cfg.kdv_T0;
    ko.dt = cfg.sim_dt;
    ko.sites = cfg.kdv_sites;
    const auto rows = kdv_residual_scan(eps, p, ko);
    Csv kt({"epsilon", "T", "discrepancy", "ratio"});
    bool decreasing = true;
    double prev = -1.0;
    int used = 0;
    for (const auto& r : rows) {
        if (r.skipped) continue;
        kt.row() << r.epsilon << r.T << r.discrepancy << r.ratio;
        if (prev >= 0.0 && !(r.ratio < prev)) decreasing = false;
        prev = r.ratio;
        ++used;
    }
    w.csv("kdv_scan.csv", kt);

    const double stego_final = s.stegoton.back();
    json j = {{"nu", cfg.sim_nu},
              {"c", s.profile.c},
              {"sites", s.sites},
              {"T", s.T},
              {"shape_error", s.nanopteron.shape_error},
              {"shape_error_core_only", s.core_only.shape_error},
              {"fitted_speed", s.nanopteron.fitted_speed},
              {"energy_drift", s.energy_drift},
              {"collocation_peak_ratio", s.collocation_peak_ratio},
              {"stegoton_ratio_final", stego_final}};
    w.json_file("simulate.json", j);

    w.check("simulate", "nanopteron shape error", s.nanopteron.shape_error < 0.05, s.nanopteron.shape_error, "< 0.05");
    w.check("simulate", "nanopteron beats core-only", s.nanopteron.shape_error < s.core_only.shape_error,
            s.core_only.shape_error, "> nanopteron shape error");
    w.check("simulate", "energy drift", s.energy_drift < 1e-6, s.energy_drift, "< 1e-6");
    const double target = p.kind() == DimerKind::Spring ? p.kappa : 1.0;
    w.check("simulate", "collocation peak ratio", std::abs(s.collocation_peak_ratio / target - 1.0) < 0.1,
            s.collocation_peak_ratio, "within 10% of " + tag(target));
    w.check("simulate", "simulated stegoton ratio", std::abs(stego_final / target - 1.0) < 0.1, stego_final,
            "within 10% of " + tag(target));
    if (used >= 2) w.check("simulate", "KdV ratio decreasing in eps", decreasing, prev, "strictly decreasing");
}

void write_manifest(const RunConfig& cfg, RunResult& result) {
    json checks = json::array();
    for (const auto& c : result.checks)
        checks.push_back({{"pipeline", c.pipeline}, {"name", c.name}, {"passed", c.passed}, {"value", c.value},
                          {"condition", c.condition}});
    json config = json::object();
    for (const auto& [k, v] : config_echo(cfg)) config[k] = v;
    std::vector<std::string> artifacts = result.artifacts;
    artifacts.push_back("manifest.json");
    json m = {{"version", version_string()},
              {"command", to_string(cfg.command)},
              {"config", config},
              {"wall_seconds", result.wall_seconds},
              {"checks", checks},
              {"all_checks_passed", std::all_of(result.checks.begin(), result.checks.end(),
                                                [](const Check& c) { return c.passed; })},
              {"exit_code", result.exit_code},
              {"artifacts", artifacts}};
    if (!result.error.empty()) m["error"] = result.error;
    std::ofstream out(fs::path(cfg.output_dir) / "manifest.json", std::ios::binary);
    out << m.dump(2) << "\n";
    result.artifacts.push_back("manifest.json");
}

}  // namespace

const char* version_string() { return FPUT_VERSION; }

RunResult run(const RunConfig& cfg) {
    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        cfg.validate();
        std::error_code ec;
        fs::create_directories(cfg.output_dir, ec);
        if (ec || !fs::is_directory(cfg.output_dir))
            throw Error(ErrorKind::ConfigInvalid, "output directory '" + cfg.output_dir + "' is not writable");
        Writer w(cfg, result);
        const bool all = cfg.command == Command::FullReport;
        if (all || cfg.command == Command::Dispersion) run_dispersion(cfg, w);
        if (all || cfg.command == Command::Spectral) run_spectral(cfg, w);
        if (all || cfg.command == Command::Nondegeneracy) run_nondegeneracy(cfg, w);
        if (all || cfg.command == Command::Profile) run_profile(cfg, w);
        if (all || cfg.command == Command::Beale) run_beale(cfg, w);
        if (all || cfg.command == Command::Simulate) run_simulate(cfg, w);
        if (all) {
            Csv summary({"pipeline", "check", "passed", "value", "condition"});
            for (const auto& c : result.checks)
                summary.row() << c.pipeline << c.name << (c.passed ? "true" : "false") << c.value << c.condition;
            w.write("summary.csv", summary.text());
        }
        const bool ok = std::all_of(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.passed; });
        result.exit_code = ok ? 0 : kExitChecksFailed;
    } catch (const Error& e) {
        result.error = e.what();
        result.exit_code = e.is_config_error() ? kExitConfigInvalid : kExitNumericalFailure;
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.exit_code != kExitConfigInvalid) {
        if (result.exit_code == kExitNumericalFailure) {
            json diag = {{"error", result.error}, {"command", to_string(cfg.command)}};
            std::ofstream out(fs::path(cfg.output_dir) / "error.json", std::ios::binary);
            out << diag.dump(2) << "\n";
            result.artifacts.push_back("error.json");
        }
        write_manifest(cfg, result);
    }
    return result;
}

}  // namespace fput
