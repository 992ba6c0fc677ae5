#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "fput/beale.hpp"
#include "fput/diagnostics.hpp"
#include "fput/dispersion.hpp"
#include "fput/invariants.hpp"
#include "fput/profiles.hpp"
#include "fput/simulate.hpp"

using namespace fput;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

const DimerParams kMass2 = DimerParams::make(1.0, 1.0, 2.0);
const DimerParams kMass5 = DimerParams::make(1.0, 1.0, 5.0);
const DimerParams kSpring2 = DimerParams::make(2.0, 1.0, 1.0);
const DimerParams kSpring3 = DimerParams::make(3.0, 1.0, 1.0);
const std::vector<DimerParams> kFourSets{kMass2, kMass5, kSpring3, kSpring2};

Outcome dispersion_classification() {
    double worst_rel = 0.0, worst_res = 0.0, max_l4 = -1e300;
    bool single = true;
    for (const auto& p : kFourSets) {
        const auto s = dispersion_summary(p, {});
        worst_rel = std::max({worst_rel, std::abs(s.lambda0_rel), std::abs(s.lambda2_rel)});
        worst_res = std::max(worst_res, s.omega_star_residual);
        max_l4 = std::max(max_l4, s.lambda4);
        single = single && s.omega_star_multiplicity == 1 && s.omega_star > 0.0;
    }
    return {worst_rel < 1e-10 && max_l4 < 0.0 && worst_res < 1e-10 && single,
            "max rel |Lambda(0)|,|Lambda''(0)| " + fmt("%.2e", worst_rel) + ", max Lambda''''(0) " +
                fmt("%.4g", max_l4) + ", max |Lambda(omega*)| " + fmt("%.2e", worst_res)};
}

Outcome supersonic_split() {
    bool ok = true;
    double largest_first = 0.0;
    for (const auto& p : kFourSets) {
        const auto s = dispersion_summary(p, {0.0025, 0.01, 0.04});
        ok = ok && s.x_c_monotone && s.x_c.size() == 3;
        largest_first = std::max(largest_first, s.x_c.front());
    }
    return {ok, "x_c monotone in delta for all sets, max x_c(0.0025) " + fmt("%.4f", largest_first)};
}

Outcome jordan_chain() {
    double chain = 0.0, parity = 0.0;
    for (const auto& p : kFourSets) {
        const auto s = jordan_summary(p);
        chain = std::max(chain, s.chain_residual);
        parity = std::max(parity, s.parity_defect);
    }
    return {chain < 1e-12 && parity < 1e-12,
            "chain residual " + fmt("%.2e", chain) + ", parity defect " + fmt("%.2e", parity)};
}

Outcome projection_oracle() {
    double idem = 0.0, comm = 0.0, series = 0.0, spread = 0.0;
    for (const auto& p : {kMass2, kMass5, kSpring2}) {
        const auto s = projection_summary(p, kDefaultSeed, 20);
        idem = std::max(idem, s.idempotency_defect);
        comm = std::max(comm, s.commutation_defect);
        series = std::max(series, s.series_defect);
        spread = std::max(spread, s.ratio_spread);
    }
    return {idem < 1e-6 && comm < 1e-6 && series < 1e-6 && spread < 1e-6,
            "idempotency " + fmt("%.2e", idem) + ", commutation " + fmt("%.2e", comm) + ", series " +
                fmt("%.2e", series) + ", ratio spread " + fmt("%.2e", spread)};
}

Outcome nondegeneracy() {
    double min_l0 = 1e300;
    for (const auto& p : {kMass2, kMass5, kSpring2, kSpring3, DimerParams::make(1.0, 1.0, 3.0)})
        min_l0 = std::min(min_l0, nondegeneracy_report(p).lfrak0_oracle);
    const double root = qfrak0_sign_change(2.0, -12.0, -4.0);
    double identity = 0.0;
    for (double w : {2.0, 3.0, 5.0}) {
        const double target = 6.0 * w * (1.0 + w) / (w * w - w + 1.0);
        identity = std::max(identity, std::abs(lfrak0(DimerParams::make(1.0, 1.0, w), Route::Closed) - target) / target);
    }
    const auto rep = nondegeneracy_report(kMass2);
    std::printf("  info: core coefficient from constants %.12g, long-wave value %.12g (ratio %.6g)\n",
                rep.core_coefficient_from_constants, rep.core_coefficient_theorem,
                rep.core_coefficient_theorem / rep.core_coefficient_from_constants);
    return {min_l0 > 0.0 && std::abs(root + 8.0) < 1e-6 && identity < 1e-10,
            "min Lfrak0 " + fmt("%.6g", min_l0) + ", Qfrak0 root + kappa^3 " + fmt("%.2e", root + 8.0) +
                ", Lfrak0(1,w) identity " + fmt("%.2e", identity)};
}

Outcome first_integral() {
    double cons = 0.0, trans = 0.0, sym = 0.0;
    for (const auto& p : kFourSets) {
        const double cs = sound_speed(p);
        const auto s = first_integral_summary(p, {cs, 1.1 * cs}, kDefaultSeed, 20);
        cons = std::max(cons, s.conservation_defect);
        trans = std::max(trans, s.translation_defect);
        sym = std::max(sym, s.symmetry_defect);
    }
    return {cons < 1e-8 && trans < 1e-12 && sym < 1e-12,
            "conservation " + fmt("%.2e", cons) + ", translation " + fmt("%.2e", trans) + ", symmetry " +
                fmt("%.2e", sym)};
}

Outcome normal_form() {
    std::vector<double> grid;
    for (int i = 0; i <= 4000; ++i) grid.push_back(-20.0 + 0.01 * i);
    double worst = 0.0;
    for (double nu : {0.1, 0.5}) worst = std::max(worst, truncated_normalform_check(nu, grid).max_residual);
    return {worst < 1e-10, "max residual " + fmt("%.2e", worst)};
}

Outcome periodic_branch_law() {
    const auto s = branch_summary(0.2, {1e-3, 2e-3, 4e-3}, kMass2, 24);
    return {s.max_residual < 1e-10 && s.exponent >= 1.8 && s.exponent <= 2.2,
            "max residual " + fmt("%.2e", s.max_residual) + ", exponent " + fmt("%.4f", s.exponent)};
}

Outcome nanopteron_scan() {
    const auto scan = amplitude_scan({0.4, 0.3, 0.25, 0.2}, kMass2);
    double worst = 0.0;
    std::string amps;
    for (const auto& r : scan.rows) {
        worst = std::max(worst, r.residual);
        amps += fmt(" %.4e", r.amplitude);
    }
    return {worst < 1e-9 && scan.strictly_decreasing && scan.algebraic_order >= 8.0 && scan.exponential_r2 > 0.95,
            "max residual " + fmt("%.2e", worst) + ", amplitudes" + amps + ", algebraic order " +
                fmt("%.3f", scan.algebraic_order) + ", exponential R^2 " + fmt("%.5f", scan.exponential_r2)};
}

Outcome stegoton() {
    SimulationOptions opt;
    opt.nu = 0.25;
    const auto s = simulation_summary(kSpring2, opt);
    const double kappa = kSpring2.kappa;
    const double sim = s.stegoton.back();
    const double col = s.collocation_peak_ratio;
    return {std::abs(col / kappa - 1.0) < 0.1 && std::abs(sim / kappa - 1.0) < 0.1,
            "collocation ratio " + fmt("%.4f", col) + ", simulated ratio at T " + fmt("%.4f", sim)};
}

Outcome traveling_persistence() {
    SimulationOptions opt;
    opt.nu = 0.25;
    const auto s = simulation_summary(kMass2, opt);
    const double e = s.nanopteron.shape_error;
    return {e < 0.05 && e < s.core_only.shape_error && s.energy_drift < 1e-6,
            "nanopteron error " + fmt("%.4e", e) + ", core-only error " + fmt("%.4e", s.core_only.shape_error) +
                ", energy drift " + fmt("%.2e", s.energy_drift)};
}

Outcome kdv_ordering() {
    const auto rows = kdv_residual_scan({0.4, 0.3, 0.2}, kMass2);
    bool decreasing = true;
    std::string ratios;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ratios += fmt(" %.5g", rows[i].ratio);
        if (i > 0 && !(rows[i].ratio < rows[i - 1].ratio)) decreasing = false;
    }
    return {decreasing, "discrepancy/eps^2" + ratios};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dispersion classification", dispersion_classification},
        {"supersonic split", supersonic_split},
        {"Jordan chain and symmetry", jordan_chain},
        {"projection oracle equivalence", projection_oracle},
        {"nondegeneracy", nondegeneracy},
        {"first integral", first_integral},
        {"truncated normal form", normal_form},
        {"periodic branch", periodic_branch_law},
        {"nanopteron scan", nanopteron_scan},
        {"stegoton", stegoton},
        {"traveling persistence", traveling_persistence},
        {"KdV ordering", kdv_ordering},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.passed) ++failures;
        std::printf("%s %2zu %s (%.2f s): %s\n", out.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
