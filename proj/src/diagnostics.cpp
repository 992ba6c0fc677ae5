#include "fput/diagnostics.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <random>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/invariants.hpp"
#include "fput/profiles.hpp"

namespace fput {

namespace {

// Scalars followed by equispaced samples of P1 and P2.
std::vector<double> samples(const RealState& u, int count = 65) {
    std::vector<double> out{u.p1, u.p2, u.xi1, u.xi2};
    for (int i = 0; i < count; ++i) {
        const double v = -1.0 + 2.0 * i / (count - 1);
        out.push_back(u.P1(v));
        out.push_back(u.P2(v));
    }
    return out;
}

DimerKind profile_kind_of(const DimerParams& p) {
    switch (p.kind()) {
        case DimerKind::Mass:
        case DimerKind::Monatomic:
            return DimerKind::Mass;
        case DimerKind::Spring:
            return DimerKind::Spring;
        case DimerKind::General:
            break;
    }
    throw Error(ErrorKind::ConfigInvalid, "this analysis needs a mass or spring dimer; got " + p.describe());
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

DispersionSummary dispersion_summary(const DimerParams& p, const std::vector<double>& deltas,
                                     const RootScanOptions& opt) {
    DispersionSummary s;
    s.c_s = sound_speed(p);
    const auto d = taylor_lambda_at_zero(p, s.c_s, 4);
    s.lambda4 = d[4];
    s.lambda0_rel = std::abs(d[0]) / std::abs(d[4]);
    s.lambda2_rel = std::abs(d[2]) / (8.0 * p.kappa * p.w);
    s.zero_multiplicity = zero_root_multiplicity(p, s.c_s);
    const auto root = critical_frequency(p, s.c_s, opt);
    s.omega_star = root.location.real();
    s.omega_star_residual = root.residual;
    s.omega_star_multiplicity = root.multiplicity;
    s.deltas = deltas;
    for (double delta : deltas) {
        const double c = std::sqrt(s.c_s * s.c_s + delta);
        s.x_c.push_back(supersonic_real_root(p, c, opt).location.real());
    }
    s.x_c_monotone = true;
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if ((deltas[i] > deltas[i - 1]) != (s.x_c[i] > s.x_c[i - 1])) s.x_c_monotone = false;
    return s;
}

JordanSummary jordan_summary(const DimerParams& p) {
    JordanSummary s;
    const auto chain = gen_eigvec_chain(p);
    const double cs = sound_speed(p);
    const auto kind = symmetry_for(p);
    for (int k = 0; k < 4; ++k) {
        RealState r = apply_L(p, cs, chain.chi[k]);
        if (k > 0) r -= chain.chi[k - 1];
        s.chain_residual = std::max(s.chain_residual, r.sup_norm());
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        const RealState d = symmetry_apply(kind, chain.chi[k]) - sign * chain.chi[k];
        s.parity_defect = std::max(s.parity_defect, d.sup_norm());
    }
    return s;
}

ProjectionSummary projection_summary(const DimerParams& p, std::uint64_t seed, int states, const ContourOptions& opt) {
    if (states < 1) throw Error(ErrorKind::ConfigInvalid, "at least one state is required");
    ProjectionSummary s;
    s.states = states;
    std::mt19937_64 rng(seed);
    const double cs = sound_speed(p);
    const auto chain = gen_eigvec_chain(p);
    std::vector<RealState> series_list;
    std::vector<RealState> contour_list;
    std::vector<double> ratios;
    for (int i = 0; i < states; ++i) {
        const RealState u = random_state(rng);
        const RealState pu = contour_projection(p, cs, u, opt);
        const double scale = std::max(1.0, pu.sup_norm());
        s.idempotency_defect =
            std::max(s.idempotency_defect, (contour_projection(p, cs, pu, opt) - pu).sup_norm() / scale);
        const RealState comm = contour_projection(p, cs, apply_L(p, cs, u), opt) - apply_L(p, cs, pu);
        s.commutation_defect = std::max(s.commutation_defect, comm.sup_norm() / scale);
        const auto chi = functional_chi_all(u, p);
        RealState series = RealState::zero();
        for (int k = 0; k < 4; ++k) series += chi[k] * chain.chi[k];
        const auto a = samples(series);
        const auto b = samples(pu);
        double ab = 0.0, aa = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            ab += a[j] * b[j];
            aa += a[j] * a[j];
        }
        ratios.push_back(ab / aa);
        series_list.push_back(series);
        contour_list.push_back(pu);
    }
    double sum = 0.0;
    for (double r : ratios) sum += r;
    s.ratio_mean = sum / states;
    s.ratio_spread = *std::max_element(ratios.begin(), ratios.end()) - *std::min_element(ratios.begin(), ratios.end());
    for (int i = 0; i < states; ++i) {
        const RealState d = s.ratio_mean * series_list[i] - contour_list[i];
        s.series_defect = std::max(s.series_defect, d.sup_norm() / std::max(1.0, contour_list[i].sup_norm()));
    }
    return s;
}

FirstIntegralSummary first_integral_summary(const DimerParams& p, const std::vector<double>& speeds,
                                            std::uint64_t seed, int states) {
    if (states < 1 || speeds.empty()) throw Error(ErrorKind::ConfigInvalid, "need states and speeds");
    FirstIntegralSummary s;
    s.states = states;
    std::mt19937_64 rng(seed);
    const auto chain = gen_eigvec_chain(p);
    const auto kind = symmetry_for(p);
    for (int i = 0; i < states; ++i) {
        const RealState u = random_state(rng);
        const double n = u.sup_norm();
        for (double c : speeds) {
            const RealState f = tw_vector_field(p, c, u);
            s.conservation_defect = std::max(s.conservation_defect, std::abs(dJ_direction(u, f, p, c)) / (1.0 + n * n));
            const double j0 = first_integral_J(u, p, c);
            const RealState shifted = u + 0.37 * chain.chi[0];
            s.translation_defect = std::max(s.translation_defect, std::abs(first_integral_J(shifted, p, c) - j0));
            s.symmetry_defect =
                std::max(s.symmetry_defect, std::abs(first_integral_J(symmetry_apply(kind, u), p, c) - j0));
        }
    }
    return s;
}

double qfrak0_sign_change(double kappa, double lo, double hi, double tol) {
    auto f = [kappa](double beta) { return qfrak0(DimerParams::make(kappa, beta, 1.0), Route::Oracle); };
    const double flo = f(lo);
    const double fhi = f(hi);
    if ((flo < 0.0) == (fhi < 0.0)) throw Error(ErrorKind::NoRoot, "Qfrak0 does not change sign on the bracket");
    auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto r = boost::math::tools::bisect(f, lo, hi, stop);
    return 0.5 * (r.first + r.second);
}

BranchSummary branch_summary(double nu, const std::vector<double>& amplitudes, const DimerParams& p, int modes,
                             const NewtonOptions& opt) {
    if (amplitudes.size() < 2) throw Error(ErrorKind::ConfigInvalid, "the branch fit needs at least two amplitudes");
    BranchSummary s;
    s.Omega_nu = critical_ripple_frequency(nu, p);
    std::vector<double> la, ld;
    for (double a : amplitudes) {
        auto pt = periodic_branch(nu, a, p, modes, opt);
        s.max_residual = std::max(s.max_residual, pt.residual);
        la.push_back(std::log(a));
        ld.push_back(std::log(std::abs(pt.Omega - s.Omega_nu)));
        s.points.push_back(std::move(pt));
    }
    s.exponent = slope(la, ld);
    return s;
}

SimulationSummary simulation_summary(const DimerParams& p, const SimulationOptions& opt) {
    if (!(opt.dt > 0.0) || !(opt.time_factor > 0.0)) throw Error(ErrorKind::ConfigInvalid, "invalid simulation options");
    SimulationSummary s;
    s.profile = nanopteron_solve(opt.nu, p, opt.solver);
    const FourierProfile& prof = s.profile;
    s.collocation_peak_ratio = peak_ratio(prof);
    s.sites = 2 * static_cast<int>(std::floor(prof.L));
    s.T = opt.time_factor / prof.c;
    IntegrateOptions io;
    io.snapshots = opt.snapshots;
    s.trace = integrate(init_from_profile(prof, s.sites), opt.dt, s.T, io);
    s.nanopteron = traveling_error(s.trace, prof);
    s.energy_drift = s.trace.max_energy_drift;
    s.stegoton = stegoton_ratio(s.trace);

    ProfileSpec spec;
    spec.params = p;
    spec.dimer_kind = profile_kind_of(p);
    spec.epsilon = epsilon_from_speed(spec.dimer_kind, p, prof.c);
    const double e2 = spec.epsilon * spec.epsilon;
    FourierProfile core = prof;
    for (int i = 0; i < core.grid_size(); ++i) {
        core.rho1[i] = e2 * sech2_core(spec, spec.epsilon * core.x[i], Parity::Odd);
        core.rho2[i] = e2 * sech2_core(spec, spec.epsilon * core.x[i], Parity::Even);
    }
    core.finalize();
    const auto core_trace = integrate(init_from_profile(core, s.sites), opt.dt, s.T, io);
    s.core_only = traveling_error(core_trace, core);
    s.energy_drift = std::max(s.energy_drift, core_trace.max_energy_drift);
    return s;
}

}  // namespace fput
