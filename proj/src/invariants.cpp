#include "fput/invariants.hpp"

#include <cmath>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"

namespace fput {

namespace {

// Strains of the odd and even springs over the delay window s in [-1, 0].
double strain_odd(const RealState& u, double s) { return u.P2(s + 1.0) - u.P1(s); }
double strain_even(const RealState& u, double s) { return u.P1(s + 1.0) - u.P2(s); }

double normalization(const DimerParams& p) { return p.w * (1.0 + p.kappa) * laurent_constants(p).a_m4; }

}  // namespace

double first_integral_J(const RealState& u, const DimerParams& p, double c) {
    const double integral = integrate(
        [&](double s) { return p.force(Parity::Odd, strain_odd(u, s)) + p.force(Parity::Even, strain_even(u, s)); },
        -1.0, 0.0);
    return c * c * (u.xi1 + u.xi2 / p.w) - integral;
}

double dJ_direction(const RealState& u, const RealState& du, const DimerParams& p, double c) {
    const double integral = integrate(
        [&](double s) {
            return p.force_derivative(Parity::Odd, strain_odd(u, s)) * strain_odd(du, s) +
                   p.force_derivative(Parity::Even, strain_even(u, s)) * strain_even(du, s);
        },
        -1.0, 0.0);
    return c * c * (du.xi1 + du.xi2 / p.w) - integral;
}

double d2J_zero(const RealState& u, const RealState& v, const DimerParams& p) {
    const double a1 = p.force_curvature(Parity::Odd);
    const double a2 = p.force_curvature(Parity::Even);
    return -integrate(
        [&](double s) {
            return a1 * strain_odd(u, s) * strain_odd(v, s) + a2 * strain_even(u, s) * strain_even(v, s);
        },
        -1.0, 0.0);
}

double speed_from_mu(const DimerParams& p, double mu) {
    const double cs = sound_speed(p);
    if (!(mu >= 0.0) || mu > 0.5 / (cs * cs))
        throw Error(ErrorKind::MuOutOfRange, "mu must lie in [0, 1/(2 c_s^2)]");
    return 1.0 / std::sqrt(1.0 / (cs * cs) - mu);
}

double rescaled_J(const RealState& u, const DimerParams& p, double mu) {
    return normalization(p) * first_integral_J(u, p, speed_from_mu(p, mu));
}

double jstar(const RealState& u, const DimerParams& p, double mu) {
    const double cs2 = sound_speed(p) * sound_speed(p);
    speed_from_mu(p, mu);
    return normalization(p) * cs2 * cs2 / (1.0 - cs2 * mu) * (u.xi1 + u.xi2 / p.w);
}

double d2J0_finite_difference(const RealState& u, const RealState& v, const DimerParams& p, double h) {
    // Polarized second difference, then one Richardson step.
    auto second = [&](double step) {
        auto at = [&](double a, double b) { return rescaled_J(a * u + b * v, p, 0.0); };
        return (at(step, step) - at(step, -step) - at(-step, step) + at(-step, -step)) / (4.0 * step * step);
    };
    const double coarse = second(h);
    const double fine = second(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

double lfrak0(const DimerParams& p, Route route) {
    const double cs = sound_speed(p);
    if (route == Route::Closed) {
        return -(1.0 + p.kappa) * (1.0 + p.w) * laurent_constants(p).a_m4 * std::pow(cs, 4);
    }
    const auto chain = gen_eigvec_chain(p);
    return functional_chi(2, apply_L1(p, chain.chi[1]), p) - jstar(chain.chi[1], p, 0.0);
}

double qfrak0(const DimerParams& p, Route route) {
    if (route == Route::Closed) {
        const double a4 = laurent_constants(p).a_m4;
        return 16.0 * p.w * a4 * (p.beta + std::pow(p.kappa, 3)) / std::pow(1.0 + p.kappa, 2);
    }
    const auto chain = gen_eigvec_chain(p);
    const auto& chi1 = chain.chi[1];
    return 2.0 * functional_chi(2, nl0(p, chi1, chi1), p) - d2J0_finite_difference(chi1, chi1, p);
}

NondegenReport nondegeneracy_report(const DimerParams& p) {
    NondegenReport r;
    r.params = p;
    r.lfrak0_closed = lfrak0(p, Route::Closed);
    r.lfrak0_oracle = lfrak0(p, Route::Oracle);
    r.qfrak0_closed = qfrak0(p, Route::Closed);
    r.qfrak0_oracle = qfrak0(p, Route::Oracle);
    r.normalization_ratio = r.lfrak0_closed / r.lfrak0_oracle;
    const auto chain = gen_eigvec_chain(p);
    r.d2j0_formula = normalization(p) * d2J_zero(chain.chi[1], chain.chi[1], p);
    r.d2j0_finite_difference = d2J0_finite_difference(chain.chi[1], chain.chi[1], p);
    r.core_coefficient_from_constants = -3.0 * r.lfrak0_oracle / (2.0 * r.qfrak0_oracle);
    r.core_coefficient_theorem = p.kind() == DimerKind::Spring
                                     ? 3.0 * p.kappa * p.kappa / (p.beta + std::pow(p.kappa, 3))
                                     : 3.0 * p.w / (1.0 + p.w);
    return r;
}

}  // namespace fput
