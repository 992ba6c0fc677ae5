#include "fput/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"

namespace fput {

namespace {

double sech2(double x) {
    const double s = 1.0 / std::cosh(x);
    return s * s;
}

bool is_mass(const ProfileSpec& spec) { return spec.dimer_kind == DimerKind::Mass; }

// (1+w)/(2w) or (1+kappa)/(2 kappa), i.e. c_s^{-2}.
double inverse_sound_speed_squared(DimerKind kind, const DimerParams& p) {
    return kind == DimerKind::Mass ? (1.0 + p.w) / (2.0 * p.w) : (1.0 + p.kappa) / (2.0 * p.kappa);
}

double spring_denominator(const DimerParams& p) {
    const double d = p.beta + p.kappa * p.kappa * p.kappa;
    if (std::abs(d) < 1e-14) throw Error(ErrorKind::SpringSingular, "beta + kappa^3 vanishes");
    return d;
}

}  // namespace

void ProfileSpec::validate() const {
    params.validate();
    if (dimer_kind != DimerKind::Mass && dimer_kind != DimerKind::Spring)
        throw Error(ErrorKind::ConfigInvalid, "profiles are defined for mass or spring dimers only");
    if (dimer_kind == DimerKind::Mass && params.kappa != 1.0)
        throw Error(ErrorKind::ConfigInvalid, "a mass dimer requires kappa = 1");
    if (dimer_kind == DimerKind::Spring && params.w != 1.0)
        throw Error(ErrorKind::ConfigInvalid, "a spring dimer requires w = 1");
    if (!(epsilon > 0.0) || epsilon * epsilon >= inverse_sound_speed_squared(dimer_kind, params))
        throw Error(ErrorKind::ConfigInvalid, "epsilon must satisfy 0 < eps^2 < c_s^{-2}");
    if (alpha < 0.0) throw Error(ErrorKind::ConfigInvalid, "alpha must be nonnegative");
}

double wave_speed(const ProfileSpec& spec) {
    return 1.0 / std::sqrt(inverse_sound_speed_squared(spec.dimer_kind, spec.params) - spec.epsilon * spec.epsilon);
}

double epsilon_from_speed(DimerKind kind, const DimerParams& p, double c) {
    const double e2 = inverse_sound_speed_squared(kind, p) - 1.0 / (c * c);
    if (!(e2 > 0.0)) throw Error(ErrorKind::ConfigInvalid, "wave speed must be supersonic");
    return std::sqrt(e2);
}

double decay_rate(const ProfileSpec& spec) {
    const double r = is_mass(spec) ? spec.params.w : spec.params.kappa;
    return std::sqrt(6.0 * r * (1.0 + r) / (r * r - r + 1.0));
}

double core_amplitude(const ProfileSpec& spec, Parity parity) {
    if (is_mass(spec)) return 3.0 * spec.params.w / (1.0 + spec.params.w);
    const double k = spec.params.kappa;
    const double base = 3.0 * k * k / spring_denominator(spec.params);
    // The softer odd spring carries the larger strain: r_odd = kappa r_even at leading order.
    return parity == Parity::Odd ? k * base : base;
}

double sech2_core(const ProfileSpec& spec, double X, Parity parity) {
    return core_amplitude(spec, parity) * sech2(0.5 * decay_rate(spec) * X);
}

double front_profile(const ProfileSpec& spec, double X) {
    double amp;
    if (is_mass(spec)) {
        const double w = spec.params.w;
        amp = std::sqrt(6.0 * w * (w * w - w + 1.0) / std::pow(1.0 + w, 3));
    } else {
        const double k = spec.params.kappa;
        amp = std::sqrt(6.0 * k * k * k * (1.0 + k) * (k * k - k + 1.0)) / (2.0 * spring_denominator(spec.params));
    }
    return amp * std::tanh(0.5 * decay_rate(spec) * X);
}

double phase_map(const ProfileSpec& spec, double theta, double X) {
    return X + spec.epsilon * spec.epsilon * theta * std::tanh(0.5 * decay_rate(spec) * X);
}

std::complex<double> ripple_ratio(const ProfileSpec& spec) {
    const auto& p = spec.params;
    const double omega = critical_frequency(p, sound_speed(p)).location.real();
    if (is_mass(spec)) return std::cos(omega) / (1.0 - p.w / (1.0 + p.w) * omega * omega);
    const std::complex<double> iw(0.0, omega);
    const double k = p.kappa;
    return (std::exp(iw) + k * std::exp(-iw)) / (1.0 + k - 2.0 * k / (1.0 + k) * omega * omega);
}

double periodic_leading(const ProfileSpec& spec, double X, Parity parity) {
    const auto& p = spec.params;
    const double omega = critical_frequency(p, sound_speed(p)).location.real();
    const double Omega = omega / spec.epsilon;
    const auto E = ripple_ratio(spec);
    auto pos = [&](double x, Parity par) {
        if (par == Parity::Even) return std::cos(Omega * x);
        return (E * std::exp(std::complex<double>(0.0, Omega * x))).real();
    };
    if (spec.coordinate == Coordinate::Position) return pos(X, parity);
    const Parity other = parity == Parity::Odd ? Parity::Even : Parity::Odd;
    return pos(X + spec.epsilon, other) - pos(X, parity);
}

LeadingProfile assemble_nanopteron(const ProfileSpec& spec, const NanopteronComponents& comp,
                                   const std::vector<double>& grid) {
    if (comp.alpha < 0.0) throw Error(ErrorKind::ConfigInvalid, "alpha must be nonnegative");
    ProfileSpec rel = spec;
    rel.coordinate = Coordinate::RelativeDisplacement;
    LeadingProfile out;
    out.grid = grid;
    out.core_amplitude = core_amplitude(rel, Parity::Even);
    out.decay_rate = decay_rate(rel);
    out.stegoton_factor = core_amplitude(rel, Parity::Odd) / core_amplitude(rel, Parity::Even);
    out.frequency = critical_frequency(spec.params, sound_speed(spec.params)).location.real() / spec.epsilon;
    const double e2 = spec.epsilon * spec.epsilon;
    for (double X : grid) {
        const double T = phase_map(rel, comp.theta, X);
        double odd = sech2_core(rel, X, Parity::Odd);
        double even = sech2_core(rel, X, Parity::Even);
        if (comp.alpha != 0.0) {
            odd += comp.alpha * periodic_leading(rel, T, Parity::Odd);
            even += comp.alpha * periodic_leading(rel, T, Parity::Even);
        }
        out.values_odd.push_back(e2 * odd);
        out.values_even.push_back(e2 * even);
    }
    return out;
}

double beale_varsigma(DimerKind kind, const DimerParams& p, double X) {
    if (kind == DimerKind::Mass) {
        const double s = (1.0 + p.w) / (2.0 * p.w);
        const double qw = std::sqrt(6.0 * p.w * (1.0 + p.w) / (p.w * p.w - p.w + 1.0));
        return 1.5 * s * sech2(s * qw * X / 2.0);
    }
    const double k = p.kappa;
    const double s = (1.0 + k) / (2.0 * k);
    const double qk = std::sqrt(6.0 * k * (1.0 + k) / (k * k - k + 1.0));
    return 3.0 * (1.0 + k) * (1.0 + k) / (4.0 * spring_denominator(p)) * sech2(s * qk * X / 2.0);
}

double beale_speed(DimerKind kind, const DimerParams& p, double nu) {
    return std::sqrt(1.0 / inverse_sound_speed_squared(kind, p) + nu * nu);
}

std::array<double, 4> normal_form_principal(const std::array<double, 4>& y, double nu, const NormalFormConstants& k) {
    const double rot = k.omega / nu;
    return {y[1], y[0] - 1.5 * y[0] * y[0] - k.n1 * k.qfrak0 * (y[2] * y[2] + y[3] * y[3]),
            -rot * y[3] + k.n2 * nu * y[3] / k.lfrak0 + k.n3 * nu * y[0] * y[3] / k.lfrak0,
            rot * y[2] + k.n2 * nu * y[2] / k.lfrak0 + k.n3 * nu * y[0] * y[2] / k.lfrak0};
}

std::array<double, 4> normal_form_sigma(double t) {
    const double s = sech2(0.5 * t);
    return {s, -s * std::tanh(0.5 * t), 0.0, 0.0};
}

std::array<double, 4> normal_form_sigma_derivative(double t) {
    const double s = sech2(0.5 * t);
    const double th = std::tanh(0.5 * t);
    // d/dt sech^2(t/2) = -sech^2 tanh; d/dt (-sech^2 tanh) = sech^2 tanh^2 - sech^4 / 2.
    return {-s * th, s * th * th - 0.5 * s * s, 0.0, 0.0};
}

NormalFormResidual truncated_normalform_check(double nu, const std::vector<double>& t_grid,
                                              const NormalFormConstants& k, double offset) {
    if (!(nu > 0.0)) throw Error(ErrorKind::ConfigInvalid, "nu must be positive");
    NormalFormResidual r;
    for (double t : t_grid) {
        auto y = normal_form_sigma(t);
        const auto dy = normal_form_sigma_derivative(t);
        for (auto& v : y) v += offset;
        const auto n = normal_form_principal(y, nu, k);
        for (int i = 0; i < 4; ++i) {
            const double e = std::abs(dy[i] - n[i]);
            r.max_residual = std::max(r.max_residual, e);
            if (i < 2) r.max_residual_first_two = std::max(r.max_residual_first_two, e);
        }
    }
    return r;
}

TanhDecomposition tanh_decompose(const std::vector<double>& X, const std::vector<double>& f, double q_star,
                                 double X0, double weight_rate, double tail_tolerance) {
    if (X.size() != f.size() || X.empty()) throw Error(ErrorKind::ConfigInvalid, "sample arrays must match");
    double sp = 0.0, sm = 0.0, sp2 = 0.0, sm2 = 0.0;
    int np = 0, nm = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i] >= X0) {
            sp += f[i];
            sp2 += f[i] * f[i];
            ++np;
        } else if (X[i] <= -X0) {
            sm += f[i];
            sm2 += f[i] * f[i];
            ++nm;
        }
    }
    if (np == 0 || nm == 0) throw Error(ErrorKind::NonConvergentTails, "no samples beyond |X| >= X0");
    TanhDecomposition out;
    out.L_plus = sp / np;
    out.L_minus = sm / nm;
    const double var_p = std::max(0.0, sp2 / np - out.L_plus * out.L_plus);
    const double var_m = std::max(0.0, sm2 / nm - out.L_minus * out.L_minus);
    const double scale = 1.0 + std::max(std::abs(out.L_plus), std::abs(out.L_minus));
    if (std::sqrt(std::max(var_p, var_m)) > tail_tolerance * scale)
        throw Error(ErrorKind::NonConvergentTails, "tail samples are not asymptotically constant");
    const double half_jump = 0.5 * (out.L_plus - out.L_minus);
    const double mean = 0.5 * (out.L_plus + out.L_minus);
    out.remainder.resize(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        out.remainder[i] = f[i] - (half_jump * std::tanh(q_star * X[i]) + mean);
        out.weighted_sup = std::max(out.weighted_sup, std::exp(weight_rate * std::abs(X[i])) * std::abs(out.remainder[i]));
    }
    return out;
}

}  // namespace fput
