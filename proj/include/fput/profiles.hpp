#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fput/params.hpp"

namespace fput {

enum class Coordinate { Position, RelativeDisplacement };

struct ProfileSpec {
    double epsilon = 0.2;
    double alpha = 0.0;
    // DimerKind::Mass or DimerKind::Spring.
    DimerKind dimer_kind = DimerKind::Mass;
    DimerParams params;
    Coordinate coordinate = Coordinate::RelativeDisplacement;

    void validate() const;
};

// c_eps = ((1+w)/(2w) - eps^2)^{-1/2} (mass) or ((1+kappa)/(2 kappa) - eps^2)^{-1/2} (spring).
double wave_speed(const ProfileSpec& spec);
// Inverse of wave_speed: eps with c_eps = c.
double epsilon_from_speed(DimerKind kind, const DimerParams& p, double c);

// Decay rate q_w (mass) or q_kappa (spring).
double decay_rate(const ProfileSpec& spec);

// Leading core amplitude of the relative-displacement profile on the given sublattice.
double core_amplitude(const ProfileSpec& spec, Parity parity);

// Relative-displacement sech^2 core of the nanopteron at long-wave coordinate X.
double sech2_core(const ProfileSpec& spec, double X, Parity parity);

// Leading tanh front of the position profile.
double front_profile(const ProfileSpec& spec, double X);

// T(X) = X + eps^2 theta tanh(q X / 2).
double phase_map(const ProfileSpec& spec, double theta, double X);

// E_w (mass) or E_kappa (spring) evaluated at the critical frequency omega_*.
std::complex<double> ripple_ratio(const ProfileSpec& spec);

// Leading ripple: position components p_odd = Re(E e^{i Omega X}), p_even = cos(Omega X), Omega = omega_*/eps.
// In relative-displacement coordinates the strain of the spring to the right of the site is returned.
double periodic_leading(const ProfileSpec& spec, double X, Parity parity);

struct LeadingProfile {
    std::vector<double> grid;
    std::vector<double> values_odd;
    std::vector<double> values_even;
    double core_amplitude = 0.0;
    double decay_rate = 0.0;
    double stegoton_factor = 1.0;
    double frequency = 0.0;
};

struct NanopteronComponents {
    double alpha = 0.0;
    double theta = 0.0;
};

// eps^2 [core(X) + alpha periodic(T(X))] sampled on the grid (relative displacement).
LeadingProfile assemble_nanopteron(const ProfileSpec& spec, const NanopteronComponents& comp,
                                   const std::vector<double>& grid);

// Beale-route rescaling: nu^2 varsigma(nu X) and the speed C_nu.
double beale_varsigma(DimerKind kind, const DimerParams& p, double X);
double beale_speed(DimerKind kind, const DimerParams& p, double nu);

struct NormalFormConstants {
    double omega = 1.0;
    double lfrak0 = 1.0;
    double qfrak0 = 1.0;
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 0.0;
};

// Principal part N(y, nu) of the reduced four-dimensional system.
std::array<double, 4> normal_form_principal(const std::array<double, 4>& y, double nu, const NormalFormConstants& k);

// sigma(t) = (sech^2(t/2), -sech^2(t/2) tanh(t/2), 0, 0) and its derivative.
std::array<double, 4> normal_form_sigma(double t);
std::array<double, 4> normal_form_sigma_derivative(double t);

struct NormalFormResidual {
    double max_residual = 0.0;
    double max_residual_first_two = 0.0;
};

// max_t |sigma'(t) + offset - N(sigma(t) + offset, nu)| over the grid.
NormalFormResidual truncated_normalform_check(double nu, const std::vector<double>& t_grid,
                                              const NormalFormConstants& k = {}, double offset = 0.0);

struct TanhDecomposition {
    double L_plus = 0.0;
    double L_minus = 0.0;
    std::vector<double> remainder;
    // sup e^{rate |X|} |remainder|.
    double weighted_sup = 0.0;
};

// Splits f into ((L+ - L-)/2) tanh(q_star X) + (L+ + L-)/2 plus a remainder; tail means taken over |X| >= X0.
TanhDecomposition tanh_decompose(const std::vector<double>& X, const std::vector<double>& f, double q_star,
                                 double X0, double weight_rate, double tail_tolerance = 1e-6);

}  // namespace fput
