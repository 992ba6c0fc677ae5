#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "fput/params.hpp"

namespace fput {

struct RootReport {
    std::complex<double> location{0.0, 0.0};
    int multiplicity = 0;
    double residual = 0.0;
    // First four derivatives of the scanned function at the root.
    std::array<double, 4> derivatives{};
};

struct RootScanOptions {
    double step = 1e-3;
    double lower = 1e-6;
    double upper = 50.0;
    double bisection_tol = 1e-12;
};

// Lambda(k; c) = c^4 k^4 - c^2 (1+w)(1+kappa) k^2 + 2 kappa w (1 - cos 2k).
double lambda_dispersion(double k, const DimerParams& p, double c);
// k-derivatives of Lambda of order 1..4 at k.
std::array<double, 4> lambda_derivatives(double k, const DimerParams& p, double c);

// det M(z; c) = c^4 z^4 + c^2 (1+kappa)(1+w) z^2 + 2 kappa w (1 - cosh 2z).
std::complex<double> det_M(std::complex<double> z, const DimerParams& p, double c);

// Branches of the relative-displacement symbol, ordered lambda_minus <= lambda_plus.
std::pair<double, double> lambda_pm(double k, const DimerParams& p);

double sound_speed(const DimerParams& p);

// Exact k-derivatives d^n Lambda(0) for n = 0..order (order <= 6).
std::vector<double> taylor_lambda_at_zero(const DimerParams& p, double c, int order = 6);

// Multiplicity of k = 0 as a root of Lambda, using the scale-aware threshold
// |d^n Lambda(0)| < 1e-8 (1 + |Lambda''''(0)|).
int zero_root_multiplicity(const DimerParams& p, double c);

// Unique positive root of Lambda(.; c) in the scan window.
RootReport critical_frequency(const DimerParams& p, double c, const RootScanOptions& opt = {});

// Unique positive real root of det M(.; c) for slightly supersonic c.
RootReport supersonic_real_root(const DimerParams& p, double c, const RootScanOptions& opt = {});

// q_w for the mass dimer, q_kappa for the spring dimer.
double front_decay_rate(const DimerParams& p);

// Newton-type derivative of det M along the real axis, used by the root polish.
double det_M_real_derivative(double x, const DimerParams& p, double c);

}  // namespace fput
