#pragma once

#include <cstdint>
#include <vector>

#include "fput/beale.hpp"
#include "fput/dispersion.hpp"
#include "fput/params.hpp"
#include "fput/simulate.hpp"
#include "fput/state_space.hpp"

namespace fput {

inline constexpr std::uint64_t kDefaultSeed = 0xD1E4;

struct DispersionSummary {
    double c_s = 0.0;
    // Lambda(0), Lambda''(0), Lambda''''(0) at c_s, each relative to |Lambda''''(0)|.
    double lambda0_rel = 0.0;
    double lambda2_rel = 0.0;
    double lambda4 = 0.0;
    int zero_multiplicity = 0;
    double omega_star = 0.0;
    double omega_star_residual = 0.0;
    int omega_star_multiplicity = 0;
    std::vector<double> deltas;
    // Real root x_c of det M at c^2 = c_s^2 + delta.
    std::vector<double> x_c;
    bool x_c_monotone = false;
};

DispersionSummary dispersion_summary(const DimerParams& p, const std::vector<double>& deltas,
                                     const RootScanOptions& opt = {});

struct JordanSummary {
    // max ||L0 chi_0||, ||L0 chi_{k+1} - chi_k||.
    double chain_residual = 0.0;
    // max ||S chi_k - (-1)^{k+1} chi_k||.
    double parity_defect = 0.0;
};

JordanSummary jordan_summary(const DimerParams& p);

struct ProjectionSummary {
    double idempotency_defect = 0.0;
    double commutation_defect = 0.0;
    // max over states of ||ratio * series - contour|| with the mean calibration ratio.
    double series_defect = 0.0;
    double ratio_mean = 0.0;
    double ratio_spread = 0.0;
    int states = 0;
};

// Seeded comparison of sum_k chi*_k[U] chi_k against the contour projection at c_s.
ProjectionSummary projection_summary(const DimerParams& p, std::uint64_t seed, int states,
                                     const ContourOptions& opt = {});

struct FirstIntegralSummary {
    // max |DJ(U) F(U, c)| / (1 + ||U||^2) over states and speeds.
    double conservation_defect = 0.0;
    // max |J(U + s chi_0) - J(U)|.
    double translation_defect = 0.0;
    // max |J(S U) - J(U)|.
    double symmetry_defect = 0.0;
    int states = 0;
};

FirstIntegralSummary first_integral_summary(const DimerParams& p, const std::vector<double>& speeds,
                                            std::uint64_t seed, int states);

// beta at which the oracle Qfrak0 changes sign for the spring dimer with given kappa, by bisection on
// [lo, hi].  NoRoot if the sign does not change.
double qfrak0_sign_change(double kappa, double lo, double hi, double tol = 1e-10);

struct BranchSummary {
    std::vector<BranchPoint> points;
    double Omega_nu = 0.0;
    // Slope of log |Omega(a) - Omega_nu| against log a.
    double exponent = 0.0;
    double max_residual = 0.0;
};

BranchSummary branch_summary(double nu, const std::vector<double>& amplitudes, const DimerParams& p, int modes,
                             const NewtonOptions& opt = {});

struct SimulationOptions {
    double nu = 0.25;
    double dt = 0.005;
    // T = time_factor / c.
    double time_factor = 50.0;
    int snapshots = 20;
    NanopteronOptions solver;
};

struct SimulationSummary {
    FourierProfile profile;
    int sites = 0;
    double T = 0.0;
    TravelingReport nanopteron;
    TravelingReport core_only;
    double energy_drift = 0.0;
    double collocation_peak_ratio = 0.0;
    std::vector<double> stegoton;
    SimTrace trace;
};

// Solves the nanopteron at nu, simulates it and its bare sech^2 core on a chain of
// 2 floor(L) sites over T = time_factor / c.
SimulationSummary simulation_summary(const DimerParams& p, const SimulationOptions& opt = {});

}  // namespace fput
