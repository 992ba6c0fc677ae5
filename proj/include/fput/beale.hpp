#pragma once

#include <vector>

#include "fput/fourier.hpp"
#include "fput/params.hpp"

namespace fput {

// Mass dimer: (rho1 + rho2)/2 even and (rho1 - rho2)/2 odd, i.e. rho2(x) = rho1(-x).
// Spring dimer: rho1 and rho2 both even.
enum class FourierSymmetry { EvenOdd, EvenEven };

FourierSymmetry symmetry_for_fourier(const DimerParams& p);

// Traveling-wave profile (rho1, rho2) sampled on the periodic grid x_i = -L + i h, h = 2L/N.
struct FourierProfile {
    DimerParams params;
    FourierSymmetry symmetry = FourierSymmetry::EvenOdd;
    double L = 0.0;
    int modes = 0;
    double c = 0.0;
    double nu = 0.0;
    double omega_c = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::vector<double> x;
    std::vector<double> rho1;
    std::vector<double> rho2;
    // Normalized real-FFT coefficients (N/2 + 1 bins) of rho1 and rho2.
    std::vector<std::complex<double>> coeffs1;
    std::vector<std::complex<double>> coeffs2;

    // Recompute grid and coefficients from rho1, rho2 and L.
    void finalize();
    // Trigonometric interpolant (order 0) and its derivatives (order 1, 2) at arbitrary x.
    double eval(int component, double xq, int order = 0) const;
    int grid_size() const { return static_cast<int>(rho1.size()); }
};

struct NewtonOptions {
    double tol = 1e-11;
    int max_iter = 40;
    int max_halvings = 30;
};

// Omega_nu = omega_c / nu with c = sqrt(c_s^2 + nu^2).
double critical_ripple_frequency(double nu, const DimerParams& p);

// Half length (m + 1/2) pi / omega_c rounded up from L0.
double aligned_half_length(double omega_c, double L0);

struct BranchPoint {
    double a = 0.0;
    // Long-wave frequency Omega = omega / nu and lattice wavenumber omega.
    double Omega = 0.0;
    double omega = 0.0;
    FourierProfile profile;
    double residual = 0.0;
};

// Periodic ripple of amplitude a (primary cosine coefficient pinned) with unknown wavenumber.
BranchPoint periodic_branch(double nu, double a, const DimerParams& p, int modes = 24, const NewtonOptions& opt = {});

struct NanopteronOptions {
    // Half length: 0 selects aligned_half_length(omega_c, length_factor / nu).
    double L = 0.0;
    double length_factor = 30.0;
    // Number of modes M (N = 2M grid points): 0 selects ceil(k_max L / pi).
    int modes = 0;
    double k_max = 12.0;
    NewtonOptions newton;
};

// Periodic-domain nanopteron at c = sqrt(c_s^2 + nu^2) by symmetry-restricted Fourier Newton.
FourierProfile nanopteron_solve(double nu, const DimerParams& p, const NanopteronOptions& opt = {});

// max |R| of the traveling-wave residual after trigonometric refinement by `factor`.
double refined_residual(const FourierProfile& prof, int factor = 2);

// Half the peak-to-trough range of the interpolant on [x_lo, x_hi] (component 1 or 2).
double ripple_amplitude(const FourierProfile& prof, double x_lo, double x_hi, int component = 1);
// Far-field window [L/2, L - L/8] on both sides, maximum over the two sides.
double far_field_ripple_amplitude(const FourierProfile& prof, int component = 1);

// Wavenumber of the largest Fourier coefficient above omega_c / 2.
double dominant_ripple_wavenumber(const FourierProfile& prof, int component = 1);

// Peak of each component and their ratio rho1 / rho2.
double peak_ratio(const FourierProfile& prof);

// Least-squares amplitude A of A sech^2(q x / 2) against component `component` over |x| <= x_max.
double fit_core_amplitude(const FourierProfile& prof, double q, double x_max, int component = 1);

struct ScanRow {
    double nu = 0.0;
    double amplitude = 0.0;
    double residual = 0.0;
    double L = 0.0;
    int modes = 0;
    int iterations = 0;
};

struct AmplitudeScan {
    std::vector<ScanRow> rows;
    bool has_fits = false;
    // Slope of log a vs log nu.
    double algebraic_order = 0.0;
    // Slope and R^2 of log a vs 1/nu.
    double exponential_slope = 0.0;
    double exponential_r2 = 0.0;
    bool strictly_decreasing = false;
    // Solved profiles, one per row.
    std::vector<FourierProfile> profiles;
};

AmplitudeScan amplitude_scan(const std::vector<double>& nu_list, const DimerParams& p,
                             const NanopteronOptions& opt = {});

}  // namespace fput
