#include "fput/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"

namespace fput {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

RealFFT::RealFFT(int n) : n_(n) {
    if (n < 2) throw Error(ErrorKind::ConfigInvalid, "FFT length must be at least 2");
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<double> in(n);
    std::vector<std::complex<double>> out(n / 2 + 1);
    auto* cout = reinterpret_cast<fftw_complex*>(out.data());
    forward_plan_ = fftw_plan_dft_r2c_1d(n, in.data(), cout, FFTW_ESTIMATE | FFTW_UNALIGNED);
    inverse_plan_ = fftw_plan_dft_c2r_1d(n, cout, in.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
}

RealFFT::~RealFFT() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(forward_plan_);
    fftw_destroy_plan(inverse_plan_);
}

Eigen::VectorXcd RealFFT::forward(const Eigen::VectorXd& x) const {
    Eigen::VectorXd in = x;
    Eigen::VectorXcd out(bins());
    fftw_execute_dft_r2c(forward_plan_, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Eigen::VectorXd RealFFT::inverse(const Eigen::VectorXcd& X) const {
    Eigen::VectorXcd in = X;
    Eigen::VectorXd out(n_);
    fftw_execute_dft_c2r(inverse_plan_, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    return out / static_cast<double>(n_);
}

Eigen::MatrixXcd RealFFT::forward_columns(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd in = x;
    Eigen::MatrixXcd out(bins(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        fftw_execute_dft_r2c(forward_plan_, in.col(j).data(), reinterpret_cast<fftw_complex*>(out.col(j).data()));
    return out;
}

Eigen::MatrixXd RealFFT::inverse_columns(const Eigen::MatrixXcd& X) const {
    Eigen::MatrixXcd in = X;
    Eigen::MatrixXd out(n_, X.cols());
    for (Eigen::Index j = 0; j < X.cols(); ++j)
        fftw_execute_dft_c2r(inverse_plan_, reinterpret_cast<fftw_complex*>(in.col(j).data()), out.col(j).data());
    return out / static_cast<double>(n_);
}

Eigen::Matrix2cd symbol_Ltilde(double k, const DimerParams& p) {
    const std::complex<double> e(std::cos(k), std::sin(k));
    const std::complex<double> em = std::conj(e);
    Eigen::Matrix2cd m;
    m << -(1.0 + p.w), p.kappa * (p.w * e + em), e + p.w * em, -p.kappa * (1.0 + p.w);
    return m;
}

SymbolDiagonalization diagonalize_symbol(double k, const DimerParams& p, const Eigen::Matrix2cd* previous) {
    const auto L = symbol_Ltilde(k, p);
    const auto [lm, lp] = lambda_pm(k, p);
    if (std::abs(lp - lm) < 1e-12 * (1.0 + lp))
        throw Error(ErrorKind::DegenerateEigenvalues, "symbol eigenvalues coincide");
    SymbolDiagonalization out;
    out.lambda_minus = lm;
    out.lambda_plus = lp;
    const double mus[2] = {-lm, -lp};
    for (int col = 0; col < 2; ++col) {
        const double mu = mus[col];
        Eigen::Vector2cd a(L(0, 1), mu - L(0, 0));
        Eigen::Vector2cd b(mu - L(1, 1), L(1, 0));
        Eigen::Vector2cd v = a.norm() >= b.norm() ? a : b;
        v.normalize();
        std::complex<double> phase;
        if (previous != nullptr) {
            phase = previous->col(col).dot(v);
        } else {
            phase = v(1);
        }
        if (std::abs(phase) > 0.0) v *= std::conj(phase) / std::abs(phase);
        out.J.col(col) = v;
    }
    return out;
}

double lambda_minus_factor(double k, const DimerParams& p) {
    const double ch = std::cos(0.5 * k);
    return 4.0 * p.kappa * p.w * ch * ch / lambda_pm(k, p).second;
}

double fp_cancel_symbol(double k, const DimerParams& p, double c) {
    const double half = 0.5 * k;
    const double s = (std::abs(half) < 1e-8) ? 1.0 - half * half / 3.0 : std::pow(std::sin(half) / half, 2);
    const double num = s * lambda_minus_factor(k, p);
    const double den = c * c - num;
    if (std::abs(den) < 1e-8) throw Error(ErrorKind::SymbolSingular, "c^2 - s(k) Lm(k) vanishes; c is not supersonic");
    return num / den;
}

}  // namespace fput
