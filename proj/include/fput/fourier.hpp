#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "fput/params.hpp"

typedef struct fftw_plan_s* fftw_plan;

namespace fput {

// Real-to-complex transform of length n (n/2 + 1 bins) and its normalized inverse.
class RealFFT {
public:
    explicit RealFFT(int n);
    ~RealFFT();
    RealFFT(const RealFFT&) = delete;
    RealFFT& operator=(const RealFFT&) = delete;

    int size() const { return n_; }
    int bins() const { return n_ / 2 + 1; }

    Eigen::VectorXcd forward(const Eigen::VectorXd& x) const;
    // Inverse including the 1/n factor.
    Eigen::VectorXd inverse(const Eigen::VectorXcd& X) const;
    // Column-wise transforms.
    Eigen::MatrixXcd forward_columns(const Eigen::MatrixXd& x) const;
    Eigen::MatrixXd inverse_columns(const Eigen::MatrixXcd& X) const;

private:
    int n_;
    fftw_plan forward_plan_;
    fftw_plan inverse_plan_;
};

// Fourier symbol of the relative-displacement traveling-wave operator acting on
// (V1'(rho1), V2'(rho2)) linearized at 0:
// [[-(1+w), kappa (w e^{ik} + e^{-ik})], [e^{ik} + w e^{-ik}, -kappa (1+w)]].
Eigen::Matrix2cd symbol_Ltilde(double k, const DimerParams& p);

struct SymbolDiagonalization {
    // Columns are eigenvectors for -lambda_minus and -lambda_plus, unit norm.
    Eigen::Matrix2cd J;
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
};

// Ltilde(k) = -J diag(lambda_minus, lambda_plus) J^{-1}.  The eigenvector phases follow
// `previous` (maximal overlap) when given, otherwise the second entry is made real positive.
SymbolDiagonalization diagonalize_symbol(double k, const DimerParams& p, const Eigen::Matrix2cd* previous = nullptr);

// lambda_minus(k) / (2 (1 - cos k)) = 4 kappa w cos^2(k/2) / lambda_plus(k).
double lambda_minus_factor(double k, const DimerParams& p);

// s(k) Lm(k) / (c^2 - s(k) Lm(k)) with s(k) = 2 (1 - cos k) / k^2.
double fp_cancel_symbol(double k, const DimerParams& p, double c);

}  // namespace fput
