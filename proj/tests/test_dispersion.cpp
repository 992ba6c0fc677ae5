#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/fourier.hpp"

using namespace fput;

namespace {

struct Case {
    double kappa;
    double w;
    double c_s;
    double omega_star;
};

// Reference values from 30-digit mpmath root finding on Lambda(k; c_s).
const Case kCases[] = {
    {1.0, 2.0, 1.1547005383792515, 1.7607542224019326},
    {1.0, 5.0, 1.2909944487358057, 2.6380032448850862},
    {3.0, 1.0, 1.224744871391589, 2.1096190420918416},
    {2.0, 1.0, 1.1547005383792515, 1.7607542224019326},
};

}  // namespace

TEST(Dispersion, SoundSpeedMatchesReference) {
    for (const auto& c : kCases) EXPECT_NEAR(sound_speed(DimerParams::make(c.kappa, 1.0, c.w)), c.c_s, 1e-15);
}

TEST(Dispersion, CriticalFrequencyMatchesReference) {
    for (const auto& c : kCases) {
        const auto p = DimerParams::make(c.kappa, 1.0, c.w);
        const auto r = critical_frequency(p, sound_speed(p));
        EXPECT_NEAR(r.location.real(), c.omega_star, 1e-11);
        EXPECT_EQ(r.multiplicity, 1);
        EXPECT_LT(r.residual, 1e-10);
    }
}

TEST(Dispersion, QuadrupleZeroAtSoundSpeed) {
    for (const auto& c : kCases) {
        const auto p = DimerParams::make(c.kappa, 1.0, c.w);
        const auto d = taylor_lambda_at_zero(p, sound_speed(p), 6);
        EXPECT_NEAR(d[2], 0.0, 1e-12);
        EXPECT_LT(d[4], 0.0);
        EXPECT_EQ(zero_root_multiplicity(p, sound_speed(p)), 4);
        EXPECT_EQ(zero_root_multiplicity(p, 1.1 * sound_speed(p)), 2);
    }
}

TEST(Dispersion, SupersonicRootMatchesReference) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    const double cs = sound_speed(p);
    const double deltas[] = {0.0025, 0.01, 0.04};
    const double expected[] = {0.12995215215058268, 0.26018549886697236, 0.52236505061722763};
    for (int i = 0; i < 3; ++i) {
        const auto r = supersonic_real_root(p, std::sqrt(cs * cs + deltas[i]));
        EXPECT_NEAR(r.location.real(), expected[i], 1e-10);
    }
}

TEST(Dispersion, SubsonicSpeedHasNoRealRoot) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    try {
        supersonic_real_root(p, 0.9 * sound_speed(p));
        FAIL() << "expected NoRoot";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoRoot);
    }
}

TEST(Dispersion, DetMOnImaginaryAxisIsLambda) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uk(-6.0, 6.0), uc(0.8, 2.0);
    const auto p = DimerParams::make(2.0, 0.5, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double k = uk(rng);
        const double c = uc(rng);
        const auto d = det_M({0.0, k}, p, c);
        EXPECT_NEAR(d.real(), lambda_dispersion(k, p, c), 1e-9 * (1.0 + std::abs(d.real())));
        EXPECT_NEAR(d.imag(), 0.0, 1e-9);
    }
}

TEST(Dispersion, LambdaDerivativesMatchFiniteDifferences) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    const double c = 1.3;
    const double h = 1e-4;
    for (double k : {0.3, 1.1, 2.7}) {
        const auto d = lambda_derivatives(k, p, c);
        const double fd = (lambda_dispersion(k + h, p, c) - lambda_dispersion(k - h, p, c)) / (2.0 * h);
        EXPECT_NEAR(d[0], fd, 1e-6);
        const double fd2 = (lambda_derivatives(k + h, p, c)[0] - lambda_derivatives(k - h, p, c)[0]) / (2.0 * h);
        EXPECT_NEAR(d[1], fd2, 1e-5);
    }
}

TEST(Dispersion, BranchValuesMatchMatrixEigenvalues) {
    // Eigenvalues of -Ltilde(0.7) for kappa = 2, w = 3 (mpmath).
    const auto p = DimerParams::make(2.0, 1.0, 3.0);
    const auto [lm, lp] = lambda_pm(0.7, p);
    EXPECT_NEAR(lm, 0.8970983044151349, 1e-13);
    EXPECT_NEAR(lp, 11.102901695584865, 1e-12);
}

TEST(Dispersion, BranchProductAndSumIdentities) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uk(-4.0, 4.0), up(0.5, 4.0);
    for (int i = 0; i < 100; ++i) {
        const auto p = DimerParams::make(up(rng), 1.0, up(rng));
        const double k = uk(rng);
        const auto [lm, lp] = lambda_pm(k, p);
        EXPECT_NEAR(lm * lp, 4.0 * p.kappa * p.w * std::sin(k) * std::sin(k), 1e-11 * (1.0 + lm * lp));
        EXPECT_NEAR(lm + lp, (1.0 + p.kappa) * (1.0 + p.w), 1e-11 * (1.0 + lp));
        EXPECT_GE(lm, 0.0);
    }
}

TEST(Dispersion, FrontDecayRateNeedsSymmetricDimer) {
    EXPECT_NEAR(front_decay_rate(DimerParams::make(1.0, 1.0, 2.0)), std::sqrt(12.0), 1e-14);
    EXPECT_NEAR(front_decay_rate(DimerParams::make(2.0, 1.0, 1.0)), std::sqrt(12.0), 1e-14);
    try {
        front_decay_rate(DimerParams::make(2.0, 1.0, 3.0));
        FAIL() << "expected Unsupported";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
}

TEST(Symbol, DiagonalizationReconstructsSymbol) {
    const auto p = DimerParams::make(2.0, 1.0, 3.0);
    Eigen::Matrix2cd prev;
    bool have = false;
    for (int i = 1; i <= 40; ++i) {
        const double k = 0.1 * i;
        const auto d = diagonalize_symbol(k, p, have ? &prev : nullptr);
        Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
        D(0, 0) = -d.lambda_minus;
        D(1, 1) = -d.lambda_plus;
        const Eigen::Matrix2cd rec = d.J * D * d.J.inverse();
        EXPECT_LT((rec - symbol_Ltilde(k, p)).norm(), 1e-12);
        const auto [lm, lp] = lambda_pm(k, p);
        EXPECT_NEAR(d.lambda_minus, lm, 1e-12);
        EXPECT_NEAR(d.lambda_plus, lp, 1e-12);
        if (have) EXPECT_GT(std::abs(prev.col(0).dot(d.J.col(0))), 0.9);
        prev = d.J;
        have = true;
    }
}

TEST(Symbol, LinearizationDeterminantIsLambda) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    const double c = 1.25;
    for (double k : {0.2, 0.9, 1.7, 2.5}) {
        const Eigen::Matrix2cd M = -c * c * k * k * Eigen::Matrix2cd::Identity() - symbol_Ltilde(k, p);
        EXPECT_NEAR(M.determinant().real(), lambda_dispersion(k, p, c), 1e-10);
    }
}

TEST(Symbol, LambdaMinusFactor) {
    const auto p = DimerParams::make(2.0, 1.0, 3.0);
    for (double k : {0.3, 1.0, 2.0}) {
        const auto [lm, lp] = lambda_pm(k, p);
        EXPECT_NEAR(lambda_minus_factor(k, p), lm / (2.0 * (1.0 - std::cos(k))), 1e-12);
    }
}

TEST(Symbol, FpCancelSymbolSingularAtResonance) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    EXPECT_TRUE(std::isfinite(fp_cancel_symbol(1.0, p, 1.3)));
    try {
        fp_cancel_symbol(1e-9, p, sound_speed(p));
        FAIL() << "expected SymbolSingular";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SymbolSingular);
    }
}

TEST(RealFFTTest, RoundTrip) {
    RealFFT fft(64);
    Eigen::VectorXd x(64);
    for (int i = 0; i < 64; ++i) x(i) = std::sin(0.3 * i) + 0.1 * i;
    EXPECT_LT((fft.inverse(fft.forward(x)) - x).cwiseAbs().maxCoeff(), 1e-13);
}
