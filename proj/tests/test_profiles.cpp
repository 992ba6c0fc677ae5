#include <gtest/gtest.h>

#include <cmath>

#include "fput/error.hpp"
#include "fput/profiles.hpp"

using namespace fput;

namespace {

ProfileSpec mass_spec(double eps, double w = 2.0) {
    ProfileSpec s;
    s.params = DimerParams::make(1.0, 1.0, w);
    s.dimer_kind = DimerKind::Mass;
    s.epsilon = eps;
    return s;
}

ProfileSpec spring_spec(double eps, double kappa = 2.0, double beta = 1.0) {
    ProfileSpec s;
    s.params = DimerParams::make(kappa, beta, 1.0);
    s.dimer_kind = DimerKind::Spring;
    s.epsilon = eps;
    return s;
}

}  // namespace

TEST(Profiles, SpeedRoundTrip) {
    for (const auto& s : {mass_spec(0.2), spring_spec(0.3)}) {
        const double c = wave_speed(s);
        EXPECT_NEAR(epsilon_from_speed(s.dimer_kind, s.params, c), s.epsilon, 1e-14);
    }
    // c_eps^{-2} = (1+w)/(2w) - eps^2 with w = 2, eps = 0.2.
    EXPECT_NEAR(wave_speed(mass_spec(0.2)), 1.0 / std::sqrt(0.75 - 0.04), 1e-15);
}

TEST(Profiles, SubsonicSpeedRejected) {
    EXPECT_THROW(epsilon_from_speed(DimerKind::Mass, DimerParams::make(1.0, 1.0, 2.0), 1.0), Error);
}

TEST(Profiles, DecayRatesAndCoreAmplitudes) {
    EXPECT_NEAR(decay_rate(mass_spec(0.1)), std::sqrt(12.0), 1e-14);
    EXPECT_NEAR(core_amplitude(mass_spec(0.1), Parity::Odd), 2.0, 1e-15);
    EXPECT_NEAR(core_amplitude(mass_spec(0.1), Parity::Even), 2.0, 1e-15);
    const auto s = spring_spec(0.1);
    EXPECT_NEAR(core_amplitude(s, Parity::Even), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(core_amplitude(s, Parity::Odd), 8.0 / 3.0, 1e-15);
}

TEST(Profiles, LeadingStegotonFactorIsKappa) {
    const auto s = spring_spec(0.2);
    std::vector<double> grid{-1.0, 0.0, 1.0};
    const auto lp = assemble_nanopteron(s, {}, grid);
    EXPECT_DOUBLE_EQ(lp.stegoton_factor, 2.0);
    EXPECT_NEAR(lp.values_odd[1] / lp.values_even[1], 2.0, 1e-15);
}

TEST(Profiles, FrontDerivativeIsSublatticeAverageOfCore) {
    for (const auto& s : {mass_spec(0.2), mass_spec(0.2, 5.0), spring_spec(0.2), spring_spec(0.2, 3.0, 0.5)}) {
        const double h = 1e-5;
        for (double X : {-1.3, 0.0, 0.4, 2.2}) {
            const double d = (front_profile(s, X + h) - front_profile(s, X - h)) / (2.0 * h);
            const double avg = 0.5 * (sech2_core(s, X, Parity::Odd) + sech2_core(s, X, Parity::Even));
            EXPECT_NEAR(d, avg, 1e-8);
        }
    }
}

TEST(Profiles, AlphaZeroGivesPureCore) {
    const auto s = mass_spec(0.25);
    std::vector<double> grid;
    for (int i = -20; i <= 20; ++i) grid.push_back(0.25 * i);
    const auto lp = assemble_nanopteron(s, {0.0, 0.7}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        EXPECT_NEAR(lp.values_even[i], 0.0625 * sech2_core(s, grid[i], Parity::Even), 1e-16);
    EXPECT_THROW(assemble_nanopteron(s, {-1.0, 0.0}, grid), Error);
}

TEST(Profiles, PhaseMapFixesOrigin) {
    const auto s = mass_spec(0.3);
    EXPECT_DOUBLE_EQ(phase_map(s, 1.7, 0.0), 0.0);
    EXPECT_NEAR(phase_map(s, 1.0, 50.0), 50.0 + 0.09, 1e-12);
}

TEST(Profiles, PeriodicLeadingEvenComponentIsCosine) {
    auto s = mass_spec(0.2);
    s.coordinate = Coordinate::Position;
    std::vector<double> grid{0.0};
    const double Omega = assemble_nanopteron(s, {}, grid).frequency;
    for (double X : {0.0, 0.3, 1.1}) EXPECT_NEAR(periodic_leading(s, X, Parity::Even), std::cos(Omega * X), 1e-14);
}

TEST(Profiles, NormalFormSigmaIsExactSolution) {
    std::vector<double> t;
    for (int i = 0; i <= 800; ++i) t.push_back(-20.0 + 0.05 * i);
    for (double nu : {0.1, 0.5}) EXPECT_LT(truncated_normalform_check(nu, t).max_residual, 1e-10);
}

TEST(Profiles, NormalFormSigmaDerivative) {
    const double h = 1e-5;
    for (double t : {-3.0, -0.5, 0.2, 4.0}) {
        const auto a = normal_form_sigma(t + h);
        const auto b = normal_form_sigma(t - h);
        const auto d = normal_form_sigma_derivative(t);
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(d[k], (a[k] - b[k]) / (2.0 * h), 1e-9);
    }
}

TEST(Profiles, TanhDecompositionRecoversLimits) {
    std::vector<double> X, f;
    const double q = 1.5;
    for (int i = -400; i <= 400; ++i) {
        const double x = 0.05 * i;
        X.push_back(x);
        f.push_back(0.5 + 2.0 * std::tanh(q * x) + std::exp(-x * x));
    }
    const auto d = tanh_decompose(X, f, q, 10.0, 1.0);
    EXPECT_NEAR(d.L_plus, 2.5, 1e-6);
    EXPECT_NEAR(d.L_minus, -1.5, 1e-6);
    // sup e^{|X|} e^{-X^2} is attained at |X| = 1/2.
    EXPECT_NEAR(d.weighted_sup, std::exp(0.25), 1e-3);
}

TEST(Profiles, TanhDecompositionDetectsOscillatingTails) {
    std::vector<double> X, f;
    for (int i = -400; i <= 400; ++i) {
        X.push_back(0.05 * i);
        f.push_back(std::sin(3.0 * X.back()));
    }
    try {
        tanh_decompose(X, f, 1.0, 10.0, 1.0);
        FAIL() << "expected NonConvergentTails";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonConvergentTails);
    }
}

TEST(Profiles, BealeVarsigmaPeak) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    const double peak = beale_varsigma(DimerKind::Mass, p, 0.0);
    EXPECT_GT(peak, 0.0);
    EXPECT_LT(beale_varsigma(DimerKind::Mass, p, 3.0), peak);
    EXPECT_NEAR(beale_speed(DimerKind::Mass, p, 0.0), std::sqrt(4.0 / 3.0), 1e-15);
    EXPECT_NEAR(beale_speed(DimerKind::Mass, p, 0.1), std::sqrt(4.0 / 3.0 + 0.01), 1e-15);
}
