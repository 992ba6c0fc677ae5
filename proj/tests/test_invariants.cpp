#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fput/diagnostics.hpp"
#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/invariants.hpp"

using namespace fput;

TEST(Invariants, LfrakIdentityForMassDimers) {
    for (double w : {2.0, 3.0, 5.0}) {
        const auto p = DimerParams::make(1.0, 1.0, w);
        const double expected = 6.0 * w * (1.0 + w) / (w * w - w + 1.0);
        EXPECT_NEAR(lfrak0(p, Route::Closed), expected, 1e-10 * expected);
        EXPECT_NEAR(lfrak0(p, Route::Oracle), expected, 1e-8 * expected);
    }
}

TEST(Invariants, LfrakPositiveAcrossParameters) {
    for (double k : {1.0, 1.5, 2.0, 3.0})
        for (double w : {1.0, 2.0, 4.0}) {
            if (k == 1.0 && w == 1.0) continue;
            EXPECT_GT(lfrak0(DimerParams::make(k, 1.0, w), Route::Oracle), 0.0);
        }
}

TEST(Invariants, QfrakClosedMatchesOracle) {
    for (const auto& p : {DimerParams::make(1.0, 1.0, 2.0), DimerParams::make(2.0, 1.0, 1.0),
                          DimerParams::make(2.0, -3.0, 1.0), DimerParams::make(3.0, 0.5, 1.0)}) {
        const double closed = qfrak0(p, Route::Closed);
        EXPECT_NEAR(qfrak0(p, Route::Oracle), closed, 1e-8 * std::abs(closed)) << p.describe();
    }
    // 16 w a_{-4} (beta + kappa^3) / (1 + kappa)^2 with a_{-4} = -9/8.
    EXPECT_NEAR(qfrak0(DimerParams::make(1.0, 1.0, 2.0), Route::Closed), -18.0, 1e-12);
}

TEST(Invariants, QfrakChangesSignAtMinusKappaCubed) {
    EXPECT_NEAR(qfrak0_sign_change(2.0, -12.0, -5.0), -8.0, 1e-6);
    EXPECT_NEAR(qfrak0_sign_change(3.0, -40.0, -20.0), -27.0, 1e-6);
}

TEST(Invariants, SecondVariationFormulaMatchesFiniteDifference) {
    std::mt19937_64 rng(kDefaultSeed);
    for (const auto& p : {DimerParams::make(1.0, 1.0, 2.0), DimerParams::make(2.0, 1.0, 1.0)}) {
        const auto r = nondegeneracy_report(p);
        EXPECT_NEAR(r.d2j0_formula, r.d2j0_finite_difference, 1e-6 * std::max(1.0, std::abs(r.d2j0_formula)));
        const auto u = random_state(rng);
        const auto v = random_state(rng);
        const double a4 = laurent_constants(p).a_m4;
        const double formula = p.w * (1.0 + p.kappa) * a4 * d2J_zero(u, v, p);
        EXPECT_NEAR(d2J0_finite_difference(u, v, p), formula, 1e-6 * std::max(1.0, std::abs(formula)));
    }
}

TEST(Invariants, CoreCoefficientsAreReportedSeparately) {
    // The combination -3 Lfrak0 / (2 Qfrak0) is half the sech^2 core amplitude 3w/(1+w) of the
    // long-wave profile; both are reported.
    const auto r = nondegeneracy_report(DimerParams::make(1.0, 1.0, 2.0));
    EXPECT_NEAR(r.core_coefficient_from_constants, 1.0, 1e-8);
    EXPECT_NEAR(r.core_coefficient_theorem, 2.0, 1e-15);
    const auto s = nondegeneracy_report(DimerParams::make(2.0, 1.0, 1.0));
    EXPECT_NEAR(s.core_coefficient_theorem, 4.0 / 3.0, 1e-15);
}

TEST(Invariants, FirstIntegralIsConserved) {
    for (const auto& p : {DimerParams::make(1.0, 1.0, 2.0), DimerParams::make(1.0, 1.0, 5.0),
                          DimerParams::make(2.0, 1.0, 1.0), DimerParams::make(3.0, 1.0, 1.0)}) {
        const double cs = sound_speed(p);
        const auto s = first_integral_summary(p, {cs, 1.1 * cs}, kDefaultSeed, 20);
        EXPECT_LT(s.conservation_defect, 1e-8);
        EXPECT_LT(s.translation_defect, 1e-12);
        EXPECT_LT(s.symmetry_defect, 1e-12);
    }
}

TEST(Invariants, FirstIntegralDerivativeMatchesDifference) {
    std::mt19937_64 rng(9);
    const auto p = DimerParams::make(2.0, 0.7, 1.0);
    const auto u = random_state(rng);
    const auto du = random_state(rng);
    const double c = 1.3;
    const double h = 1e-5;
    const double fd = (first_integral_J(u + h * du, p, c) - first_integral_J(u - h * du, p, c)) / (2.0 * h);
    EXPECT_NEAR(dJ_direction(u, du, p, c), fd, 1e-7 * std::max(1.0, std::abs(fd)));
}

TEST(Invariants, SpeedFromMu) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    EXPECT_NEAR(speed_from_mu(p, 0.0), sound_speed(p), 1e-15);
    EXPECT_GT(speed_from_mu(p, 0.1), sound_speed(p));
    try {
        speed_from_mu(p, -0.1);
        FAIL() << "expected MuOutOfRange";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MuOutOfRange);
    }
}

TEST(Invariants, JstarVanishesOnKernelDirectionsOtherThanXi) {
    const auto p = DimerParams::make(1.0, 1.0, 2.0);
    const auto chain = gen_eigvec_chain(p);
    EXPECT_NEAR(jstar(chain.chi[0], p, 0.0), 0.0, 1e-14);
}
