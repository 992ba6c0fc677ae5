#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fput/diagnostics.hpp"
#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/state_space.hpp"

using namespace fput;

namespace {

const DimerParams kMass = DimerParams::make(1.0, 1.0, 2.0);
const DimerParams kSpring = DimerParams::make(2.0, 1.0, 1.0);

}  // namespace

TEST(StateSpace, RandomStatesAreMembers) {
    std::mt19937_64 rng(kDefaultSeed);
    for (int i = 0; i < 10; ++i) {
        const auto u = random_state(rng);
        EXPECT_LT(u.membership_defect(), 1e-14);
        EXPECT_NO_THROW(require_domain(u));
    }
}

TEST(StateSpace, RoughStateIsRejected) {
    RealState u = RealState::zero(8);
    u.P1.coeffs()[8] = 1.0;
    try {
        require_domain(u);
        FAIL() << "expected NotInDomain";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInDomain);
    }
}

TEST(StateSpace, LaurentConstantsMatchSeries) {
    // z^{-4} and z^{-2} coefficients of 1/det M(z; c_s) from an mpmath Taylor expansion.
    auto lc = laurent_constants(kMass);
    EXPECT_NEAR(lc.a_m4, -1.125, 1e-13);
    EXPECT_NEAR(lc.a_m2, 0.45, 1e-12);
    lc = laurent_constants(kSpring);
    EXPECT_NEAR(lc.a_m4, -1.125, 1e-13);
    EXPECT_NEAR(lc.a_m2, 0.45, 1e-12);
    lc = laurent_constants(DimerParams::make(1.0, 1.0, 5.0));
    EXPECT_NEAR(lc.a_m4, -0.25714285714285714, 1e-14);
    EXPECT_NEAR(lc.a_m2, 0.058775510204081633, 1e-13);
}

TEST(StateSpace, JordanChainAndParity) {
    for (const auto& p : {kMass, DimerParams::make(1.0, 1.0, 5.0), kSpring, DimerParams::make(3.0, 1.0, 1.0)}) {
        const auto s = jordan_summary(p);
        EXPECT_LT(s.chain_residual, 1e-12) << p.describe();
        EXPECT_LT(s.parity_defect, 1e-12) << p.describe();
    }
}

TEST(StateSpace, SymmetryIsAnInvolution) {
    std::mt19937_64 rng(kDefaultSeed);
    for (const auto& p : {kMass, kSpring}) {
        const auto kind = symmetry_for(p);
        const auto u = random_state(rng);
        EXPECT_LT((symmetry_apply(kind, symmetry_apply(kind, u)) - u).sup_norm(), 1e-14);
    }
}

TEST(StateSpace, SymmetryCommutesWithVectorField) {
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (const auto& p : {kMass, kSpring}) {
        const auto kind = symmetry_for(p);
        const double c = 1.1 * sound_speed(p);
        for (int i = 0; i < 5; ++i) {
            const auto u = random_state(rng);
            const auto lhs = tw_vector_field(p, c, symmetry_apply(kind, u));
            const auto rhs = symmetry_apply(kind, tw_vector_field(p, c, u));
            EXPECT_LT((lhs + rhs).sup_norm(), 1e-12);
        }
    }
}

TEST(StateSpace, GeneralDimerHasNoSymmetry) {
    EXPECT_THROW(symmetry_for(DimerParams::make(2.0, 1.0, 3.0)), Error);
}

TEST(StateSpace, ResolventInvertsShiftedOperator) {
    std::mt19937_64 rng(5);
    const double c = sound_speed(kMass);
    const auto u = complexify(random_state(rng));
    for (cdouble z : {cdouble(0.2, 0.1), cdouble(-0.25, 0.05), cdouble(0.0, 0.3)}) {
        const auto r = resolvent(z, kMass, c, u);
        const auto back = z * r - apply_L(kMass, c, r);
        // The resolvent grows like |z|^{-4} near the origin, so the check is relative.
        EXPECT_LT((back - u).sup_norm(), 1e-11 * (1.0 + r.sup_norm()));
    }
}

TEST(StateSpace, ResolventRejectsSpectrum) {
    std::mt19937_64 rng(5);
    const auto u = complexify(random_state(rng));
    try {
        resolvent(cdouble(0.0, 0.0), kMass, sound_speed(kMass), u);
        FAIL() << "expected NearSpectrum";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NearSpectrum);
    }
}

TEST(StateSpace, ProjectionMatchesFunctionalSeries) {
    for (const auto& p : {kMass, kSpring}) {
        const auto s = projection_summary(p, kDefaultSeed, 4);
        EXPECT_LT(s.idempotency_defect, 1e-6);
        EXPECT_LT(s.commutation_defect, 1e-6);
        EXPECT_LT(s.series_defect, 1e-6);
        EXPECT_NEAR(s.ratio_mean, 1.0, 1e-8);
        EXPECT_LT(s.ratio_spread, 1e-6);
    }
}

TEST(StateSpace, FunctionalsAreBiorthogonalToChain) {
    for (const auto& p : {kMass, kSpring, DimerParams::make(1.0, 1.0, 5.0)}) {
        const auto chain = gen_eigvec_chain(p);
        for (int j = 0; j < 4; ++j) {
            const auto chi = functional_chi_all(chain.chi[j], p);
            for (int k = 0; k < 4; ++k) EXPECT_NEAR(chi[k], j == k ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(StateSpace, ClosedFunctionalsAgreeWithExpansion) {
    std::mt19937_64 rng(kDefaultSeed);
    for (const auto& p : {kMass, kSpring}) {
        for (int i = 0; i < 5; ++i) {
            const auto u = random_state(rng);
            for (int k : {2, 3}) EXPECT_NEAR(functional_chi_closed(k, u, p), functional_chi(k, u, p), 1e-10);
        }
    }
}

TEST(StateSpace, EigenvectorSolvesEigenproblem) {
    // Real supersonic eigenvalue and the imaginary critical pair are both roots of det M.
    const double c = 1.3;
    const cdouble roots[] = {supersonic_real_root(kMass, c).location, cdouble(0.0, critical_frequency(kMass, c).location.real())};
    for (cdouble z : roots) {
        const auto e = eigvec_E(z, kMass, c);
        const auto r = apply_L(kMass, c, e) - z * e;
        EXPECT_LT(r.sup_norm(), 1e-9);
    }
}

TEST(StateSpace, DuhamelSolvesLinearOde) {
    const cdouble z(0.4, 0.2);
    const auto P = complexify(Chebyshev<double>::fit([](double v) { return std::cos(v); }));
    const auto I = duhamel_I(z, P);
    // I' = z I - P, I(0) = 0.
    const auto dI = I.derivative();
    for (double v = -1.0; v <= 1.0; v += 0.25) EXPECT_LT(std::abs(dI(v) - (z * I(v) - P(v))), 1e-10);
    EXPECT_LT(std::abs(I(0.0)), 1e-14);
    EXPECT_LT(std::abs(duhamel_I_at(z, P, 0.6) - I(0.6)), 1e-10);
}

TEST(StateSpace, ContourThroughSpectrumIsRejected) {
    std::mt19937_64 rng(1);
    const auto u = complexify(random_state(rng));
    const auto p = kMass;
    const double c = 1.2;
    // The first of four nodes sits at center + r e^{i pi/4}; place it on the eigenvalue i omega_c.
    ContourOptions opt;
    opt.radius = 0.3;
    opt.nodes = 4;
    opt.center = cdouble(0.0, critical_frequency(p, c).location.real()) - opt.radius * std::exp(cdouble(0.0, 0.25 * std::numbers::pi));
    try {
        contour_integral(p, c, u, opt);
        FAIL() << "expected ContourThroughSpectrum";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ContourThroughSpectrum);
    }
}
