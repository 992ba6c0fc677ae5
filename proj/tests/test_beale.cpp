#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fput/beale.hpp"
#include "fput/dispersion.hpp"
#include "fput/error.hpp"

using namespace fput;

namespace {

const DimerParams kMass = DimerParams::make(1.0, 1.0, 2.0);
const DimerParams kSpring = DimerParams::make(2.0, 1.0, 1.0);

const FourierProfile& mass_nanopteron_04() {
    static const FourierProfile prof = nanopteron_solve(0.4, kMass);
    return prof;
}

}  // namespace

TEST(Beale, CriticalRippleFrequencyMatchesReference) {
    // Positive root of Lambda(k; sqrt(c_s^2 + nu^2)) from mpmath, divided by nu.
    EXPECT_NEAR(critical_ripple_frequency(0.2, kMass), 8.6301930444915906, 1e-10);
    EXPECT_NEAR(critical_ripple_frequency(0.4, kMass), 1.6405687874632404 / 0.4, 1e-10);
}

TEST(Beale, AlignedHalfLengthPutsRippleBetweenModes) {
    for (double om : {1.64, 1.73, 2.1})
        for (double L0 : {50.0, 75.0, 120.0}) {
            const double L = aligned_half_length(om, L0);
            EXPECT_GE(L, L0);
            const double m = om * L / std::numbers::pi - 0.5;
            EXPECT_NEAR(m, std::round(m), 1e-9);
        }
}

TEST(Beale, NanopteronConvergesAtNu04) {
    const auto& prof = mass_nanopteron_04();
    EXPECT_LT(prof.residual, 1e-10);
    EXPECT_LT(refined_residual(prof), 1e-10);
    EXPECT_NEAR(prof.omega_c, 1.6405687874632404, 1e-10);
}

TEST(Beale, RippleAmplitudeMatchesIndependentSolver) {
    // Far-field amplitude from an independent numpy implementation of the same discretization.
    EXPECT_NEAR(far_field_ripple_amplitude(mass_nanopteron_04()), 5.8744e-3, 2e-6);
}

TEST(Beale, MassDimerProfileHasReflectionSymmetry) {
    const auto& prof = mass_nanopteron_04();
    for (double x : {0.3, 1.7, 12.5, 40.0}) EXPECT_NEAR(prof.eval(2, x), prof.eval(1, -x), 1e-13);
    EXPECT_NEAR(peak_ratio(prof), 1.0, 1e-12);
}

TEST(Beale, InterpolantReproducesGridValues) {
    const auto& prof = mass_nanopteron_04();
    for (int i = 0; i < prof.grid_size(); i += 37) {
        EXPECT_NEAR(prof.eval(1, prof.x[i]), prof.rho1[i], 1e-14);
        EXPECT_NEAR(prof.eval(2, prof.x[i]), prof.rho2[i], 1e-14);
    }
}

TEST(Beale, RippleWavenumberIsCritical) {
    const auto& prof = mass_nanopteron_04();
    EXPECT_NEAR(dominant_ripple_wavenumber(prof), prof.omega_c, std::numbers::pi / prof.L);
}

TEST(Beale, CoreApproachesLongWaveAmplitude) {
    // The fitted core amplitude / eps^2 tends to 3w/(1+w) = 2 with an O(eps^2) correction.
    auto defect = [](const FourierProfile& prof) {
        const double eps2 = 0.75 - 1.0 / (prof.c * prof.c);
        const double q = std::sqrt(12.0 * eps2);
        return std::abs(fit_core_amplitude(prof, q, 3.0 / std::sqrt(eps2)) / eps2 - 2.0);
    };
    const double coarse = defect(mass_nanopteron_04());
    const double fine = defect(nanopteron_solve(0.25, kMass));
    EXPECT_LT(coarse, 0.4);
    EXPECT_LT(fine, 0.6 * coarse);
}

TEST(Beale, RippleWindowMustBeFarField) {
    const auto& prof = mass_nanopteron_04();
    try {
        ripple_amplitude(prof, -5.0, 5.0);
        FAIL() << "expected WindowInsideCore";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WindowInsideCore);
    }
    EXPECT_GT(ripple_amplitude(prof, 0.5 * prof.L, 0.8 * prof.L), 0.0);
}

TEST(Beale, PeriodicBranchFrequencyShiftIsQuadratic) {
    const double nu = 0.4;
    const double base = critical_ripple_frequency(nu, kMass);
    const auto a = periodic_branch(nu, 1e-3, kMass);
    const auto b = periodic_branch(nu, 2e-3, kMass);
    EXPECT_LT(a.residual, 1e-12);
    const double exponent = std::log((b.Omega - base) / (a.Omega - base)) / std::log(2.0);
    EXPECT_NEAR(exponent, 2.0, 0.05);
}

TEST(Beale, SpringDimerStegotonPeakRatio) {
    const auto prof = nanopteron_solve(0.4, kSpring);
    EXPECT_LT(prof.residual, 1e-10);
    EXPECT_NEAR(peak_ratio(prof) / 2.0, 1.0, 0.1);
    for (double x : {0.7, 5.0}) EXPECT_NEAR(prof.eval(1, x), prof.eval(1, -x), 1e-13);
}

TEST(Beale, CoarseGridIsUnderResolved) {
    NanopteronOptions opt;
    opt.modes = 40;
    try {
        nanopteron_solve(0.4, kMass, opt);
        FAIL() << "expected UnderResolved";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnderResolved);
    }
}

TEST(Beale, GeneralDimerRejected) {
    EXPECT_THROW(nanopteron_solve(0.4, DimerParams::make(2.0, 1.0, 3.0)), Error);
}

TEST(Beale, SingleRowScanHasNoFits) {
    const auto scan = amplitude_scan({0.4}, kMass);
    ASSERT_EQ(scan.rows.size(), 1u);
    EXPECT_FALSE(scan.has_fits);
    EXPECT_NEAR(scan.rows[0].amplitude, 5.8744e-3, 2e-6);
}

TEST(Beale, ScanRejectsUnsortedList) { EXPECT_THROW(amplitude_scan({0.3, 0.4}, kMass), Error); }
