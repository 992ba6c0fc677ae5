#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fput/chebyshev.hpp"

using namespace fput;

TEST(Chebyshev, FitReproducesSmoothFunction) {
    const auto f = Chebyshev<double>::fit([](double v) { return std::exp(v) * std::cos(2.0 * v); }, 32);
    for (double v = -1.0; v <= 1.0; v += 0.05) EXPECT_NEAR(f(v), std::exp(v) * std::cos(2.0 * v), 1e-14);
    EXPECT_LT(f.tail_norm(), 1e-15);
}

TEST(Chebyshev, DerivativeOfFit) {
    const auto f = Chebyshev<double>::fit([](double v) { return std::sin(3.0 * v); }, 40);
    const auto d = f.derivative();
    for (double v = -1.0; v <= 1.0; v += 0.1) EXPECT_NEAR(d(v), 3.0 * std::cos(3.0 * v), 1e-10);
}

TEST(Chebyshev, MonomialConversionIsExact) {
    const std::vector<double> a{0.5, -1.0, 2.0, 0.25};
    const auto f = Chebyshev<double>::from_monomial(a, 8);
    EXPECT_EQ(f.degree(), 8);
    for (double v = -1.0; v <= 1.0; v += 0.125) {
        const double expected = 0.5 - v + 2.0 * v * v + 0.25 * v * v * v;
        EXPECT_NEAR(f(v), expected, 1e-15);
    }
    // v^3 = (3 T1 + T3) / 4.
    const auto cube = Chebyshev<double>::from_monomial({0.0, 0.0, 0.0, 1.0}, 3);
    EXPECT_DOUBLE_EQ(cube.coeffs()[1], 0.75);
    EXPECT_DOUBLE_EQ(cube.coeffs()[3], 0.25);
}

TEST(Chebyshev, ArithmeticIsLinear) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> a(10), b(6);
    for (auto& x : a) x = n(rng);
    for (auto& x : b) x = n(rng);
    const Chebyshev<double> f(a), g(b);
    const auto h = 2.0 * f - g;
    for (double v = -1.0; v <= 1.0; v += 0.1) EXPECT_NEAR(h(v), 2.0 * f(v) - g(v), 1e-13);
}

TEST(Chebyshev, ComplexRoundTrip) {
    const auto f = Chebyshev<double>::fit([](double v) { return v * v; }, 4);
    const auto g = real_part(complexify(f));
    EXPECT_EQ(g.coeffs(), f.coeffs());
}

TEST(Quadrature, WeightsSumToTwo) {
    for (int n : {2, 8, 64}) {
        const auto r = clenshaw_curtis(n);
        double s = 0.0;
        for (double w : r.weights) s += w;
        EXPECT_NEAR(s, 2.0, 1e-14);
    }
}

TEST(Quadrature, ExactForPolynomials) {
    const auto r = clenshaw_curtis(16);
    for (int k = 0; k <= 16; ++k) {
        const double got = integrate([k](double x) { return std::pow(x, k); }, -1.0, 1.0, r);
        const double expected = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        EXPECT_NEAR(got, expected, 1e-14);
    }
}

TEST(Quadrature, MappedInterval) {
    EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-14);
}

TEST(Quadrature, RejectsOddOrder) { EXPECT_THROW(clenshaw_curtis(7), std::invalid_argument); }
