#pragma once

#include <array>
#include <complex>
#include <random>

#include "fput/chebyshev.hpp"
#include "fput/params.hpp"

namespace fput {

using cdouble = std::complex<double>;

// Element (p1, p2, xi1, xi2, P1, P2) of the first-order state space: four
// scalars and two functions on [-1, 1].
template <class T>
struct StateVector {
    T p1{};
    T p2{};
    T xi1{};
    T xi2{};
    Chebyshev<T> P1;
    Chebyshev<T> P2;

    static StateVector zero(int degree = kDefaultChebDegree) {
        StateVector s;
        s.P1 = Chebyshev<T>::zero(degree);
        s.P2 = Chebyshev<T>::zero(degree);
        return s;
    }

    StateVector& operator+=(const StateVector& o) {
        p1 += o.p1;
        p2 += o.p2;
        xi1 += o.xi1;
        xi2 += o.xi2;
        P1 += o.P1;
        P2 += o.P2;
        return *this;
    }
    StateVector& operator-=(const StateVector& o) {
        p1 -= o.p1;
        p2 -= o.p2;
        xi1 -= o.xi1;
        xi2 -= o.xi2;
        P1 -= o.P1;
        P2 -= o.P2;
        return *this;
    }
    StateVector& operator*=(T s) {
        p1 *= s;
        p2 *= s;
        xi1 *= s;
        xi2 *= s;
        P1 *= s;
        P2 *= s;
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(T s, StateVector a) { return a *= s; }

    // Max over the scalars and over `samples` equispaced values of P1, P2.
    double sup_norm(int samples = 65) const {
        double m = std::max({abs_value(p1), abs_value(p2), abs_value(xi1), abs_value(xi2)});
        for (int i = 0; i < samples; ++i) {
            const double v = -1.0 + 2.0 * i / (samples - 1);
            m = std::max({m, abs_value(P1(v)), abs_value(P2(v))});
        }
        return m;
    }

    // max(|P1(0) - p1|, |P2(0) - p2|); zero for members of X.
    double membership_defect() const { return std::max(abs_value(P1(0.0) - p1), abs_value(P2(0.0) - p2)); }

    // Largest trailing Chebyshev coefficient relative to the function scale.
    double tail_ratio() const {
        double scale = 1.0;
        for (const auto& c : P1.coeffs()) scale = std::max(scale, abs_value(c));
        for (const auto& c : P2.coeffs()) scale = std::max(scale, abs_value(c));
        return std::max(P1.tail_norm(), P2.tail_norm()) / scale;
    }
};

using RealState = StateVector<double>;
using ComplexState = StateVector<cdouble>;

ComplexState complexify(const RealState& u);
RealState real_part(const ComplexState& u);

// Smooth random member of X: P-coefficients decay like 2^{-k}, p_i = P_i(0).
RealState random_state(std::mt19937_64& rng, int degree = kDefaultChebDegree);

// Throws NotInDomain unless the Chebyshev tails indicate a C^1 function.
template <class T>
void require_domain(const StateVector<T>& u);

template <class T>
StateVector<T> apply_L(const DimerParams& p, double c, const StateVector<T>& u);

// Near-sonic correction: L(c_mu) = L(c_s) + mu L1 with c_mu^{-2} = c_s^{-2} - mu.
template <class T>
StateVector<T> apply_L1(const DimerParams& p, const StateVector<T>& u);

// Quadratic spring terms without the c^{-2} prefactor.
RealState nl0_raw(const DimerParams& p, const RealState& u, const RealState& v);
// nl0(U, V) = c_s^{-2} nl0_raw(U, V).
RealState nl0(const DimerParams& p, const RealState& u, const RealState& v);
// Superquadratic spring remainders (components 3 and 4 only).
RealState nl1(const DimerParams& p, const RealState& u);
// nl(U, mu) = -mu nl0_raw(U, U) + (c_s^{-2} - mu) nl1(U).
RealState apply_nl(const DimerParams& p, double mu, const RealState& u);

// Traveling-wave vector field F(U, c) = L(c) U + c^{-2} (nl0_raw(U, U) + nl1(U)).
RealState tw_vector_field(const DimerParams& p, double c, const RealState& u);

enum class SymmetryKind { MassDimer, SpringDimer };

// MassDimer for kappa = 1, SpringDimer for w = 1; ConfigInvalid otherwise.
SymmetryKind symmetry_for(const DimerParams& p);

template <class T>
StateVector<T> symmetry_apply(SymmetryKind kind, const StateVector<T>& u);

struct EigvecChain {
    std::array<RealState, 4> chi;
};

// Explicit Jordan chain of L(c_s) at 0 with cubic P-components.
EigvecChain gen_eigvec_chain(const DimerParams& p, int degree = kDefaultChebDegree);

// E(z) = (E, 1, zE, z, E e^{zv}, e^{zv}) with E = (e^z + kappa e^{-z}) / (c^2 z^2 + 1 + kappa).
ComplexState eigvec_E(cdouble z, const DimerParams& p, double c, int degree = kDefaultChebDegree);

struct LaurentConstants {
    double a_m4 = 0.0;
    double a_m2 = 0.0;
};

// Coefficients of z^{-4} and z^{-2} in 1/det M(z; c_s).
LaurentConstants laurent_constants(const DimerParams& p);
// The alternative closed forms, kept for reporting.
LaurentConstants alternative_laurent_constants(const DimerParams& p);

// Coefficient functionals chi*_k[U], k = 0..3, of the projection onto the
// generalized kernel: Pi_0 U = sum_k chi*_k[U] chi_k.
std::array<double, 4> functional_chi_all(const RealState& u, const DimerParams& p);
double functional_chi(int k, const RealState& u, const DimerParams& p);
// Closed forms of chi*_2 and chi*_3 (k = 2, 3 only).
double functional_chi_closed(int k, const RealState& u, const DimerParams& p);

// v -> -int_0^v e^{z(v-s)} P(s) ds.
Chebyshev<cdouble> duhamel_I(cdouble z, const Chebyshev<cdouble>& P);
cdouble duhamel_I_at(cdouble z, const Chebyshev<cdouble>& P, double v);

// R(z) U = (z - L(c))^{-1} U.
ComplexState resolvent(cdouble z, const DimerParams& p, double c, const ComplexState& u);

struct ContourOptions {
    cdouble center{0.0, 0.0};
    double radius = 0.3;
    int nodes = 256;
    // Weight (z - center)^power in the integrand.
    int power = 0;
};

// (1/(2 pi i)) \oint (z - center)^power R(z) U dz by the trapezoid rule.
ComplexState contour_integral(const DimerParams& p, double c, const ComplexState& u, const ContourOptions& opt = {});

// Spectral projection onto the generalized kernel of L(c_s) (real part of the contour integral).
RealState contour_projection(const DimerParams& p, double c, const RealState& u, const ContourOptions& opt = {});

}  // namespace fput
