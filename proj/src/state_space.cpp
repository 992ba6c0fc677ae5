#include "fput/state_space.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"

namespace fput {

namespace {

template <class T>
Chebyshev<T> reflect(const Chebyshev<T>& f) {
    auto out = f;
    auto& c = out.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return out;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

using Poly4 = std::array<double, 4>;

Poly4 truncated_product(const Poly4& a, const Poly4& b) {
    Poly4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Taylor coefficients of I_z[P](1) = -sum z^n/n! int_0^1 (1-s)^n P(s) ds.
Poly4 duhamel_right_series(const Chebyshev<double>& P) {
    Poly4 out{};
    for (int n = 0; n < 4; ++n)
        out[n] = -integrate([&](double s) { return std::pow(1.0 - s, n) * P(s); }, 0.0, 1.0) / factorial(n);
    return out;
}

// Taylor coefficients of I_z[P](-1) = sum (-z)^n/n! int_{-1}^0 (1+s)^n P(s) ds.
Poly4 duhamel_left_series(const Chebyshev<double>& P) {
    Poly4 out{};
    for (int n = 0; n < 4; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out[n] = sign * integrate([&](double s) { return std::pow(1.0 + s, n) * P(s); }, -1.0, 0.0) / factorial(n);
    }
    return out;
}

double det_scale(cdouble z, const DimerParams& p, double c) {
    const double c2 = c * c;
    const cdouble s = std::sinh(z);
    return 1.0 + c2 * c2 * std::norm(z * z) + c2 * (1.0 + p.kappa) * (1.0 + p.w) * std::norm(z) +
           4.0 * p.kappa * p.w * std::norm(s);
}

}  // namespace

ComplexState complexify(const RealState& u) {
    ComplexState out;
    out.p1 = u.p1;
    out.p2 = u.p2;
    out.xi1 = u.xi1;
    out.xi2 = u.xi2;
    out.P1 = complexify(u.P1);
    out.P2 = complexify(u.P2);
    return out;
}

RealState real_part(const ComplexState& u) {
    RealState out;
    out.p1 = u.p1.real();
    out.p2 = u.p2.real();
    out.xi1 = u.xi1.real();
    out.xi2 = u.xi2.real();
    out.P1 = real_part(u.P1);
    out.P2 = real_part(u.P2);
    return out;
}

RealState random_state(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RealState u = RealState::zero(degree);
    double scale = 1.0;
    for (int k = 0; k <= degree; ++k) {
        u.P1.coeffs()[k] = scale * normal(rng);
        u.P2.coeffs()[k] = scale * normal(rng);
        scale *= 0.5;
    }
    u.xi1 = normal(rng);
    u.xi2 = normal(rng);
    u.p1 = u.P1(0.0);
    u.p2 = u.P2(0.0);
    return u;
}

template <class T>
void require_domain(const StateVector<T>& u) {
    const double r = u.tail_ratio();
    if (r > 1e-8)
        throw Error(ErrorKind::NotInDomain,
                    "Chebyshev tail ratio " + std::to_string(r) + " exceeds 1e-8; P components are not resolved as C^1");
}

template <class T>
StateVector<T> apply_L(const DimerParams& p, double c, const StateVector<T>& u) {
    require_domain(u);
    const double ic2 = 1.0 / (c * c);
    StateVector<T> out;
    out.p1 = u.xi1;
    out.p2 = u.xi2;
    out.xi1 = ic2 * (-(1.0 + p.kappa) * u.p1 + u.P2(1.0) + p.kappa * u.P2(-1.0));
    out.xi2 = ic2 * p.w * (-(1.0 + p.kappa) * u.p2 + p.kappa * u.P1(1.0) + u.P1(-1.0));
    out.P1 = u.P1.derivative();
    out.P2 = u.P2.derivative();
    return out;
}

template <class T>
StateVector<T> apply_L1(const DimerParams& p, const StateVector<T>& u) {
    require_domain(u);
    auto out = StateVector<T>::zero(u.P1.degree());
    out.xi1 = (1.0 + p.kappa) * u.p1 - u.P2(1.0) - p.kappa * u.P2(-1.0);
    out.xi2 = p.w * ((1.0 + p.kappa) * u.p2 - p.kappa * u.P1(1.0) - u.P1(-1.0));
    return out;
}

RealState nl0_raw(const DimerParams& p, const RealState& u, const RealState& v) {
    const double q1 = p.force1.size() > 1 ? p.force1[1] : 0.0;
    const double q2 = p.force2.size() > 1 ? p.force2[1] : 0.0;
    auto out = RealState::zero(u.P1.degree());
    out.xi1 = q1 * (u.P2(1.0) - u.p1) * (v.P2(1.0) - v.p1) - q2 * (u.p1 - u.P2(-1.0)) * (v.p1 - v.P2(-1.0));
    out.xi2 = p.w * (q2 * (u.P1(1.0) - u.p2) * (v.P1(1.0) - v.p2) - q1 * (u.p2 - u.P1(-1.0)) * (v.p2 - v.P1(-1.0)));
    return out;
}

RealState nl0(const DimerParams& p, const RealState& u, const RealState& v) {
    const double cs = sound_speed(p);
    auto out = nl0_raw(p, u, v);
    out *= 1.0 / (cs * cs);
    return out;
}

RealState nl1(const DimerParams& p, const RealState& u) {
    auto out = RealState::zero(u.P1.degree());
    out.xi1 = p.force_remainder(Parity::Odd, u.P2(1.0) - u.p1) - p.force_remainder(Parity::Even, u.p1 - u.P2(-1.0));
    out.xi2 = p.w * (p.force_remainder(Parity::Even, u.P1(1.0) - u.p2) -
                     p.force_remainder(Parity::Odd, u.p2 - u.P1(-1.0)));
    return out;
}

RealState apply_nl(const DimerParams& p, double mu, const RealState& u) {
    const double cs = sound_speed(p);
    auto out = nl0_raw(p, u, u);
    out *= -mu;
    auto rem = nl1(p, u);
    rem *= 1.0 / (cs * cs) - mu;
    return out + rem;
}

RealState tw_vector_field(const DimerParams& p, double c, const RealState& u) {
    auto nl = nl0_raw(p, u, u) + nl1(p, u);
    nl *= 1.0 / (c * c);
    return apply_L(p, c, u) + nl;
}

SymmetryKind symmetry_for(const DimerParams& p) {
    if (p.kappa == 1.0) return SymmetryKind::MassDimer;
    if (p.w == 1.0) return SymmetryKind::SpringDimer;
    throw Error(ErrorKind::ConfigInvalid,
                "reversibility symmetries exist only for mass (kappa=1) or spring (w=1) dimers; got " + p.describe());
}

template <class T>
StateVector<T> symmetry_apply(SymmetryKind kind, const StateVector<T>& u) {
    StateVector<T> out;
    if (kind == SymmetryKind::MassDimer) {
        out.p1 = -u.p1;
        out.p2 = -u.p2;
        out.xi1 = u.xi1;
        out.xi2 = u.xi2;
        out.P1 = -reflect(u.P1);
        out.P2 = -reflect(u.P2);
    } else {
        out.p1 = -u.p2;
        out.p2 = -u.p1;
        out.xi1 = u.xi2;
        out.xi2 = u.xi1;
        out.P1 = -reflect(u.P2);
        out.P2 = -reflect(u.P1);
    }
    return out;
}

EigvecChain gen_eigvec_chain(const DimerParams& p, int degree) {
    const double k = p.kappa;
    const double w = p.w;
    const double a = (1.0 - k) / (1.0 + k);
    const double b = k * (1.0 - w) / ((1.0 + k) * (1.0 + k) * (1.0 + w));
    const double g = (k - 1.0) * (k * k + 14.0 * k + 1.0) / (24.0 * std::pow(1.0 + k, 3));
    // Monomial coefficients of the P-components chi_{k5}, chi_{k6}.
    const std::array<std::vector<double>, 4> odd{std::vector<double>{1.0}, {0.5 * a, 1.0}, {b, 0.5 * a, 0.5},
                                                 {g, b, 0.25 * a, 1.0 / 6.0}};
    const std::array<std::vector<double>, 4> even{std::vector<double>{1.0}, {-0.5 * a, 1.0}, {-b, -0.5 * a, 0.5},
                                                  {-g, -b, -0.25 * a, 1.0 / 6.0}};
    EigvecChain out;
    for (int n = 0; n < 4; ++n) {
        RealState s;
        s.P1 = Chebyshev<double>::from_monomial(odd[n], degree);
        s.P2 = Chebyshev<double>::from_monomial(even[n], degree);
        s.p1 = odd[n][0];
        s.p2 = even[n][0];
        s.xi1 = n > 0 ? odd[n - 1][0] : 0.0;
        s.xi2 = n > 0 ? even[n - 1][0] : 0.0;
        out.chi[n] = std::move(s);
    }
    return out;
}

ComplexState eigvec_E(cdouble z, const DimerParams& p, double c, int degree) {
    const cdouble den = c * c * z * z + 1.0 + p.kappa;
    if (std::abs(den) < 1e-12)
        throw Error(ErrorKind::SingularDenominator, "c^2 z^2 + 1 + kappa vanishes at the requested z");
    const cdouble E = (std::exp(z) + p.kappa * std::exp(-z)) / den;
    ComplexState out;
    out.p1 = E;
    out.p2 = 1.0;
    out.xi1 = z * E;
    out.xi2 = z;
    const auto ez = Chebyshev<cdouble>::fit([z](double v) { return std::exp(z * v); }, degree);
    out.P1 = E * ez;
    out.P2 = ez;
    return out;
}

LaurentConstants laurent_constants(const DimerParams& p) {
    const double cs = sound_speed(p);
    const auto d = taylor_lambda_at_zero(p, cs, 6);
    return {24.0 / d[4], 0.8 * d[6] / (d[4] * d[4])};
}

LaurentConstants alternative_laurent_constants(const DimerParams& p) {
    const double k = p.kappa;
    const double w = p.w;
    const double q = (1 + k) * (1 + k) * w * w + 2.0 * (k * k - 4.0 * k + 1.0) * w + (1 + k) * (1 + k);
    return {-3.0 * std::pow((1 + k) * (1 + w), 2) / (k * w * q), -std::pow((1 + k) * (1 + w), 4) / (10.0 * k * w * q)};
}

std::array<double, 4> functional_chi_all(const RealState& u, const DimerParams& p) {
    const double k = p.kappa;
    const double w = p.w;
    const double cs = sound_speed(p);
    const double c2 = cs * cs;
    const auto lc = laurent_constants(p);

    // Numerators of (R(z)U)_1 + (R(z)U)_2 expanded at z = 0 to third order.
    Poly4 B1 = duhamel_right_series(u.P2);
    const Poly4 left2 = duhamel_left_series(u.P2);
    Poly4 B2 = duhamel_right_series(u.P1);
    const Poly4 left1 = duhamel_left_series(u.P1);
    for (int n = 0; n < 4; ++n) {
        B1[n] += k * left2[n];
        B2[n] = k * w * B2[n] + w * left1[n];
    }
    B1[0] += c2 * u.xi1;
    B1[1] += c2 * u.p1;
    B2[0] += c2 * u.xi2;
    B2[1] += c2 * u.p2;

    Poly4 row1{};
    Poly4 row2{};
    for (int n = 0; n < 4; ++n) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        const double inv = 1.0 / factorial(n);
        row1[n] = w * (k + sgn) * inv;  // e(z)
        row2[n] = (1.0 + k * sgn) * inv;  // b(z)
    }
    row1[0] += w * (1.0 + k);  // d(z)
    row1[2] += c2;
    row2[0] += 1.0 + k;  // a(z)
    row2[2] += c2;

    const Poly4 n1 = truncated_product(row1, B1);
    const Poly4 n2 = truncated_product(row2, B2);
    Poly4 num{};
    for (int n = 0; n < 4; ++n) num[n] = n1[n] + n2[n];

    std::array<double, 4> out{};
    for (int j = 0; j < 4; ++j) {
        double v = lc.a_m4 * num[3 - j];
        if (1 - j >= 0) v += lc.a_m2 * num[1 - j];
        out[j] = 0.5 * v;
    }
    return out;
}

double functional_chi(int k, const RealState& u, const DimerParams& p) {
    if (k < 0 || k > 3) throw Error(ErrorKind::ConfigInvalid, "functional index must lie in 0..3");
    return functional_chi_all(u, p)[k];
}

double functional_chi_closed(int k, const RealState& u, const DimerParams& p) {
    const double ka = p.kappa;
    const double w = p.w;
    const double cs = sound_speed(p);
    const double c2 = cs * cs;
    const double a4 = laurent_constants(p).a_m4;
    const auto& P1 = u.P1;
    const auto& P2 = u.P2;
    if (k == 3) {
        const double left = integrate([&](double s) { return P1(s) + ka * P2(s); }, -1.0, 0.0);
        const double right = integrate([&](double s) { return ka * P1(s) + P2(s); }, 0.0, 1.0);
        return a4 * w * (1.0 + ka) * (c2 * (u.xi1 + u.xi2 / w) + left - right);
    }
    if (k == 2) {
        const double scal = c2 * ((1.0 + ka) * (u.p1 + u.p2 / w) + 0.5 * (ka - 1.0) * (u.xi1 - u.xi2 / w));
        const double right = integrate(
            [&](double s) {
                return (1.0 + ka) * (s - 1.0) * (ka * P1(s) + P2(s)) + 0.5 * (ka - 1.0) * (ka * P1(s) - P2(s));
            },
            0.0, 1.0);
        const double left = integrate(
            [&](double s) {
                return (1.0 + ka) * (1.0 + s) * (P1(s) + ka * P2(s)) + 0.5 * (ka - 1.0) * (P1(s) - ka * P2(s));
            },
            -1.0, 0.0);
        return a4 * w * (scal + right - left);
    }
    throw Error(ErrorKind::Unsupported, "closed forms are available for chi*_2 and chi*_3 only");
}

cdouble duhamel_I_at(cdouble z, const Chebyshev<cdouble>& P, double v) {
    if (v == 0.0) return 0.0;
    auto f = [&](double s) { return std::exp(z * (v - s)) * P(s); };
    using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
    if (v > 0.0) return -Quad::integrate(f, 0.0, v, 2, 1e-13);
    return Quad::integrate(f, v, 0.0, 2, 1e-13);
}

Chebyshev<cdouble> duhamel_I(cdouble z, const Chebyshev<cdouble>& P) {
    // I(v) = -e^{zv} G(v) with G the antiderivative of e^{-zs} P(s) vanishing at 0; the extra
    // degree resolves the exponential factor.
    const int deg = P.degree();
    const auto g = Chebyshev<cdouble>::fit([&](double s) { return std::exp(-z * s) * P(s); }, deg + 24).integral();
    return Chebyshev<cdouble>::fit([&](double v) { return -std::exp(z * v) * g(v); }, deg);
}

ComplexState resolvent(cdouble z, const DimerParams& p, double c, const ComplexState& u) {
    const double c2 = c * c;
    const double k = p.kappa;
    const double w = p.w;
    const cdouble det = det_M(z, p, c);
    if (std::abs(det) < 1e-10 * det_scale(z, p, c))
        throw Error(ErrorKind::NearSpectrum, "det M(z) vanishes to working precision; z lies on the spectrum");
    const cdouble B1 = c2 * u.xi1 + c2 * z * u.p1 + duhamel_I_at(z, u.P2, 1.0) + k * duhamel_I_at(z, u.P2, -1.0);
    const cdouble B2 = c2 * u.xi2 + c2 * z * u.p2 + k * w * duhamel_I_at(z, u.P1, 1.0) + w * duhamel_I_at(z, u.P1, -1.0);
    const cdouble a = c2 * z * z + 1.0 + k;
    const cdouble d = c2 * z * z + w * (1.0 + k);
    const cdouble b = std::exp(z) + k * std::exp(-z);
    const cdouble e = w * (k * std::exp(z) + std::exp(-z));
    const cdouble u1 = (d * B1 + b * B2) / det;
    const cdouble u2 = (e * B1 + a * B2) / det;
    ComplexState out;
    out.p1 = u1;
    out.p2 = u2;
    out.xi1 = z * u1 - u.p1;
    out.xi2 = z * u2 - u.p2;
    const int deg = std::max(u.P1.degree(), u.P2.degree());
    const auto ez = Chebyshev<cdouble>::fit([z](double v) { return std::exp(z * v); }, deg);
    out.P1 = u1 * ez + duhamel_I(z, u.P1);
    out.P2 = u2 * ez + duhamel_I(z, u.P2);
    return out;
}

ComplexState contour_integral(const DimerParams& p, double c, const ComplexState& u, const ContourOptions& opt) {
    if (opt.nodes < 4 || opt.radius <= 0.0)
        throw Error(ErrorKind::ConfigInvalid, "contour needs a positive radius and at least 4 nodes");
    auto acc = ComplexState::zero(std::max(u.P1.degree(), u.P2.degree()));
    for (int j = 0; j < opt.nodes; ++j) {
        const double theta = 2.0 * std::numbers::pi * (j + 0.5) / opt.nodes;
        const cdouble h = opt.radius * std::exp(cdouble(0.0, theta));
        const cdouble z = opt.center + h;
        ComplexState r;
        try {
            r = resolvent(z, p, c, u);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::NearSpectrum) throw;
            throw Error(ErrorKind::ContourThroughSpectrum, "contour node passes through the spectrum of L");
        }
        r *= std::pow(h, opt.power) * h / static_cast<double>(opt.nodes);
        acc += r;
    }
    return acc;
}

RealState contour_projection(const DimerParams& p, double c, const RealState& u, const ContourOptions& opt) {
    return real_part(contour_integral(p, c, complexify(u), opt));
}

template void require_domain(const StateVector<double>&);
template void require_domain(const StateVector<cdouble>&);
template StateVector<double> apply_L(const DimerParams&, double, const StateVector<double>&);
template StateVector<cdouble> apply_L(const DimerParams&, double, const StateVector<cdouble>&);
template StateVector<double> apply_L1(const DimerParams&, const StateVector<double>&);
template StateVector<cdouble> apply_L1(const DimerParams&, const StateVector<cdouble>&);
template StateVector<double> symmetry_apply(SymmetryKind, const StateVector<double>&);
template StateVector<cdouble> symmetry_apply(SymmetryKind, const StateVector<cdouble>&);

}  // namespace fput
