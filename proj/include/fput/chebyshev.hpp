#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <type_traits>
#include <vector>

namespace fput {

inline constexpr int kDefaultChebDegree = 32;

template <class T>
inline double abs_value(const T& x) {
    return std::abs(x);
}

// Chebyshev series sum_k c_k T_k(v) on [-1, 1].
template <class T>
class Chebyshev {
public:
    Chebyshev() : c_(1, T{}) {}
    explicit Chebyshev(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(T{});
    }

    static Chebyshev zero(int degree = kDefaultChebDegree) { return Chebyshev(std::vector<T>(degree + 1, T{})); }

    static Chebyshev constant(T value, int degree = kDefaultChebDegree) {
        auto out = zero(degree);
        out.c_[0] = value;
        return out;
    }

    // Interpolant at the Chebyshev-Lobatto points cos(j pi / n).
    template <class F>
    static Chebyshev fit(F&& f, int degree = kDefaultChebDegree) {
        const int n = std::max(degree, 1);
        std::vector<T> vals(n + 1);
        for (int j = 0; j <= n; ++j) vals[j] = f(std::cos(std::numbers::pi * j / n));
        std::vector<T> coeffs(n + 1, T{});
        for (int k = 0; k <= n; ++k) {
            T acc{};
            for (int j = 0; j <= n; ++j) {
                const double weight = (j == 0 || j == n) ? 0.5 : 1.0;
                acc += weight * vals[j] * std::cos(std::numbers::pi * j * k / n);
            }
            coeffs[k] = acc * (2.0 / n);
        }
        coeffs[0] *= 0.5;
        coeffs[n] *= 0.5;
        Chebyshev out(std::move(coeffs));
        if (degree == 0) out.c_.resize(1);
        return out;
    }

    // Exact conversion of sum_n a_n v^n, padded to the requested degree.
    static Chebyshev from_monomial(const std::vector<T>& a, int degree = kDefaultChebDegree) {
        // Multiplication by v acts on Chebyshev coefficients as c_k -> (c_{k-1} + c_{k+1}) / 2.
        const int d = std::max<int>(degree, static_cast<int>(a.size()) - 1);
        std::vector<T> acc(d + 2, T{});
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
            std::vector<T> next(d + 2, T{});
            for (int k = 0; k <= d; ++k) {
                if (acc[k] == T{}) continue;
                if (k == 0) {
                    next[1] += acc[0];
                } else {
                    next[k - 1] += 0.5 * acc[k];
                    next[k + 1] += 0.5 * acc[k];
                }
            }
            next[0] += *it;
            acc = std::move(next);
        }
        acc.resize(d + 1);
        return Chebyshev(std::move(acc));
    }

    const std::vector<T>& coeffs() const { return c_; }
    std::vector<T>& coeffs() { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Clenshaw recurrence.
    T operator()(double v) const {
        T b1{};
        T b2{};
        for (int k = degree(); k >= 1; --k) {
            const T b0 = 2.0 * v * b1 - b2 + c_[k];
            b2 = b1;
            b1 = b0;
        }
        return v * b1 - b2 + c_[0];
    }

    Chebyshev derivative() const {
        const int n = degree();
        std::vector<T> d(n + 1, T{});
        if (n >= 1) {
            std::vector<T> tmp(n + 2, T{});
            for (int k = n; k >= 1; --k) tmp[k - 1] = tmp[k + 1] + 2.0 * static_cast<double>(k) * c_[k];
            tmp[0] *= 0.5;
            std::copy(tmp.begin(), tmp.begin() + n, d.begin());
        }
        return Chebyshev(std::move(d));
    }

    // Antiderivative vanishing at v = 0.
    Chebyshev integral() const {
        const int n = degree();
        std::vector<T> a(n + 2, T{});
        auto coef = [&](int k) { return k <= n ? c_[k] : T{}; };
        a[1] = coef(0) - 0.5 * coef(2);
        for (int k = 2; k <= n + 1; ++k) a[k] = (coef(k - 1) - coef(k + 1)) / (2.0 * k);
        Chebyshev out(std::move(a));
        out.c_[0] = -out(0.0);
        return out;
    }

    // Largest absolute value among the trailing `count` coefficients.
    double tail_norm(int count = 4) const {
        double m = 0.0;
        const int n = degree();
        for (int k = std::max(0, n - count + 1); k <= n; ++k) m = std::max(m, abs_value(c_[k]));
        return m;
    }

    Chebyshev& operator+=(const Chebyshev& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Chebyshev& operator-=(const Chebyshev& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Chebyshev& operator*=(T s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Chebyshev operator+(Chebyshev a, const Chebyshev& b) { return a += b; }
    friend Chebyshev operator-(Chebyshev a, const Chebyshev& b) { return a -= b; }
    friend Chebyshev operator*(T s, Chebyshev a) { return a *= s; }
    friend Chebyshev operator*(Chebyshev a, T s) { return a *= s; }
    friend Chebyshev operator-(Chebyshev a) { return a *= T(-1.0); }

private:
    std::vector<T> c_;
};

template <class T>
Chebyshev<std::complex<double>> complexify(const Chebyshev<T>& f) {
    std::vector<std::complex<double>> c(f.coeffs().begin(), f.coeffs().end());
    return Chebyshev<std::complex<double>>(std::move(c));
}

inline Chebyshev<double> real_part(const Chebyshev<std::complex<double>>& f) {
    std::vector<double> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.real());
    return Chebyshev<double>(std::move(c));
}

// Clenshaw-Curtis rule with n+1 points on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule clenshaw_curtis(int n);

// Shared read-only 64-interval rule, built once on first use.
const QuadratureRule& default_rule();

template <std::invocable<double> F>
auto integrate(F&& f, double a, double b, const QuadratureRule& rule = default_rule()) {
    using R = std::decay_t<decltype(f(a))>;
    R acc{};
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

}  // namespace fput
