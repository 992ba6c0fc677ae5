#include "fput/dispersion.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>

#include "fput/error.hpp"

namespace fput {

double lambda_dispersion(double k, const DimerParams& p, double c) {
    const double c2 = c * c;
    const double k2 = k * k;
    return c2 * c2 * k2 * k2 - c2 * (1.0 + p.w) * (1.0 + p.kappa) * k2 +
           4.0 * p.kappa * p.w * std::sin(k) * std::sin(k);
}

std::array<double, 4> lambda_derivatives(double k, const DimerParams& p, double c) {
    const double c2 = c * c;
    const double c4 = c2 * c2;
    const double a = c2 * (1.0 + p.w) * (1.0 + p.kappa);
    const double b = 2.0 * p.kappa * p.w;
    return {4.0 * c4 * k * k * k - 2.0 * a * k + 2.0 * b * std::sin(2.0 * k),
            12.0 * c4 * k * k - 2.0 * a + 4.0 * b * std::cos(2.0 * k),
            24.0 * c4 * k - 8.0 * b * std::sin(2.0 * k),
            24.0 * c4 - 16.0 * b * std::cos(2.0 * k)};
}

std::complex<double> det_M(std::complex<double> z, const DimerParams& p, double c) {
    const double c2 = c * c;
    const std::complex<double> z2 = z * z;
    return c2 * c2 * z2 * z2 + c2 * (1.0 + p.kappa) * (1.0 + p.w) * z2 -
           4.0 * p.kappa * p.w * std::sinh(z) * std::sinh(z);
}

double det_M_real_derivative(double x, const DimerParams& p, double c) {
    const double c2 = c * c;
    return 4.0 * c2 * c2 * x * x * x + 2.0 * c2 * (1.0 + p.kappa) * (1.0 + p.w) * x -
           4.0 * p.kappa * p.w * std::sinh(2.0 * x);
}

std::pair<double, double> lambda_pm(double k, const DimerParams& p) {
    const double kap = p.kappa;
    const double w = p.w;
    const double ck = std::cos(k);
    const double mid = 0.5 * (1.0 + kap) * (1.0 + w);
    const double disc = (1.0 + w) * (1.0 + w) * (1.0 - kap) * (1.0 - kap) +
                        4.0 * kap * ((1.0 - w) * (1.0 - w) + 4.0 * w * ck * ck);
    const double root = 0.5 * std::sqrt(disc);
    const double plus = mid + root;
    // lambda_- lambda_+ = 2 kappa w (1 - cos 2k); the product form avoids cancellation.
    const double prod = 4.0 * kap * w * std::sin(k) * std::sin(k);
    return {prod / plus, plus};
}

double sound_speed(const DimerParams& p) {
    return std::sqrt(4.0 * p.kappa * p.w / ((1.0 + p.kappa) * (1.0 + p.w)));
}

std::vector<double> taylor_lambda_at_zero(const DimerParams& p, double c, int order) {
    if (order < 0 || order > 6) throw Error(ErrorKind::ConfigInvalid, "taylor order must lie in [0, 6]");
    const double c2 = c * c;
    const double kw = p.kappa * p.w;
    const std::array<double, 7> all{0.0,
                                    0.0,
                                    8.0 * kw - 2.0 * c2 * (1.0 + p.w) * (1.0 + p.kappa),
                                    0.0,
                                    24.0 * c2 * c2 - 32.0 * kw,
                                    0.0,
                                    128.0 * kw};
    return std::vector<double>(all.begin(), all.begin() + order + 1);
}

int zero_root_multiplicity(const DimerParams& p, double c) {
    const auto d = taylor_lambda_at_zero(p, c, 6);
    const double tol = 1e-8 * (1.0 + std::abs(d[4]));
    int m = 0;
    while (m < 6 && std::abs(d[m]) < tol) ++m;
    return m;
}

namespace {

struct Bracket {
    double lo;
    double hi;
};

std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f, const RootScanOptions& opt) {
    std::vector<Bracket> out;
    double x0 = opt.lower;
    double f0 = f(x0);
    const long n = static_cast<long>(std::ceil((opt.upper - opt.lower) / opt.step));
    for (long i = 1; i <= n; ++i) {
        const double x1 = std::min(opt.upper, opt.lower + static_cast<double>(i) * opt.step);
        const double f1 = f(x1);
        if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
            if (f0 != 0.0 || out.empty() || out.back().hi != x0) out.push_back({x0, x1});
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

double bisect_and_polish(const std::function<double(double)>& f, const std::function<double(double)>& df,
                         Bracket b, double tol) {
    auto stop = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
    auto r = boost::math::tools::bisect(f, b.lo, b.hi, stop);
    double x = 0.5 * (r.first + r.second);
    const double slope = df(x);
    if (slope != 0.0) {
        const double polished = x - f(x) / slope;
        if (polished >= b.lo && polished <= b.hi && std::abs(f(polished)) <= std::abs(f(x))) x = polished;
    }
    return x;
}

}  // namespace

RootReport critical_frequency(const DimerParams& p, double c, const RootScanOptions& opt) {
    auto f = [&](double k) { return lambda_dispersion(k, p, c); };
    auto df = [&](double k) { return lambda_derivatives(k, p, c)[0]; };
    const auto brackets = scan_sign_changes(f, opt);
    if (brackets.empty())
        throw Error(ErrorKind::NoRoot, "no positive root of Lambda in the scan window for " + p.describe());
    if (brackets.size() > 1)
        throw Error(ErrorKind::MultipleRoots,
                    std::to_string(brackets.size()) + " positive roots of Lambda found; c is below the admissible range");
    RootReport rep;
    const double k = bisect_and_polish(f, df, brackets.front(), opt.bisection_tol);
    rep.location = k;
    rep.residual = std::abs(f(k));
    rep.derivatives = lambda_derivatives(k, p, c);
    const double tol = 1e-8 * (1.0 + std::abs(rep.derivatives[3]));
    rep.multiplicity = std::abs(rep.derivatives[0]) > tol ? 1 : 2;
    return rep;
}

RootReport supersonic_real_root(const DimerParams& p, double c, const RootScanOptions& opt) {
    const double cs = sound_speed(p);
    if (!(c > cs))
        throw Error(ErrorKind::NoRoot, "the real eigenvalue pair splits off only for supersonic c > c_s");
    auto f = [&](double x) { return det_M(x, p, c).real(); };
    auto df = [&](double x) { return det_M_real_derivative(x, p, c); };
    const auto brackets = scan_sign_changes(f, opt);
    if (brackets.empty()) throw Error(ErrorKind::NoRoot, "no positive real root of det M in the scan window");
    if (brackets.size() > 1)
        throw Error(ErrorKind::MultipleRoots, "more than one positive real root of det M in the scan window");
    RootReport rep;
    const double x = bisect_and_polish(f, df, brackets.front(), opt.bisection_tol);
    rep.location = x;
    rep.residual = std::abs(f(x));
    // Derivatives along the real axis: d^n/dx^n det M(x).
    const double c2 = c * c;
    const double kw = p.kappa * p.w;
    const double a = c2 * (1.0 + p.kappa) * (1.0 + p.w);
    rep.derivatives = {df(x), 12.0 * c2 * c2 * x * x + 2.0 * a - 8.0 * kw * std::cosh(2.0 * x),
                       24.0 * c2 * c2 * x - 16.0 * kw * std::sinh(2.0 * x),
                       24.0 * c2 * c2 - 32.0 * kw * std::cosh(2.0 * x)};
    rep.multiplicity = std::abs(rep.derivatives[0]) > 1e-8 ? 1 : 2;
    return rep;
}

double front_decay_rate(const DimerParams& p) {
    switch (p.kind()) {
        case DimerKind::Mass:
        case DimerKind::Monatomic:
            if (p.kappa == 1.0) return std::sqrt(6.0 * p.w * (1.0 + p.w) / (p.w * p.w - p.w + 1.0));
            break;
        case DimerKind::Spring:
            return std::sqrt(6.0 * p.kappa * (1.0 + p.kappa) / (p.kappa * p.kappa - p.kappa + 1.0));
        case DimerKind::General:
            break;
    }
    throw Error(ErrorKind::Unsupported,
                "closed-form front decay rate exists only for mass (kappa=1) or spring (w=1) dimers; use sqrt(Lfrak0)");
}

}  // namespace fput
