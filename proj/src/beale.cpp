#include "fput/beale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fput/dispersion.hpp"
#include "fput/error.hpp"
#include "fput/profiles.hpp"

namespace fput {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;

struct Symbols {
    VectorXd k;
    VectorXcd a12;
    VectorXcd a21;
    VectorXcd da12;
    VectorXcd da21;
};

Symbols make_symbols(const DimerParams& p, double L, int bins) {
    Symbols s;
    s.k.resize(bins);
    s.a12.resize(bins);
    s.a21.resize(bins);
    s.da12.resize(bins);
    s.da21.resize(bins);
    for (int m = 0; m < bins; ++m) {
        const double k = m * kPi / L;
        const cd e(std::cos(k), std::sin(k));
        const cd em = std::conj(e);
        s.k(m) = k;
        s.a12(m) = p.w * e + em;
        s.a21(m) = e + p.w * em;
        s.da12(m) = cd(0.0, 1.0) * (p.w * e - em);
        s.da21(m) = cd(0.0, 1.0) * (e - p.w * em);
    }
    return s;
}

VectorXd force_values(const DimerParams& p, Parity par, const VectorXd& r) {
    VectorXd f(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) f(i) = p.force(par, r(i));
    return f;
}

VectorXd force_slopes(const DimerParams& p, Parity par, const VectorXd& r) {
    VectorXd f(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) f(i) = p.force_derivative(par, r(i));
    return f;
}

// Residuals R_i = c^2 rho_i'' - [A(d) f]_i on the periodic grid.
void grid_residual(const DimerParams& p, double c, const Symbols& s, const RealFFT& fft, const VectorXd& r1,
                   const VectorXd& r2, VectorXd& R1, VectorXd& R2) {
    const double c2 = c * c;
    const VectorXcd h1 = fft.forward(r1);
    const VectorXcd h2 = fft.forward(r2);
    const VectorXcd f1 = fft.forward(force_values(p, Parity::Odd, r1));
    const VectorXcd f2 = fft.forward(force_values(p, Parity::Even, r2));
    const VectorXd ck2 = c2 * s.k.array().square();
    VectorXcd o1 = -(ck2.array() * h1.array()) + (1.0 + p.w) * f1.array() - s.a12.array() * f2.array();
    VectorXcd o2 = -(ck2.array() * h2.array()) - s.a21.array() * f1.array() + (1.0 + p.w) * f2.array();
    R1 = fft.inverse(o1);
    R2 = fft.inverse(o2);
}

// Symmetry-restricted Fourier collocation of the relative-displacement traveling-wave system.
class Collocation {
public:
    Collocation(const DimerParams& p, double c, double L, int M, FourierSymmetry sym)
        : p_(p), c_(c), L_(L), M_(M), N_(2 * M), sym_(sym), fft_(2 * M) {
        const int nc = M + 1;
        const int ns = M - 1;
        MatrixXd Cb(N_, nc);
        MatrixXd Sb(N_, ns);
        for (int i = 0; i < N_; ++i) {
            const double t = kPi * (-1.0 + static_cast<double>(i) / M);
            for (int m = 0; m < nc; ++m) Cb(i, m) = std::cos(m * t);
            for (int m = 1; m <= ns; ++m) Sb(i, m - 1) = std::sin(m * t);
        }
        const VectorXd cn = Cb.colwise().squaredNorm();
        const VectorXd sn = Sb.colwise().squaredNorm();
        const MatrixXd Ct = cn.cwiseInverse().asDiagonal() * Cb.transpose();
        const MatrixXd St = sn.cwiseInverse().asDiagonal() * Sb.transpose();
        if (sym == FourierSymmetry::EvenOdd) {
            n_ = nc + ns;
            B1_.resize(N_, n_);
            B2_.resize(N_, n_);
            B1_ << Cb, Sb;
            B2_ << Cb, -Sb;
            G1_.resize(n_, N_);
            G2_.resize(n_, N_);
            G1_ << 0.5 * Ct, 0.5 * St;
            G2_ << 0.5 * Ct, -0.5 * St;
            gauge_row_ = 0;
        } else {
            n_ = 2 * nc;
            B1_ = MatrixXd::Zero(N_, n_);
            B2_ = MatrixXd::Zero(N_, n_);
            B1_.leftCols(nc) = Cb;
            B2_.rightCols(nc) = Cb;
            G1_ = MatrixXd::Zero(n_, N_);
            G2_ = MatrixXd::Zero(n_, N_);
            G1_.topRows(nc) = Ct;
            G2_.bottomRows(nc) = Ct;
            gauge_row_ = nc;
        }
        FB1_ = fft_.forward_columns(B1_);
        FB2_ = fft_.forward_columns(B2_);
        set_L(L);
    }

    int unknowns() const { return n_; }
    int grid_size() const { return N_; }
    double L() const { return L_; }
    void set_L(double L) {
        L_ = L;
        sym_tab_ = make_symbols(p_, L, fft_.bins());
    }
    const RealFFT& fft() const { return fft_; }
    const Symbols& symbols() const { return sym_tab_; }

    struct State {
        VectorXd r1, r2, R1, R2;
        double gauge = 0.0;
    };

    State evaluate(const VectorXd& coef) const {
        State s;
        s.r1 = B1_ * coef;
        s.r2 = B2_ * coef;
        grid_residual(p_, c_, sym_tab_, fft_, s.r1, s.r2, s.R1, s.R2);
        const VectorXd f1 = force_values(p_, Parity::Odd, s.r1);
        const VectorXd f2 = force_values(p_, Parity::Even, s.r2);
        s.gauge = c_ * c_ * (s.r1.mean() + s.r2.mean()) - 2.0 * p_.w / (1.0 + p_.w) * (f1.mean() + f2.mean());
        return s;
    }

    VectorXd project(const State& s) const {
        VectorXd g = G1_ * s.R1 + G2_ * s.R2;
        g(gauge_row_) = s.gauge;
        return g;
    }

    static double max_residual(const State& s) {
        return std::max({s.R1.cwiseAbs().maxCoeff(), s.R2.cwiseAbs().maxCoeff(), std::abs(s.gauge)});
    }

    MatrixXd jacobian(const State& s) const {
        const double c2 = c_ * c_;
        const VectorXd s1 = force_slopes(p_, Parity::Odd, s.r1);
        const VectorXd s2 = force_slopes(p_, Parity::Even, s.r2);
        const MatrixXd D1 = s1.asDiagonal() * B1_;
        const MatrixXd D2 = s2.asDiagonal() * B2_;
        const MatrixXcd FD1 = fft_.forward_columns(D1);
        const MatrixXcd FD2 = fft_.forward_columns(D2);
        const VectorXd ck2 = c2 * sym_tab_.k.array().square();
        MatrixXcd H1 = -(ck2.asDiagonal() * FB1_) + (1.0 + p_.w) * FD1 - sym_tab_.a12.asDiagonal() * FD2;
        MatrixXcd H2 = -(ck2.asDiagonal() * FB2_) - sym_tab_.a21.asDiagonal() * FD1 + (1.0 + p_.w) * FD2;
        MatrixXd J = G1_ * fft_.inverse_columns(H1) + G2_ * fft_.inverse_columns(H2);
        J.row(gauge_row_) = c2 * (B1_.colwise().mean() + B2_.colwise().mean()) -
                            2.0 * p_.w / (1.0 + p_.w) * (D1.colwise().mean() + D2.colwise().mean());
        return J;
    }

    // Derivative of the projected residual with respect to the half length L at fixed coefficients.
    VectorXd dproject_dL(const State& s) const {
        const double c2 = c_ * c_;
        const VectorXcd h1 = fft_.forward(s.r1);
        const VectorXcd h2 = fft_.forward(s.r2);
        const VectorXcd f1 = fft_.forward(force_values(p_, Parity::Odd, s.r1));
        const VectorXcd f2 = fft_.forward(force_values(p_, Parity::Even, s.r2));
        const VectorXd dk = -sym_tab_.k / L_;
        const VectorXd dk2 = 2.0 * c2 * sym_tab_.k.array() * dk.array();
        VectorXcd o1 = -(dk2.array() * h1.array()) - (sym_tab_.da12.array() * dk.array()) * f2.array();
        VectorXcd o2 = -(dk2.array() * h2.array()) - (sym_tab_.da21.array() * dk.array()) * f1.array();
        VectorXd g = G1_ * fft_.inverse(o1) + G2_ * fft_.inverse(o2);
        g(gauge_row_) = 0.0;
        return g;
    }

    // Coefficients whose grid values approximate (r1, r2) in the least-squares sense.
    VectorXd coefficients_of(const VectorXd& r1, const VectorXd& r2) const { return G1_ * r1 + G2_ * r2; }

    FourierProfile profile(const VectorXd& coef) const {
        FourierProfile prof;
        prof.params = p_;
        prof.symmetry = sym_;
        prof.L = L_;
        prof.modes = M_;
        prof.c = c_;
        const VectorXd r1 = B1_ * coef;
        const VectorXd r2 = B2_ * coef;
        prof.rho1.assign(r1.data(), r1.data() + r1.size());
        prof.rho2.assign(r2.data(), r2.data() + r2.size());
        prof.finalize();
        return prof;
    }

private:
    DimerParams p_;
    double c_;
    double L_;
    int M_;
    int N_;
    int n_ = 0;
    FourierSymmetry sym_;
    RealFFT fft_;
    MatrixXd B1_, B2_, G1_, G2_;
    MatrixXcd FB1_, FB2_;
    int gauge_row_ = 0;
    Symbols sym_tab_;
};

VectorXd solve_linear(const MatrixXd& J, const VectorXd& rhs) {
    Eigen::PartialPivLU<MatrixXd> lu(J);
    if (!(lu.rcond() > 1e-14)) throw Error(ErrorKind::JacobianSingular, "Newton Jacobian is numerically singular");
    VectorXd d = lu.solve(rhs);
    if (!d.allFinite()) throw Error(ErrorKind::JacobianSingular, "Newton step is not finite");
    return d;
}

double supersonic_speed(double nu, const DimerParams& p) {
    if (!(nu > 0.0)) throw Error(ErrorKind::ConfigInvalid, "nu must be positive");
    const double cs = sound_speed(p);
    return std::sqrt(cs * cs + nu * nu);
}

DimerKind profile_kind(const DimerParams& p) {
    return symmetry_for_fourier(p) == FourierSymmetry::EvenOdd ? DimerKind::Mass : DimerKind::Spring;
}

}  // namespace

FourierSymmetry symmetry_for_fourier(const DimerParams& p) {
    switch (p.kind()) {
        case DimerKind::Mass:
        case DimerKind::Monatomic:
            return FourierSymmetry::EvenOdd;
        case DimerKind::Spring:
            return FourierSymmetry::EvenEven;
        case DimerKind::General:
            break;
    }
    throw Error(ErrorKind::ConfigInvalid,
                "symmetry-restricted Fourier solves need a mass (kappa=1) or spring (w=1) dimer; got " + p.describe());
}

void FourierProfile::finalize() {
    const int N = grid_size();
    const double h = 2.0 * L / N;
    x.resize(N);
    for (int i = 0; i < N; ++i) x[i] = -L + h * i;
    RealFFT fft(N);
    const VectorXcd a = fft.forward(Eigen::Map<const VectorXd>(rho1.data(), N)) / static_cast<double>(N);
    const VectorXcd b = fft.forward(Eigen::Map<const VectorXd>(rho2.data(), N)) / static_cast<double>(N);
    coeffs1.assign(a.data(), a.data() + a.size());
    coeffs2.assign(b.data(), b.data() + b.size());
}

double FourierProfile::eval(int component, double xq, int order) const {
    const auto& cf = component == 1 ? coeffs1 : coeffs2;
    const int N = grid_size();
    const int bins = static_cast<int>(cf.size());
    const double k1 = kPi / L;
    // e^{i k_m (x + L)} by repeated rotation.
    const cd rot(std::cos(k1 * (xq + L)), std::sin(k1 * (xq + L)));
    cd phase(1.0, 0.0);
    double acc = 0.0;
    for (int m = 0; m < bins; ++m) {
        const double weight = (m == 0 || (N % 2 == 0 && m == N / 2)) ? 1.0 : 2.0;
        cd term = cf[m] * phase;
        if (order > 0) term *= std::pow(cd(0.0, m * k1), order);
        acc += weight * term.real();
        phase *= rot;
    }
    return acc;
}

double critical_ripple_frequency(double nu, const DimerParams& p) {
    const double c = supersonic_speed(nu, p);
    return critical_frequency(p, c).location.real() / nu;
}

double aligned_half_length(double omega_c, double L0) {
    const double m = std::ceil(omega_c * L0 / kPi - 0.5);
    return (m + 0.5) * kPi / omega_c;
}

BranchPoint periodic_branch(double nu, double a, const DimerParams& p, int modes, const NewtonOptions& opt) {
    if (!(a > 0.0)) throw Error(ErrorKind::ConfigInvalid, "branch amplitude must be positive");
    if (modes < 4) throw Error(ErrorKind::ConfigInvalid, "periodic branch needs at least 4 modes");
    const double c = supersonic_speed(nu, p);
    const double omega_c = critical_frequency(p, c).location.real();
    Collocation col(p, c, kPi / omega_c, modes, symmetry_for_fourier(p));
    const int n = col.unknowns();
    VectorXd coef = VectorXd::Zero(n);
    coef(1) = a;
    double omega = omega_c;

    // Extended unknown (coef, omega); the last equation pins the primary cosine coefficient.
    auto residual_vector = [&](const VectorXd& cf, double om, Collocation::State& st) {
        col.set_L(kPi / om);
        st = col.evaluate(cf);
        VectorXd g(n + 1);
        g.head(n) = col.project(st);
        g(n) = cf(1) - a;
        return g;
    };

    Collocation::State st;
    VectorXd g = residual_vector(coef, omega, st);
    int it = 0;
    for (; it < opt.max_iter; ++it) {
        if (Collocation::max_residual(st) < opt.tol && std::abs(g(n)) < opt.tol) break;
        MatrixXd J = MatrixXd::Zero(n + 1, n + 1);
        J.topLeftCorner(n, n) = col.jacobian(st);
        // d/d omega = d/dL * dL/domega with L = pi / omega.
        J.topRightCorner(n, 1) = col.dproject_dL(st) * (-(kPi / omega) / omega);
        J(n, 1) = 1.0;
        const VectorXd d = solve_linear(J, -g);
        const double phi0 = g.norm();
        double t = 1.0;
        int halvings = 0;
        for (;; ++halvings) {
            if (halvings > opt.max_halvings)
                throw Error(ErrorKind::NewtonDiverged, "Armijo backtracking failed on the periodic branch");
            Collocation::State trial_state;
            const VectorXd trial = coef + t * d.head(n);
            const double trial_om = omega + t * d(n);
            const VectorXd gt = residual_vector(trial, trial_om, trial_state);
            if (gt.norm() <= (1.0 - 1e-4 * t) * phi0 || gt.norm() < 1e-14) {
                coef = trial;
                omega = trial_om;
                g = gt;
                st = trial_state;
                break;
            }
            t *= 0.5;
        }
    }
    col.set_L(kPi / omega);
    st = col.evaluate(coef);
    const double res = Collocation::max_residual(st);
    if (!(res < opt.tol * 10.0))
        throw Error(ErrorKind::NewtonDiverged, "periodic branch Newton did not converge; residual " + std::to_string(res));
    BranchPoint out;
    out.a = a;
    out.omega = omega;
    out.Omega = omega / nu;
    out.profile = col.profile(coef);
    out.profile.nu = nu;
    out.profile.omega_c = omega_c;
    out.profile.residual = res;
    out.profile.iterations = it;
    out.residual = res;
    return out;
}

FourierProfile nanopteron_solve(double nu, const DimerParams& p, const NanopteronOptions& opt) {
    const double c = supersonic_speed(nu, p);
    const double omega_c = critical_frequency(p, c).location.real();
    const double L = opt.L > 0.0 ? opt.L : aligned_half_length(omega_c, opt.length_factor / nu);
    const int M = opt.modes > 0 ? opt.modes : static_cast<int>(std::ceil(opt.k_max * L / kPi));
    const double k_nyquist = M * kPi / L;
    if (omega_c > 0.8 * k_nyquist)
        throw Error(ErrorKind::UnderResolved, "ripple wavenumber exceeds 0.8 of the mode cutoff; increase modes");
    const auto sym = symmetry_for_fourier(p);
    Collocation col(p, c, L, M, sym);

    // Initial guess: long-wave sech^2 core, no ripple.
    ProfileSpec spec;
    spec.params = p;
    spec.dimer_kind = profile_kind(p);
    spec.epsilon = epsilon_from_speed(spec.dimer_kind, p, c);
    const double eps = spec.epsilon;
    VectorXd r1(col.grid_size());
    VectorXd r2(col.grid_size());
    const double h = 2.0 * L / col.grid_size();
    for (int i = 0; i < col.grid_size(); ++i) {
        const double X = eps * (-L + h * i);
        r1(i) = eps * eps * sech2_core(spec, X, Parity::Odd);
        r2(i) = eps * eps * sech2_core(spec, X, Parity::Even);
    }
    if (sym == FourierSymmetry::EvenOdd) r2 = r1;
    VectorXd coef = col.coefficients_of(r1, r2);

    auto st = col.evaluate(coef);
    VectorXd g = col.project(st);
    int it = 0;
    for (; it < opt.newton.max_iter; ++it) {
        if (Collocation::max_residual(st) < opt.newton.tol) break;
        const VectorXd d = solve_linear(col.jacobian(st), -g);
        const double phi0 = g.norm();
        double t = 1.0;
        for (int halvings = 0;; ++halvings) {
            if (halvings > opt.newton.max_halvings)
                throw Error(ErrorKind::NewtonDiverged, "Armijo backtracking failed in the nanopteron solve");
            const VectorXd trial = coef + t * d;
            auto ts = col.evaluate(trial);
            const VectorXd gt = col.project(ts);
            if (gt.norm() <= (1.0 - 1e-4 * t) * phi0 || Collocation::max_residual(ts) < opt.newton.tol) {
                coef = trial;
                st = std::move(ts);
                g = gt;
                break;
            }
            t *= 0.5;
        }
    }
    const double res = Collocation::max_residual(st);
    if (!(res < opt.newton.tol * 10.0))
        throw Error(ErrorKind::NewtonDiverged,
                    "nanopteron Newton did not converge; residual " + std::to_string(res));
    FourierProfile prof = col.profile(coef);
    prof.nu = nu;
    prof.omega_c = omega_c;
    prof.residual = res;
    prof.iterations = it;
    return prof;
}

double refined_residual(const FourierProfile& prof, int factor) {
    const int N = prof.grid_size();
    const int Nf = factor * N;
    RealFFT fine(Nf);
    auto upsample = [&](const std::vector<cd>& cf) {
        VectorXcd X = VectorXcd::Zero(fine.bins());
        for (int m = 0; m < static_cast<int>(cf.size()); ++m) {
            cd v = cf[m] * static_cast<double>(Nf);
            if (N % 2 == 0 && m == N / 2 && factor > 1) v *= 0.5;
            X(m) = v;
        }
        return fine.inverse(X);
    };
    const VectorXd r1 = upsample(prof.coeffs1);
    const VectorXd r2 = upsample(prof.coeffs2);
    const Symbols s = make_symbols(prof.params, prof.L, fine.bins());
    VectorXd R1, R2;
    grid_residual(prof.params, prof.c, s, fine, r1, r2, R1, R2);
    return std::max(R1.cwiseAbs().maxCoeff(), R2.cwiseAbs().maxCoeff());
}

namespace {

// Refines an extremum of the interpolant by Newton steps on its derivative.
double refine_extremum(const FourierProfile& prof, int component, double x0, double lo, double hi, double step) {
    double x = x0;
    for (int i = 0; i < 20; ++i) {
        const double d1 = prof.eval(component, x, 1);
        const double d2 = prof.eval(component, x, 2);
        if (d2 == 0.0) break;
        const double nx = std::clamp(x - d1 / d2, std::max(lo, x0 - step), std::min(hi, x0 + step));
        if (std::abs(nx - x) < 1e-14 * (1.0 + std::abs(x))) {
            x = nx;
            break;
        }
        x = nx;
    }
    return prof.eval(component, x);
}

struct Extremes {
    double max = -1e300;
    double min = 1e300;
};

Extremes window_extremes(const FourierProfile& prof, double lo, double hi, int component) {
    const int N = prof.grid_size();
    const double h = 2.0 * prof.L / N;
    const double step = h / 16.0;
    const int count = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)) + 1);
    const double dx = (hi - lo) / (count - 1);
    double xmax = lo, xmin = lo, vmax = -1e300, vmin = 1e300;
    for (int i = 0; i < count; ++i) {
        const double xq = lo + dx * i;
        const double v = prof.eval(component, xq);
        if (v > vmax) {
            vmax = v;
            xmax = xq;
        }
        if (v < vmin) {
            vmin = v;
            xmin = xq;
        }
    }
    Extremes e;
    e.max = std::max(vmax, refine_extremum(prof, component, xmax, lo, hi, dx));
    e.min = std::min(vmin, refine_extremum(prof, component, xmin, lo, hi, dx));
    return e;
}

}  // namespace

double ripple_amplitude(const FourierProfile& prof, double x_lo, double x_hi, int component) {
    if (!(x_hi > x_lo)) throw Error(ErrorKind::ConfigInvalid, "ripple window must have positive length");
    const double nearest = (x_lo <= 0.0 && x_hi >= 0.0) ? 0.0 : std::min(std::abs(x_lo), std::abs(x_hi));
    if (nearest < 0.5 * prof.L * (1.0 - 1e-12))
        throw Error(ErrorKind::WindowInsideCore, "ripple window must satisfy |x| >= L/2");
    const auto e = window_extremes(prof, x_lo, x_hi, component);
    return 0.5 * (e.max - e.min);
}

double far_field_ripple_amplitude(const FourierProfile& prof, int component) {
    const double inner = 0.5 * prof.L;
    const double outer = prof.L - 0.125 * prof.L;
    const auto right = window_extremes(prof, inner, outer, component);
    const auto left = window_extremes(prof, -outer, -inner, component);
    return 0.5 * (std::max(right.max, left.max) - std::min(right.min, left.min));
}

double dominant_ripple_wavenumber(const FourierProfile& prof, int component) {
    const auto& cf = component == 1 ? prof.coeffs1 : prof.coeffs2;
    double best = -1.0;
    double kbest = 0.0;
    for (int m = 1; m < static_cast<int>(cf.size()); ++m) {
        const double k = m * kPi / prof.L;
        if (k < 0.5 * prof.omega_c) continue;
        if (std::abs(cf[m]) > best) {
            best = std::abs(cf[m]);
            kbest = k;
        }
    }
    return kbest;
}

double peak_ratio(const FourierProfile& prof) {
    const double m1 = *std::max_element(prof.rho1.begin(), prof.rho1.end());
    const double m2 = *std::max_element(prof.rho2.begin(), prof.rho2.end());
    return m1 / m2;
}

double fit_core_amplitude(const FourierProfile& prof, double q, double x_max, int component) {
    const auto& v = component == 1 ? prof.rho1 : prof.rho2;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < prof.grid_size(); ++i) {
        if (std::abs(prof.x[i]) > x_max) continue;
        const double s = 1.0 / std::cosh(0.5 * q * prof.x[i]);
        num += v[i] * s * s;
        den += s * s * s * s;
    }
    if (den == 0.0) throw Error(ErrorKind::ConfigInvalid, "core fit window contains no grid points");
    return num / den;
}

AmplitudeScan amplitude_scan(const std::vector<double>& nu_list, const DimerParams& p, const NanopteronOptions& opt) {
    if (nu_list.empty()) throw Error(ErrorKind::ConfigInvalid, "nu list must be nonempty");
    for (std::size_t i = 1; i < nu_list.size(); ++i)
        if (!(nu_list[i] < nu_list[i - 1])) throw Error(ErrorKind::ConfigInvalid, "nu list must be strictly decreasing");
    AmplitudeScan scan;
    for (double nu : nu_list) {
        const auto prof = nanopteron_solve(nu, p, opt);
        ScanRow row;
        row.nu = nu;
        row.amplitude = far_field_ripple_amplitude(prof, 1);
        row.residual = prof.residual;
        row.L = prof.L;
        row.modes = prof.modes;
        row.iterations = prof.iterations;
        scan.rows.push_back(row);
        scan.profiles.push_back(prof);
    }
    scan.strictly_decreasing = true;
    for (std::size_t i = 1; i < scan.rows.size(); ++i)
        if (!(scan.rows[i].amplitude < scan.rows[i - 1].amplitude)) scan.strictly_decreasing = false;
    if (scan.rows.size() < 2) return scan;
    const int n = static_cast<int>(scan.rows.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd y(n);
    Eigen::MatrixXd B(n, 2);
    for (int i = 0; i < n; ++i) {
        A(i, 0) = std::log(scan.rows[i].nu);
        A(i, 1) = 1.0;
        B(i, 0) = 1.0 / scan.rows[i].nu;
        B(i, 1) = 1.0;
        y(i) = std::log(scan.rows[i].amplitude);
    }
    const Eigen::Vector2d alg = A.colPivHouseholderQr().solve(y);
    const Eigen::Vector2d ex = B.colPivHouseholderQr().solve(y);
    const double mean = y.mean();
    const double ss_tot = (y.array() - mean).square().sum();
    const double ss_res = (B * ex - y).squaredNorm();
    scan.has_fits = true;
    scan.algebraic_order = alg(0);
    scan.exponential_slope = ex(0);
    scan.exponential_r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return scan;
}

}  // namespace fput
