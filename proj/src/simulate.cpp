#include "fput/simulate.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "fput/error.hpp"
#include "fput/fourier.hpp"

namespace fput {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

std::vector<double> forces(const LatticeState& s, const std::vector<double>& r) {
    std::vector<double> f(r.size());
    for (int i = 0; i < s.size(); ++i) f[i] = s.params.force(s.parity(i), r[i]);
    return f;
}

// Velocity-Verlet stepper that also tracks the energy.
class Stepper {
public:
    Stepper(const LatticeState& s0, double dt, double blowup) : s_(s0), dt_(dt), blowup_(blowup) {
        s_.validate();
        a_ = lattice_rhs(s_);
        h0_ = energy(s_);
    }

    void step() {
        const int n = s_.size();
        for (int i = 0; i < n; ++i) {
            s_.v[i] += 0.5 * dt_ * a_[i];
            s_.q[i] += dt_ * s_.v[i];
        }
        a_ = lattice_rhs(s_);
        double qmax = 0.0;
        for (int i = 0; i < n; ++i) {
            s_.v[i] += 0.5 * dt_ * a_[i];
            qmax = std::max(qmax, std::abs(s_.q[i]));
        }
        s_.t += dt_;
        if (!(qmax <= blowup_) || !std::isfinite(qmax))
            throw Error(ErrorKind::Blowup, "lattice state exceeded " + std::to_string(blowup_) + " at t=" +
                                               std::to_string(s_.t));
        const double h = energy(s_);
        drift_ = std::abs(h - h0_) / (h0_ != 0.0 ? std::abs(h0_) : 1.0);
        max_drift_ = std::max(max_drift_, drift_);
    }

    const LatticeState& state() const { return s_; }
    double drift() const { return drift_; }
    double max_drift() const { return max_drift_; }

private:
    LatticeState s_;
    double dt_;
    double blowup_;
    std::vector<double> a_;
    double h0_ = 0.0;
    double drift_ = 0.0;
    double max_drift_ = 0.0;
};

// Position state from strains r and strain rates rdot.
LatticeState position_from_strains(const DimerParams& p, const std::vector<double>& r, const std::vector<double>& rdot,
                                   long first_index, double t) {
    LatticeState s;
    s.params = p;
    s.coordinate = Coordinate::Position;
    s.first_index = first_index;
    s.t = t;
    const int n = static_cast<int>(r.size());
    s.q.assign(n, 0.0);
    s.v.assign(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) {
        s.q[i + 1] = s.q[i] + r[i];
        s.v[i + 1] = s.v[i] + rdot[i];
    }
    double offset = 0.0;
    for (double x : r) offset += x;
    s.offset = offset;
    double mom = 0.0;
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
        const double m = p.mass(s.parity(i));
        mom += m * s.v[i];
        mass += m;
    }
    for (double& x : s.v) x -= mom / mass;
    return s;
}

}  // namespace

void LatticeState::validate() const {
    if (q.size() != v.size()) throw Error(ErrorKind::ConfigInvalid, "state and velocity lengths differ");
    if (q.empty() || q.size() % 2 != 0) throw Error(ErrorKind::ConfigInvalid, "chain length must be even and positive");
}

LatticeState zero_state(const DimerParams& p, int n, Coordinate coordinate, long first_index) {
    LatticeState s;
    s.params = p;
    s.coordinate = coordinate;
    s.first_index = first_index;
    s.q.assign(n, 0.0);
    s.v.assign(n, 0.0);
    s.validate();
    return s;
}

std::vector<double> strains(const LatticeState& s) {
    if (s.coordinate == Coordinate::RelativeDisplacement) return s.q;
    const int n = s.size();
    std::vector<double> r(n);
    for (int i = 0; i + 1 < n; ++i) r[i] = s.q[i + 1] - s.q[i];
    r[n - 1] = s.q[0] + s.offset - s.q[n - 1];
    return r;
}

std::vector<double> lattice_rhs(const LatticeState& s) {
    s.validate();
    const int n = s.size();
    const auto f = forces(s, strains(s));
    std::vector<double> a(n);
    if (s.coordinate == Coordinate::Position) {
        for (int i = 0; i < n; ++i) a[i] = (f[i] - f[wrap(i - 1, n)]) / s.params.mass(s.parity(i));
    } else {
        for (int i = 0; i < n; ++i) {
            const int ip = wrap(i + 1, n);
            const int im = wrap(i - 1, n);
            a[i] = (f[ip] - f[i]) / s.params.mass(s.parity(ip)) - (f[i] - f[im]) / s.params.mass(s.parity(i));
        }
    }
    return a;
}

LatticeState to_position(const LatticeState& s) {
    if (s.coordinate == Coordinate::Position) return s;
    return position_from_strains(s.params, s.q, s.v, s.first_index, s.t);
}

LatticeState to_relative(const LatticeState& s) {
    if (s.coordinate == Coordinate::RelativeDisplacement) return s;
    LatticeState out = s;
    out.coordinate = Coordinate::RelativeDisplacement;
    out.q = strains(s);
    const int n = s.size();
    for (int i = 0; i < n; ++i) out.v[i] = s.v[wrap(i + 1, n)] - s.v[i];
    out.offset = 0.0;
    return out;
}

double energy(const LatticeState& s) {
    const LatticeState pos = to_position(s);
    const auto r = strains(pos);
    double h = 0.0;
    for (int i = 0; i < pos.size(); ++i) {
        const Parity par = pos.parity(i);
        h += 0.5 * pos.params.mass(par) * pos.v[i] * pos.v[i] + pos.params.potential(par, r[i]);
    }
    return h;
}

SimTrace integrate(const LatticeState& state0, double dt, double T, const IntegrateOptions& opt) {
    if (!(dt > 0.0) || !(T >= 0.0)) throw Error(ErrorKind::ConfigInvalid, "dt must be positive and T nonnegative");
    if (opt.snapshots < 1) throw Error(ErrorKind::ConfigInvalid, "at least one snapshot is required");
    const long nsteps = static_cast<long>(std::ceil(T / dt - 1e-12));
    const double h = nsteps > 0 ? T / nsteps : dt;
    Stepper st(state0, h, opt.blowup);
    SimTrace trace;
    trace.params = state0.params;
    trace.first_index = state0.first_index;
    auto r0 = strains(state0);
    trace.snapshots.push_back({state0.t, r0, r0});
    trace.energy_drift.push_back(0.0);
    std::vector<double> env(r0.size(), -std::numeric_limits<double>::infinity());
    long next_k = 1;
    for (long s = 1; s <= nsteps; ++s) {
        st.step();
        auto r = strains(st.state());
        for (std::size_t i = 0; i < r.size(); ++i) env[i] = std::max(env[i], r[i]);
        const long target = static_cast<long>(std::llround(static_cast<double>(next_k) * nsteps / opt.snapshots));
        if (s >= target && next_k <= opt.snapshots) {
            trace.snapshots.push_back({st.state().t, std::move(r), env});
            trace.energy_drift.push_back(st.drift());
            std::fill(env.begin(), env.end(), -std::numeric_limits<double>::infinity());
            while (next_k <= opt.snapshots &&
                   std::llround(static_cast<double>(next_k) * nsteps / opt.snapshots) <= s)
                ++next_k;
        }
    }
    trace.max_energy_drift = st.max_drift();
    trace.final_state = st.state();
    return trace;
}

LatticeState init_from_strain(const DimerParams& p, const StrainProfile& rho, const StrainProfile& drho, double c,
                              int n, long first_index, double x0, Coordinate coordinate) {
    if (n <= 0 || n % 2 != 0) throw Error(ErrorKind::ConfigInvalid, "chain length must be even and positive");
    std::vector<double> r(n);
    std::vector<double> rdot(n);
    for (int i = 0; i < n; ++i) {
        const long j = first_index + i;
        const Parity par = parity_of(j);
        const double x = static_cast<double>(j) - x0;
        r[i] = rho(par, x);
        rdot[i] = -c * drho(par, x);
    }
    if (coordinate == Coordinate::RelativeDisplacement) {
        LatticeState s;
        s.params = p;
        s.coordinate = coordinate;
        s.first_index = first_index;
        s.q = std::move(r);
        s.v = std::move(rdot);
        return s;
    }
    return position_from_strains(p, r, rdot, first_index, 0.0);
}

LatticeState init_from_profile(const FourierProfile& prof, int n, double x0, Coordinate coordinate) {
    if (0.5 * n > prof.L + 1e-9)
        throw Error(ErrorKind::DomainTooSmall, "chain of " + std::to_string(n) + " sites exceeds the profile period " +
                                                   std::to_string(2.0 * prof.L));
    auto rho = [&](Parity par, double x) { return prof.eval(par == Parity::Odd ? 1 : 2, x); };
    auto drho = [&](Parity par, double x) { return prof.eval(par == Parity::Odd ? 1 : 2, x, 1); };
    return init_from_strain(prof.params, rho, drho, prof.c, n, -n / 2, x0, coordinate);
}

LatticeState init_from_leading(const LeadingProfile& prof, const DimerParams& p, double epsilon, double c, int n,
                               double x0, Coordinate coordinate) {
    const int m = static_cast<int>(prof.grid.size());
    if (m < 4 || static_cast<int>(prof.values_odd.size()) != m || static_cast<int>(prof.values_even.size()) != m)
        throw Error(ErrorKind::ConfigInvalid, "leading profile needs matching grid and values");
    if (!(epsilon > 0.0)) throw Error(ErrorKind::ConfigInvalid, "epsilon must be positive");
    const double h = prof.grid[1] - prof.grid[0];
    const double half = 0.5 * m * h;
    for (int i = 0; i < m; ++i)
        if (std::abs(prof.grid[i] - (-half + i * h)) > 1e-9 * (1.0 + half))
            throw Error(ErrorKind::ConfigInvalid, "leading profile grid must be uniform and of the form -H + i h");
    FourierProfile fp;
    fp.params = p;
    fp.c = c;
    fp.L = half / epsilon;
    fp.modes = m / 2;
    fp.rho1 = prof.values_odd;
    fp.rho2 = prof.values_even;
    fp.finalize();
    return init_from_profile(fp, n, x0, coordinate);
}

TravelingReport traveling_error(const SimTrace& trace, const StrainProfile& reference, double c, double peak,
                                double x0) {
    if (trace.snapshots.size() < 2) throw Error(ErrorKind::ConfigInvalid, "traveling error needs two snapshots");
    if (!(peak > 0.0)) throw Error(ErrorKind::ConfigInvalid, "reference peak must be positive");
    TravelingReport rep;
    for (const auto& snap : trace.snapshots) {
        auto misfit = [&](double s) {
            double e = 0.0;
            for (std::size_t i = 0; i < snap.r.size(); ++i) {
                const long j = trace.first_index + static_cast<long>(i);
                e = std::max(e, std::abs(snap.r[i] - reference(parity_of(j), static_cast<double>(j) - x0 - s)));
            }
            return e;
        };
        const double center = c * snap.t;
        constexpr double kSpan = 2.0;
        constexpr int kScan = 80;
        double best = center;
        double best_val = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= kScan; ++k) {
            const double s = center - kSpan + 2.0 * kSpan * k / kScan;
            const double v = misfit(s);
            if (v < best_val) {
                best_val = v;
                best = s;
            }
        }
        const double step = 2.0 * kSpan / kScan;
        const auto r = boost::math::tools::brent_find_minima(misfit, best - step, best + step, 40);
        const double s = r.second < best_val ? r.first : best;
        rep.shifts.push_back(s);
        rep.errors.push_back(std::min(r.second, best_val) / peak);
    }
    rep.shape_error = *std::max_element(rep.errors.begin(), rep.errors.end());
    const auto& last = trace.snapshots.back();
    rep.fitted_speed = last.t > 0.0 ? rep.shifts.back() / last.t : 0.0;
    return rep;
}

TravelingReport traveling_error(const SimTrace& trace, const FourierProfile& reference, double x0) {
    const double peak = std::max(*std::max_element(reference.rho1.begin(), reference.rho1.end()),
                                 *std::max_element(reference.rho2.begin(), reference.rho2.end()));
    auto rho = [&](Parity par, double x) { return reference.eval(par == Parity::Odd ? 1 : 2, x); };
    return traveling_error(trace, rho, reference.c, peak, x0);
}

std::vector<double> stegoton_ratio(const SimTrace& trace, double half_width) {
    std::vector<double> out;
    for (const auto& snap : trace.snapshots) {
        const auto& e = snap.envelope.empty() ? snap.r : snap.envelope;
        const int n = static_cast<int>(e.size());
        const int imax = static_cast<int>(std::max_element(e.begin(), e.end()) - e.begin());
        double odd = -std::numeric_limits<double>::infinity();
        double even = -std::numeric_limits<double>::infinity();
        const int w = static_cast<int>(std::floor(half_width));
        for (int d = -w; d <= w; ++d) {
            const int i = wrap(imax + d, n);
            const double v = e[i];
            if (parity_of(trace.first_index + i) == Parity::Odd)
                odd = std::max(odd, v);
            else
                even = std::max(even, v);
        }
        out.push_back(odd / even);
    }
    return out;
}

std::vector<KdvRow> kdv_residual_scan(const std::vector<double>& eps_list, const DimerParams& p,
                                      const KdvOptions& opt) {
    if (eps_list.empty()) throw Error(ErrorKind::ConfigInvalid, "epsilon list must be nonempty");
    if (!(opt.T0 > 0.0) || !(opt.dt > 0.0) || opt.stride < 1 || opt.sites < 4 || opt.sites % 2 != 0)
        throw Error(ErrorKind::ConfigInvalid, "invalid KdV scan options");
    ProfileSpec spec;
    spec.params = p;
    switch (p.kind()) {
        case DimerKind::Mass:
        case DimerKind::Monatomic:
            spec.dimer_kind = DimerKind::Mass;
            break;
        case DimerKind::Spring:
            spec.dimer_kind = DimerKind::Spring;
            break;
        case DimerKind::General:
            throw Error(ErrorKind::ConfigInvalid, "the KdV scan needs a mass or spring dimer; got " + p.describe());
    }
    std::vector<KdvRow> rows;
    for (double eps : eps_list) {
        KdvRow row;
        row.epsilon = eps;
        if (eps == 0.0) {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }
        if (!(eps > 0.0)) throw Error(ErrorKind::ConfigInvalid, "epsilon must be nonnegative");
        spec.epsilon = eps;
        const double c = wave_speed(spec);
        const double q = decay_rate(spec);
        const double e2 = eps * eps;
        auto rho = [&](Parity par, double x) { return e2 * sech2_core(spec, eps * x, par); };
        auto drho = [&](Parity par, double x) {
            const double y = 0.5 * q * eps * x;
            return -e2 * q * eps * std::tanh(y) * sech2_core(spec, eps * x, par);
        };
        const long first = -opt.sites / 4;
        const LatticeState s0 = init_from_strain(p, rho, drho, c, opt.sites, first);
        const double T = opt.T0 / (eps * e2);
        const long nsteps = static_cast<long>(T / opt.dt);
        Stepper st(s0, opt.dt, 1e6);
        double disc = 0.0;
        for (long s = 1; s <= nsteps; ++s) {
            st.step();
            if (s % opt.stride != 0 && s != nsteps) continue;
            const auto r = strains(st.state());
            const double t = st.state().t;
            for (int i = 0; i < opt.sites; ++i) {
                const long j = first + i;
                disc = std::max(disc, std::abs(r[i] - rho(parity_of(j), static_cast<double>(j) - c * t)));
            }
        }
        row.T = T;
        row.discrepancy = disc;
        row.ratio = disc / e2;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fput
