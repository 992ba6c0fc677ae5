#pragma once

#include <functional>
#include <vector>

#include "fput/beale.hpp"
#include "fput/params.hpp"
#include "fput/profiles.hpp"

namespace fput {

// Periodic dimer chain of even length n.  Element i is lattice site j = first_index + i.
// Position coordinates satisfy u_{j+n} = u_j + offset; relative displacements r_j = u_{j+1} - u_j
// are plain periodic.
struct LatticeState {
    DimerParams params;
    Coordinate coordinate = Coordinate::Position;
    std::vector<double> q;
    std::vector<double> v;
    double t = 0.0;
    double offset = 0.0;
    long first_index = 0;

    int size() const { return static_cast<int>(q.size()); }
    Parity parity(int i) const { return parity_of(first_index + i); }
    // Throws ConfigInvalid unless q and v have the same even length.
    void validate() const;
};

LatticeState zero_state(const DimerParams& p, int n, Coordinate coordinate = Coordinate::Position,
                        long first_index = 0);

// Accelerations: Position a_j = (V'_j(u_{j+1} - u_j) - V'_{j-1}(u_j - u_{j-1})) / m_j;
// RelativeDisplacement r''_j = (V'_{j+1}(r_{j+1}) - V'_j(r_j)) / m_{j+1} - (V'_j(r_j) - V'_{j-1}(r_{j-1})) / m_j.
std::vector<double> lattice_rhs(const LatticeState& s);

// Relative displacements of the state (copied for RelativeDisplacement states).
std::vector<double> strains(const LatticeState& s);

// sum 1/2 m_j u'_j^2 + sum V_j(r_j).  For relative-displacement states the velocities are
// reconstructed with zero total momentum.
double energy(const LatticeState& s);

// Converts between coordinates; position velocities get zero total momentum and u at element 0 is 0.
LatticeState to_position(const LatticeState& s);
LatticeState to_relative(const LatticeState& s);

struct Snapshot {
    double t = 0.0;
    // Relative displacements r_j, j = first_index + i.
    std::vector<double> r;
    // Per-site maximum of r_j over the steps since the previous snapshot (r itself for the first).
    std::vector<double> envelope;
};

struct SimTrace {
    DimerParams params;
    long first_index = 0;
    std::vector<Snapshot> snapshots;
    // Relative energy drift |H(t) - H(0)| / |H(0)| at each snapshot, and its maximum over all steps.
    std::vector<double> energy_drift;
    double max_energy_drift = 0.0;
    LatticeState final_state;
};

struct IntegrateOptions {
    // Number of snapshots after the initial one, spread evenly over [0, T].
    int snapshots = 20;
    double blowup = 1e6;
};

// Velocity-Verlet integration from state0 over [0, T] with step close to dt (T / ceil(T / dt)).
SimTrace integrate(const LatticeState& state0, double dt, double T, const IntegrateOptions& opt = {});

// Strain-valued profile rho(parity, x) and its x-derivative.
using StrainProfile = std::function<double(Parity, double)>;

// r_j = rho(j - x0), r'_j = -c rho'(j - x0) on a chain of n sites starting at first_index.
LatticeState init_from_strain(const DimerParams& p, const StrainProfile& rho, const StrainProfile& drho, double c,
                              int n, long first_index, double x0 = 0.0,
                              Coordinate coordinate = Coordinate::Position);

// Chain of n sites centered on the profile: first_index = -n/2.  Derivatives are spectral.
// DomainTooSmall if the chain does not fit in the profile period.
LatticeState init_from_profile(const FourierProfile& prof, int n, double x0 = 0.0,
                               Coordinate coordinate = Coordinate::Position);

// Leading-order profile sampled on a uniform periodic grid X_i = -H + i h in the long-wave
// variable X = eps x; the lattice sees rho(j) at X = eps j.
LatticeState init_from_leading(const LeadingProfile& prof, const DimerParams& p, double epsilon, double c, int n,
                               double x0 = 0.0, Coordinate coordinate = Coordinate::Position);

struct TravelingReport {
    // max over snapshots of the sup misfit against the shifted reference, over the reference peak.
    double shape_error = 0.0;
    std::vector<double> errors;
    std::vector<double> shifts;
    // Shift of the last snapshot divided by its time.
    double fitted_speed = 0.0;
};

// Fits a shift s(t) near c t per snapshot minimizing sup_j |r_j(t) - rho(j - x0 - s)|.
TravelingReport traveling_error(const SimTrace& trace, const StrainProfile& reference, double c, double peak,
                                double x0 = 0.0);
TravelingReport traveling_error(const SimTrace& trace, const FourierProfile& reference, double x0 = 0.0);

// Ratio of the largest odd-site strain to the largest even-site strain near the core, per
// snapshot.  Uses the per-site envelopes, so each sublattice sees the passing peak; sites
// farther than `half_width` from the envelope maximum are ignored.
std::vector<double> stegoton_ratio(const SimTrace& trace, double half_width = 10.0);

struct KdvOptions {
    double T0 = 1.0;
    double dt = 0.005;
    int sites = 800;
    // Discrepancy is sampled every `stride` steps.
    int stride = 20;
};

struct KdvRow {
    double epsilon = 0.0;
    double discrepancy = 0.0;
    double ratio = 0.0;
    double T = 0.0;
    bool skipped = false;
};

// Long-wave sech^2 initial data at eps, evolved to T0 eps^{-3}; discrepancy against the rigid
// translate of the initial core at speed c_eps.  eps = 0 rows are skipped.
std::vector<KdvRow> kdv_residual_scan(const std::vector<double>& eps_list, const DimerParams& p,
                                      const KdvOptions& opt = {});

}  // namespace fput
