#pragma once

#include "fput/params.hpp"
#include "fput/state_space.hpp"

namespace fput {

enum class Route { Closed, Oracle };

// J(U; c) = c^2 (xi1 + xi2/w) - int_{-1}^0 [V1'(P2(s+1) - P1(s)) + V2'(P1(s+1) - P2(s))] ds.
double first_integral_J(const RealState& u, const DimerParams& p, double c);

// Directional derivative DJ(U; c) dU.
double dJ_direction(const RealState& u, const RealState& du, const DimerParams& p, double c);

// D^2 J(0)[U, V] = -int_{-1}^0 [V1'''(0) dR1(U) dR1(V) + V2'''(0) dR2(U) dR2(V)] ds.
double d2J_zero(const RealState& u, const RealState& v, const DimerParams& p);

// c_mu = (c_s^{-2} - mu)^{-1/2}; MuOutOfRange unless 0 <= mu <= 1/(2 c_s^2).
double speed_from_mu(const DimerParams& p, double mu);

// J_mu(U) = w (1 + kappa) a_{-4} J(U; c_mu).
double rescaled_J(const RealState& u, const DimerParams& p, double mu);

// Linear part of (J_mu - J_0)/mu: w (1+kappa) a_{-4} c_s^4 / (1 - c_s^2 mu) (xi1 + xi2/w).
double jstar(const RealState& u, const DimerParams& p, double mu);

// Second finite difference (Richardson-extrapolated) of J_0 at 0 in the directions U, V.
double d2J0_finite_difference(const RealState& u, const RealState& v, const DimerParams& p, double h = 1e-3);

double lfrak0(const DimerParams& p, Route route);
double qfrak0(const DimerParams& p, Route route);

struct NondegenReport {
    DimerParams params;
    double lfrak0_closed = 0.0;
    double lfrak0_oracle = 0.0;
    double qfrak0_closed = 0.0;
    double qfrak0_oracle = 0.0;
    // lfrak0_closed / lfrak0_oracle.
    double normalization_ratio = 0.0;
    // D^2 J_0(0)[chi1, chi1] from the bilinear formula and from finite differences.
    double d2j0_formula = 0.0;
    double d2j0_finite_difference = 0.0;
    // Core coefficient -3 Lfrak0 / (2 Qfrak0) and the long-wave value 3w/(1+w) (kappa = 1).
    double core_coefficient_from_constants = 0.0;
    double core_coefficient_theorem = 0.0;
};

NondegenReport nondegeneracy_report(const DimerParams& p);

}  // namespace fput
