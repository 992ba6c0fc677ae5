#pragma once

#include <string>
#include <vector>

namespace fput {

// Lattice sites with odd index j carry mass 1 and the spring V_1 to their right;
// even sites carry mass 1/w and the spring V_2.  Profiles indexed "1" belong to
// odd sites and profiles indexed "2" to even sites.
enum class Parity { Odd, Even };

inline Parity parity_of(long j) { return (j % 2 != 0) ? Parity::Odd : Parity::Even; }

enum class DimerKind { Monatomic, Mass, Spring, General };

const char* to_string(DimerKind kind);

struct DimerParams {
    double kappa = 1.0;
    double beta = 1.0;
    double w = 2.0;
    // Force polynomials V_i'(r) = sum_n force_i[n] r^{n+1}.
    std::vector<double> force1{1.0, 1.0};
    std::vector<double> force2{1.0, 1.0};
    bool allow_monatomic = false;

    // Quadratic springs V_1'(r) = r + r^2, V_2'(r) = kappa r + beta r^2.
    static DimerParams make(double kappa, double beta, double w, bool allow_monatomic = false);

    void validate() const;
    DimerKind kind() const;

    double mass(Parity p) const { return p == Parity::Odd ? 1.0 : 1.0 / w; }
    double force(Parity p, double r) const;
    double force_derivative(Parity p, double r) const;
    double potential(Parity p, double r) const;
    // Superquadratic remainder V_i'(r) - (linear + quadratic part).
    double force_remainder(Parity p, double r) const;
    // Second derivative of the force at 0, i.e. V_i'''(0).
    double force_curvature(Parity p) const;

    std::string describe() const;
};

}  // namespace fput
