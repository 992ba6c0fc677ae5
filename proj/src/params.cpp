#include "fput/params.hpp"

#include <cmath>
#include <sstream>

#include "fput/error.hpp"

namespace fput {

const char* to_string(DimerKind kind) {
    switch (kind) {
        case DimerKind::Monatomic: return "monatomic";
        case DimerKind::Mass: return "mass";
        case DimerKind::Spring: return "spring";
        case DimerKind::General: return "general";
    }
    return "unknown";
}

DimerParams DimerParams::make(double kappa, double beta, double w, bool allow_monatomic) {
    DimerParams p;
    p.kappa = kappa;
    p.beta = beta;
    p.w = w;
    p.force1 = {1.0, 1.0};
    p.force2 = {kappa, beta};
    p.allow_monatomic = allow_monatomic;
    return p;
}

void DimerParams::validate() const {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw Error(ErrorKind::ConfigInvalid, "kappa must be a positive finite number");
    if (!(w > 0.0) || !std::isfinite(w))
        throw Error(ErrorKind::ConfigInvalid, "w must be a positive finite number");
    if (!std::isfinite(beta)) throw Error(ErrorKind::ConfigInvalid, "beta must be finite");
    if (!(std::max(kappa, w) > 1.0) && !allow_monatomic)
        throw Error(ErrorKind::ConfigInvalid,
                    "max(kappa, w) must exceed 1 unless the monatomic case is explicitly allowed");
    if (force1.empty() || force1[0] != 1.0)
        throw Error(ErrorKind::ConfigInvalid, "force1 must start with the linear coefficient 1");
    if (force2.empty() || force2[0] != kappa)
        throw Error(ErrorKind::ConfigInvalid, "force2 must start with the linear coefficient kappa");
}

DimerKind DimerParams::kind() const {
    const bool same_springs = force1 == force2;
    if (same_springs && w == 1.0) return DimerKind::Monatomic;
    if (same_springs) return DimerKind::Mass;
    if (w == 1.0) return DimerKind::Spring;
    return DimerKind::General;
}

namespace {

const std::vector<double>& coeffs(const DimerParams& p, Parity parity) {
    return parity == Parity::Odd ? p.force1 : p.force2;
}

}  // namespace

double DimerParams::force(Parity p, double r) const {
    const auto& a = coeffs(*this, p);
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + *it;
    return acc * r;
}

double DimerParams::force_derivative(Parity p, double r) const {
    const auto& a = coeffs(*this, p);
    double acc = 0.0;
    for (std::size_t n = a.size(); n-- > 0;) acc = acc * r + static_cast<double>(n + 1) * a[n];
    return acc;
}

double DimerParams::potential(Parity p, double r) const {
    const auto& a = coeffs(*this, p);
    double acc = 0.0;
    for (std::size_t n = a.size(); n-- > 0;) acc = acc * r + a[n] / static_cast<double>(n + 2);
    return acc * r * r;
}

double DimerParams::force_remainder(Parity p, double r) const {
    const auto& a = coeffs(*this, p);
    double acc = 0.0;
    for (std::size_t n = a.size(); n-- > 2;) acc = acc * r + a[n];
    return acc * r * r * r;
}

double DimerParams::force_curvature(Parity p) const {
    const auto& a = coeffs(*this, p);
    return a.size() > 1 ? 2.0 * a[1] : 0.0;
}

std::string DimerParams::describe() const {
    std::ostringstream os;
    os << "kappa=" << kappa << " beta=" << beta << " w=" << w << " (" << to_string(kind()) << ")";
    return os.str();
}

}  // namespace fput
