#include "fput/chebyshev.hpp"

#include <stdexcept>

namespace fput {

QuadratureRule clenshaw_curtis(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("Clenshaw-Curtis order must be even and at least 2");
    QuadratureRule rule;
    rule.nodes.resize(n + 1);
    rule.weights.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double theta = std::numbers::pi * j / n;
        rule.nodes[j] = std::cos(theta);
        double s = 0.0;
        for (int k = 1; k <= n / 2; ++k) {
            const double b = (2 * k == n) ? 1.0 : 2.0;
            s += b / (4.0 * k * k - 1.0) * std::cos(2.0 * k * theta);
        }
        const double cj = (j == 0 || j == n) ? 1.0 : 2.0;
        rule.weights[j] = cj / n * (1.0 - s);
    }
    return rule;
}

const QuadratureRule& default_rule() {
    static const QuadratureRule rule = clenshaw_curtis(64);
    return rule;
}

}  // namespace fput
