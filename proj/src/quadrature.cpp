#include "vvgamma/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace vvgamma {

namespace {
const double kPi = 3.14159265358979323846264338327950288;
const int kMaxIter = 64;
} // namespace

QuadratureRule gauss_laguerre(int n) {
    if (n < 1 || n > 2048) {
        throw std::invalid_argument("gauss_laguerre: order must be in [1, 2048]");
    }
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // The recurrence values of L_n grow like e^{x/2} at the far nodes, which
    // overflows double near n ~ 300; long double carries the range needed
    // up to the 2048 cap.  Weights below the double range round to zero and
    // those tail nodes contribute nothing to any integrand we evaluate.
    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        // Stroud-style initial guesses, then Newton on L_n.
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) *
                 (z - static_cast<long double>(rule.nodes[static_cast<std::size_t>(i - 2)]));
        }
        long double pp = 0.0L;
        long double p2 = 0.0L;
        for (int it = 0; it < kMaxIter; ++it) {
            long double p1 = 1.0L;
            p2 = 0.0L;
            for (int j = 1; j <= n; ++j) {
                long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L - z) * p2 - (j - 1.0L) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            long double z1 = z;
            z = z1 - p1 / pp;
            if (fabsl(z - z1) <= 1e-18L * std::max(1.0L, fabsl(z))) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(z);
        rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(-1.0L / (pp * n * p2));
    }
    return rule;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < kMaxIter; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

QuadratureRule gauss_legendre_01(int n) {
    QuadratureRule r = gauss_legendre(n);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        r.nodes[i] = 0.5 * (r.nodes[i] + 1.0);
        r.weights[i] *= 0.5;
    }
    return r;
}

} // namespace vvgamma
