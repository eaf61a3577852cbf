#pragma once

#include <vector>

namespace vvgamma {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Laguerre rule for integrals against e^{-x} on (0, inf).
/// Newton iteration on the three-term recurrence; deterministic.
QuadratureRule gauss_laguerre(int n);

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre_01(int n);

} // namespace vvgamma
