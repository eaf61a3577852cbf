#pragma once

#include <array>
#include <string>

#include "vvgamma/gamma_expr.hpp"
#include "vvgamma/report.hpp"

namespace vvgamma {

/// Y-dependence shape of one Maass-shift term.
enum class MaassShape {
    DetYInvScalar,     // det(Y)^{-1} * identity
    TraceTYDetYInv,    // tr(TY) det(Y)^{-1} * identity
    DetTScalar,        // det(T) * identity
    DetTTYInv,         // det(T) * (TY)^{-1}
};

struct MaassTerm {
    MaassShape shape;
    BigRational coeff;   // rational scalar
    int four_pi_power;   // times (4pi)^power
};

/// The four terms of the Maass shift applied to e^{2 pi i tr(TZ)}:
///   (k+1)(k-1/2) det(Y)^{-1} 1 - 4pi (k-1/2) tr(TY) det(Y)^{-1} 1
///   + (4pi)^2 det(T) 1 - 4pi det(T) (TY)^{-1},
/// all carrying the common factor e^{2 pi i tr(TZ)}.
struct MaassTermSet {
    long k = 1;
    std::array<MaassTerm, 4> terms;
};

MaassTermSet maass_terms(long k);

/// The four Sturm integrals for weight (k+3, k+2); each carries
/// (4pi)^{-2(s+k)}.
struct SturmTermSet {
    long k = 1;
    GammaExpr t1, t2, t3, t4;
};

/// Terms as displayed in the closed forms.
SturmTermSet sturm_terms(long k);

/// The same four terms re-derived from the monomial integrals plus the
/// exponential scaling law (never hard-coded).
SturmTermSet sturm_terms_rederived(long k);

/// Exact equality of the display route and the rederivation route.
Report sturm_two_route_check(long k_max);

/// The scalar c(rho) with C(rho) = c(rho) 1_2 for weight (kappa+1, kappa):
/// (4pi)^{3-(2kappa+1)} (kappa - 3/2) Gamma_2(kappa - 3/2).
/// Throws DomainError when the Gamma factor has a pole (kappa < 3).
ExactGammaValue c_rho_scalar(long kappa);

/// Cross-check of the display against the general normalization
/// (4pi)^{(m+1) - sum l_j} Gamma(rho x det^{-(m+1)/2}) specialized through
/// the alternating-power formula; exact for each kappa in [3, kappa_max].
Report c_rho_two_route_check(long kappa_max);

/// t1 + t2 + t3 - t4; canonicalizes to
/// (4pi)^{-2(s+k)} (s^2 - s/2)/(s+k-1) Gamma_2(s+k+1/2).
GammaExpr combine_b(long k);

/// Exact rational multiple of pi^pi_power.
struct PiMultiple {
    BigRational coeff;
    long pi_power = 0;

    bool is_zero() const { return coeff.is_zero(); }
    friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
        if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
        return a.coeff == b.coeff && a.pi_power == b.pi_power;
    }
    friend bool operator!=(const PiMultiple& a, const PiMultiple& b) { return !(a == b); }

    /// Canonical form like "-8*pi^2", "3/2*pi", "5", "0".
    std::string to_string() const;
    double to_double() const;
};

/// Coefficient of det(T)^{-3/2} a(T) in lim_{s->0} b(T,s), following the
/// limit display: (4pi)^2 lim_{s->0} (s^2 - s/2)/(s+k-1).
/// Zero for k >= 2; -(4pi)^2/2 = -8 pi^2 at k = 1.
PiMultiple phantom_limit(long k);

/// Dichotomy over 1 <= k <= k_max: the limit is nonzero iff k = 1.
/// The k = 1 entry records the weight (4,3) and Harish-Chandra
/// parameter (3,1).
Report theorem_verdict(long k_max);

/// Numerator of the combined rational part is exactly s^2 - s/2 after
/// clearing the (s+k-1) denominator, for each k <= k_max.
Report combine_b_numerator_check(long k_max);

} // namespace vvgamma
