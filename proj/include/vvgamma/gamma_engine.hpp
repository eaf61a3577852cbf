#pragma once

#include <vector>

#include "vvgamma/gamma_expr.hpp"
#include "vvgamma/gl2_rep.hpp"
#include "vvgamma/report.hpp"

namespace vvgamma {

/// One term  coeff * T11^p11 * T22^p22 * T12^p12 * det(T)^{-(s+n)} * poly(s).
struct DetTerm {
    BigRational coeff;
    int p11 = 0;
    int p22 = 0;
    int p12 = 0;
    int det_shift = 0;  // n in det(T)^{-(s+n)}
    Poly poly;
};

/// Derivative of det(T)^{-s} as a canonically sorted term list.  The
/// normalized partials are d_ij = ((1+delta_ij)/2) d/dT_ij.
class DetDerivative {
public:
    /// The underived function det(T)^{-s}.
    static DetDerivative seed();

    /// Builds from an explicit term list (merged and canonically sorted);
    /// lets tests state the closed forms of the derivative lemma directly.
    static DetDerivative from_terms(std::vector<DetTerm> terms);

    const std::vector<DetTerm>& terms() const { return terms_; }

    DetDerivative d11() const;
    DetDerivative d22() const;
    DetDerivative d12() const;

    /// Numeric evaluation at a symmetric positive definite T and real s.
    double eval(double t11, double t22, double t12, double s) const;

    /// Value at T = identity: sum of the polynomials of the T12-free terms.
    /// Terms with p12 > 0 drop out, the rest contribute coeff * poly.
    Poly at_identity() const;

    friend bool operator==(const DetDerivative& a, const DetDerivative& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const DetTerm& x = a.terms_[i];
            const DetTerm& y = b.terms_[i];
            if (x.coeff != y.coeff || x.p11 != y.p11 || x.p22 != y.p22 ||
                x.p12 != y.p12 || x.det_shift != y.det_shift || x.poly != y.poly) {
                return false;
            }
        }
        return true;
    }

private:
    void normalize();
    std::vector<DetTerm> terms_;
};

/// d11^(n1) d22^(n2) d12^(n3) (det(T)^{-s}), composed d12 first, then d22,
/// then d11.  At least one order must be positive.
DetDerivative det_derivative(int n1, int n2, int n3);

/// Gamma(st^[q] x det^s) = (-1)^q C_[q](-s) Gamma_m(s), the scalar acting on
/// the q-th alternating power; 1 <= q <= m.
GammaExpr gamma_alternating(int m, int q);

/// Integral of Y11^n1 Y22^n2 Y12^n3 det(Y)^s e^{-tr Y} dY_inv.
/// Zero for odd n3; otherwise a polynomial multiple of Gamma_2(s).
GammaExpr monomial_integral(int n1, int n2, int n3);

/// SO(2)-eigenvalue Gamma(r,k,s) of Gamma(rho_r x det^s) on V_k.
/// For k > floor(r/2) defined through the functional equation
/// Gamma(r,k,s) = Gamma(r,r-k,s).
GammaExpr gamma_rk(long r, long k);

/// The diagonal operator in the V_k basis for a general dominant weight,
/// via the twist rho_{(l1,l2)} = rho_{l1-l2} x det^{l2}.
struct GammaOperator {
    HighestWeight weight;
    HalfInteger shift;             // the det-twist l2 applied to s
    std::vector<GammaExpr> diag;   // V_k order, k = 0..r
};

GammaOperator gamma_operator(const HighestWeight& l);

/// For every nu with c_k(nu) != 0, integrates P_k(nu, Y) monomial by
/// monomial and checks exact agreement with gamma_rk(r, k).
Report gamma_rk_independence_check(long r, long k);

/// Verifies the matrix-space form of the symmetric-representation example:
/// integral of Y X Y det(Y)^s e^{-tr Y} dY_inv
///   = s(s+1) Gamma_2(s) X + (s/2) Gamma_2(s) X~  (X~ the adjugate).
Report symmetric_matrix_form_check();

struct InvertibilityVerdict {
    bool invertible = false;
    std::vector<long> vanishing;  // k-indices whose polynomial part vanishes
};

/// Evaluates the polynomial part of every diagonal entry exactly at s0.
/// The verdict concerns the polynomial factors; the common Gamma_2 factor
/// is not evaluated here.
InvertibilityVerdict invertibility_report(const HighestWeight& l, const BigRational& s0);

/// Identity suite over the closed forms: palindrome, divisibility, the two
/// Gamma(r,0,s) closed forms, and the trace route, for r <= r_max.
Report gamma_identity_suite(long r_max);

} // namespace vvgamma
