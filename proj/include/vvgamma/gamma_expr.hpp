#pragma once

#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "vvgamma/poly.hpp"
#include "vvgamma/rational.hpp"

namespace vvgamma {

/// Pole test for the classical Gamma function of level m,
/// Gamma_m(z) = pi^{m(m-1)/4} prod_{nu=0}^{m-1} Gamma(z - nu/2):
/// a pole occurs iff z - nu/2 is a nonpositive integer for some nu.
bool gamma_m_has_pole(int rank_m, const BigRational& z);

/// log |Gamma_m(z)| together with the sign of Gamma_m(z).
/// Throws PoleError at poles.
std::pair<double, int> log_gamma_m(int rank_m, double z);

/// Numeric value of Gamma_m(z); throws PoleError at poles.
double gamma_m_numeric(int rank_m, double z);

/// Symbolic value  rat(s) * Gamma_m(s + shift) * (4pi)^{alpha*s + beta}.
///
/// Canonical form keeps shift in {0, 1/2} by absorbing integer shifts into
/// the rational part through the functional equation
/// Gamma_m(z+1) = prod_{nu=0}^{m-1} (z - nu/2) * Gamma_m(z).
/// Two expressions are equal iff their canonical fields coincide.
class GammaExpr {
public:
    GammaExpr() : rank_m_(2), rat_(1) {}
    GammaExpr(int rank_m, RationalFunction rat, HalfInteger shift,
              BigRational four_pi_alpha = BigRational(0),
              BigRational four_pi_beta = BigRational(0));

    /// Gamma_m(s) itself.
    static GammaExpr gamma_m(int rank_m) {
        return GammaExpr(rank_m, RationalFunction(1), HalfInteger(0));
    }

    int rank_m() const { return rank_m_; }
    const RationalFunction& rat() const { return rat_; }
    const HalfInteger& shift() const { return shift_; }
    const BigRational& four_pi_alpha() const { return alpha_; }
    const BigRational& four_pi_beta() const { return beta_; }

    bool is_zero() const { return rat_.is_zero(); }

    /// Returns the canonical representative (shift in {0, 1/2}); value-preserving.
    GammaExpr canonicalized() const;

    /// Exact sum.  Throws IncompatibleExpr when the canonical shifts or the
    /// (4pi)-exponents differ (such sums are not representable).
    friend GammaExpr add(const GammaExpr& a, const GammaExpr& b);

    GammaExpr operator-() const;
    GammaExpr& operator*=(const RationalFunction& f);
    GammaExpr& operator*=(const BigRational& c);
    friend GammaExpr operator*(GammaExpr e, const RationalFunction& f) { e *= f; return e; }
    friend GammaExpr operator*(GammaExpr e, const BigRational& c) { e *= c; return e; }
    friend GammaExpr operator*(const BigRational& c, GammaExpr e) { e *= c; return e; }

    /// Substitution s -> s + c (c a half-integer so the Gamma argument class
    /// is preserved); result is canonicalized.
    GammaExpr shifted(const HalfInteger& c) const;

    /// Value-preserving re-presentation with the given Gamma shift, which
    /// must differ from the canonical one by an integer.  Needed when a
    /// limit is taken at a point where only this presentation keeps the
    /// Gamma factor regular.
    GammaExpr with_shift(const HalfInteger& target) const;

    /// Multiplies by (4pi)^{da*s + db}.
    GammaExpr scaled_four_pi(const BigRational& da, const BigRational& db) const;

    /// Equality of canonical forms (decidable, exact).
    friend bool operator==(const GammaExpr& a, const GammaExpr& b);
    friend bool operator!=(const GammaExpr& a, const GammaExpr& b) { return !(a == b); }

    /// Numeric value at s0.  Throws PoleError at poles of the rational part
    /// or of Gamma_m(s0 + shift); no limits are taken (see limit_at).
    double eval_numeric(double s0) const;

    std::string to_string() const;

    nlohmann::json to_json() const;
    static GammaExpr from_json(const nlohmann::json& j);

private:
    int rank_m_;
    RationalFunction rat_;
    HalfInteger shift_;
    BigRational alpha_;
    BigRational beta_;
};

/// Exact value coeff * Gamma_m(gamma_arg) * (4pi)^{four_pi_exp}, used for
/// evaluations of GammaExpr at exact rational points.
struct ExactGammaValue {
    BigRational coeff;
    int rank_m = 2;
    BigRational gamma_arg;
    BigRational four_pi_exp;

    friend bool operator==(const ExactGammaValue& a, const ExactGammaValue& b) {
        if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
        return a.coeff == b.coeff && a.rank_m == b.rank_m &&
               a.gamma_arg == b.gamma_arg && a.four_pi_exp == b.four_pi_exp;
    }
    friend bool operator!=(const ExactGammaValue& a, const ExactGammaValue& b) { return !(a == b); }

    double to_double() const;
    std::string to_string() const;
};

/// Exact limit of e at s0: the rational part may have a removable
/// singularity, which is cancelled exactly.  Returns coeff = 0 when the
/// numerator vanishes to higher order than the denominator.
/// Throws DivergesError when the denominator order is higher, and
/// PoleError when Gamma_m(s0 + shift) has a pole.
ExactGammaValue limit_at(const GammaExpr& e, const BigRational& s0);

/// Exact evaluation at a regular point (no limit taken on the rational part).
ExactGammaValue value_at(const GammaExpr& e, const BigRational& s0);

} // namespace vvgamma
