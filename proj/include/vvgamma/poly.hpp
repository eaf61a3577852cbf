#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "vvgamma/rational.hpp"

namespace vvgamma {

/// Univariate polynomial over BigRational, coefficients stored in
/// ascending degree.  The zero polynomial has an empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(BigRational constant) { coeffs_.push_back(std::move(constant)); trim(); }  // NOLINT
    Poly(long constant) : Poly(BigRational(constant)) {}                            // NOLINT
    explicit Poly(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { trim(); }
    Poly(std::initializer_list<BigRational> ascending) : coeffs_(ascending) { trim(); }

    /// The monomial x.
    static Poly x() { return Poly({BigRational(0), BigRational(1)}); }
    /// x + c.
    static Poly x_plus(const BigRational& c) { return Poly({c, BigRational(1)}); }
    /// prod_{l=0}^{n-1} (x + start + l); the empty product (n <= 0) is 1.
    static Poly rising_product(const BigRational& start, long n);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (0 when k exceeds the degree).
    BigRational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
    }
    BigRational leading() const {
        return coeffs_.empty() ? BigRational(0) : coeffs_.back();
    }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRational& c);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(Poly a, const Poly& b) { a *= b; return a; }
    friend Poly operator*(Poly a, const BigRational& c) { a *= c; return a; }
    friend Poly operator*(const BigRational& c, Poly a) { a *= c; return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    BigRational eval(const BigRational& x) const;
    double eval_double(double x) const;

    Poly derivative() const;
    /// Substitution x -> x + c.
    Poly shift(const BigRational& c) const;
    /// Substitution x -> -x.
    Poly reflect() const;

    /// Quotient/remainder; throws DomainError when dividing by zero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    /// Exact division; throws DomainError when the remainder is nonzero.
    Poly divide_exact(const Poly& b) const;
    bool divisible_by(const Poly& b) const;

    /// Monic gcd (gcd of anything with 0 is the other argument made monic).
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;

    /// Multiplicity of the root x0 (0 when x0 is not a root or for the zero poly).
    long root_multiplicity(const BigRational& x0) const;
    /// Divides out (x - x0)^m; requires the factor to divide exactly.
    Poly deflate(const BigRational& x0, long m) const;

    /// Human-readable form in the given variable, e.g. "s^2 - 1/2*s".
    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Ratio of polynomials in canonical form: den != 0, gcd(num, den) = 1,
/// den monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(BigRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RationalFunction(long c) : num_(BigRational(c)), den_(1) {}       // NOLINT
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { a += b; return a; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { a -= b; return a; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { a *= b; return a; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { a /= b; return a; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Exact evaluation; throws PoleError when den(x0) = 0.
    BigRational eval(const BigRational& x0) const;
    double eval_double(double x) const;

    RationalFunction shift(const BigRational& c) const;

    std::string to_string(const std::string& var = "s") const;

private:
    void canonical();
    Poly num_;
    Poly den_;
};

} // namespace vvgamma
