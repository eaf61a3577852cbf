#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "vvgamma/errors.hpp"

namespace vvgamma {

/// Arbitrary-precision rational with canonical representation:
/// gcd(|num|, den) = 1 and den >= 1.  Backed by GMP.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}                                // NOLINT(google-explicit-constructor)
    BigRational(long n, long d) : q_(n, d) { canonical(); }
    BigRational(const mpz_class& n) : q_(n) {}                    // NOLINT(google-explicit-constructor)
    BigRational(const mpz_class& n, const mpz_class& d) : q_(n, d) { canonical(); }
    explicit BigRational(const mpq_class& q) : q_(q) { canonical(); }

    /// Parses "p", "-p" or "p/q".
    static BigRational from_string(const std::string& s);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { a += b; return a; }
    friend BigRational operator-(BigRational a, const BigRational& b) { a -= b; return a; }
    friend BigRational operator*(BigRational a, const BigRational& b) { a *= b; return a; }
    friend BigRational operator/(BigRational a, const BigRational& b) { a /= b; return a; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    BigRational inverse() const;

    double to_double() const { return q_.get_d(); }

    /// Canonical "p" or "p/q" form.
    std::string to_string() const;

private:
    void canonical();
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Element of Q(i).  Field operations are exact.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}                        // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }
    /// i^n for any integer n.
    static GaussianRational i_power(long n);

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const;

    std::string to_string() const;

private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Exact half-integer, stored as twice its value.  Closed under addition;
/// used for the shifts sigma in Gamma_m(s + sigma).
class HalfInteger {
public:
    HalfInteger() : twice_(0) {}
    HalfInteger(long whole) : twice_(2 * whole) {}                // NOLINT(google-explicit-constructor)
    static HalfInteger from_twice(const mpz_class& twice) { HalfInteger h; h.twice_ = twice; return h; }
    static HalfInteger half() { return from_twice(1); }

    const mpz_class& twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    bool is_zero() const { return twice_ == 0; }
    int sign() const { return sgn(twice_); }

    BigRational to_rational() const { return BigRational(twice_, mpz_class(2)); }
    double to_double() const { return twice_.get_d() / 2.0; }

    HalfInteger operator-() const { return from_twice(-twice_); }
    HalfInteger& operator+=(const HalfInteger& o) { twice_ += o.twice_; return *this; }
    HalfInteger& operator-=(const HalfInteger& o) { twice_ -= o.twice_; return *this; }

    friend HalfInteger operator+(HalfInteger a, const HalfInteger& b) { a += b; return a; }
    friend HalfInteger operator-(HalfInteger a, const HalfInteger& b) { a -= b; return a; }
    friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInteger& a, const HalfInteger& b) { return a.twice_ != b.twice_; }
    friend bool operator<(const HalfInteger& a, const HalfInteger& b) { return a.twice_ < b.twice_; }
    friend bool operator>=(const HalfInteger& a, const HalfInteger& b) { return a.twice_ >= b.twice_; }

    std::string to_string() const;

private:
    mpz_class twice_;
};

std::ostream& operator<<(std::ostream& os, const HalfInteger& h);

} // namespace vvgamma
