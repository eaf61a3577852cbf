#include "vvgamma/poly.hpp"

#include <sstream>

namespace vvgamma {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Poly Poly::rising_product(const BigRational& start, long n) {
    Poly p(1);
    for (long l = 0; l < n; ++l) {
        p *= x_plus(start + BigRational(l));
    }
    return p;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

BigRational Poly::eval(const BigRational& x) const {
    BigRational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

double Poly::eval_double(double x) const {
    // A double is a dyadic rational, so the evaluation can be carried out
    // exactly and rounded once at the end; naive Horner in double loses
    // digits to cancellation on the expanded shift-product coefficients.
    return eval(BigRational(mpq_class(x))).to_double();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<BigRational> out(coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    }
    return Poly(std::move(out));
}

Poly Poly::shift(const BigRational& c) const {
    // Horner in the polynomial ring: p(x+c) built from the leading coefficient down.
    Poly r;
    Poly xc = x_plus(c);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = r * xc + Poly(*it);
    }
    return r;
}

Poly Poly::reflect() const {
    Poly r(*this);
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) {
        r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) {
        throw DomainError("Poly: division by the zero polynomial");
    }
    quot = Poly();
    rem = a;
    const long db = b.degree();
    const BigRational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const long k = rem.degree() - db;
        BigRational c = rem.leading() / lb;
        std::vector<BigRational> mono(static_cast<std::size_t>(k) + 1, BigRational(0));
        mono.back() = c;
        Poly m{std::vector<BigRational>(mono)};
        quot += m;
        rem -= m * b;
    }
}

Poly Poly::divide_exact(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) {
        throw DomainError("Poly: inexact division");
    }
    return q;
}

bool Poly::divisible_by(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    return r.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

long Poly::root_multiplicity(const BigRational& x0) const {
    if (is_zero()) return 0;
    Poly p(*this);
    Poly factor{{-x0, BigRational(1)}};
    long m = 0;
    while (p.eval(x0).is_zero()) {
        p = p.divide_exact(factor);
        ++m;
    }
    return m;
}

Poly Poly::deflate(const BigRational& x0, long m) const {
    Poly p(*this);
    Poly factor{{-x0, BigRational(1)}};
    for (long i = 0; i < m; ++i) {
        p = p.divide_exact(factor);
    }
    return p;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        BigRational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        const bool unit = (a == BigRational(1));
        if (k == 0) {
            os << a.to_string();
        } else {
            if (!unit) os << a.to_string() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonical();
}

void RationalFunction::canonical() {
    if (den_.is_zero()) {
        throw DomainError("RationalFunction: zero denominator");
    }
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    BigRational lead = den_.leading();
    if (lead != BigRational(1)) {
        BigRational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonical();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonical();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonical();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) {
        throw DomainError("RationalFunction: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    canonical();
    return *this;
}

BigRational RationalFunction::eval(const BigRational& x0) const {
    BigRational d = den_.eval(x0);
    if (d.is_zero()) {
        throw PoleError("RationalFunction: pole at " + x0.to_string());
    }
    return num_.eval(x0) / d;
}

double RationalFunction::eval_double(double x) const {
    BigRational qx{mpq_class(x)};
    BigRational d = den_.eval(qx);
    if (d.is_zero()) {
        throw PoleError("RationalFunction: pole in numeric evaluation");
    }
    return (num_.eval(qx) / d).to_double();
}

RationalFunction RationalFunction::shift(const BigRational& c) const {
    return {num_.shift(c), den_.shift(c)};
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace vvgamma
