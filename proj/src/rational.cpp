#include "vvgamma/rational.hpp"

#include <ostream>
#include <sstream>

namespace vvgamma {

void BigRational::canonical() {
    if (q_.get_den() == 0) {
        throw DomainError("BigRational: zero denominator");
    }
    q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw DomainError("BigRational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::inverse() const {
    if (is_zero()) {
        throw DomainError("BigRational: inverse of zero");
    }
    return BigRational(mpq_class(1) / q_);
}

BigRational BigRational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw DomainError("BigRational: cannot parse '" + s + "'");
    }
    return BigRational(q);
}

std::string BigRational::to_string() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

GaussianRational GaussianRational::i_power(long n) {
    long m = ((n % 4) + 4) % 4;
    switch (m) {
        case 0: return GaussianRational(1);
        case 1: return i();
        case 2: return GaussianRational(-1);
        default: return -i();
    }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw DomainError("GaussianRational: inverse of zero");
    }
    BigRational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::ostringstream os;
    if (!re_.is_zero()) {
        os << re_.to_string() << (im_.sign() > 0 ? "+" : "-");
        BigRational a = im_.sign() > 0 ? im_ : -im_;
        if (a != BigRational(1)) os << a.to_string() << "*";
        os << "i";
    } else {
        if (im_ == BigRational(1)) {
            os << "i";
        } else if (im_ == BigRational(-1)) {
            os << "-i";
        } else {
            os << im_.to_string() << "*i";
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

std::string HalfInteger::to_string() const {
    if (is_integer()) {
        mpz_class v = twice_ / 2;
        return v.get_str();
    }
    return twice_.get_str() + "/2";
}

std::ostream& operator<<(std::ostream& os, const HalfInteger& h) {
    return os << h.to_string();
}

} // namespace vvgamma
