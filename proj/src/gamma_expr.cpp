#include "vvgamma/gamma_expr.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace vvgamma {

namespace {

const double kPi = 3.14159265358979323846264338327950288;
const double kLog4Pi = std::log(4.0 * kPi);

// prod_{nu=0}^{m-1} (s + base - nu/2) as a polynomial in s.
Poly shift_rule_product(int rank_m, const BigRational& base) {
    Poly p(1);
    for (int nu = 0; nu < rank_m; ++nu) {
        p *= Poly::x_plus(base - BigRational(nu, 2));
    }
    return p;
}

} // namespace

bool gamma_m_has_pole(int rank_m, const BigRational& z) {
    for (int nu = 0; nu < rank_m; ++nu) {
        BigRational arg = z - BigRational(nu, 2);
        if (arg.is_integer() && arg.sign() <= 0) return true;
    }
    return false;
}

std::pair<double, int> log_gamma_m(int rank_m, double z) {
    double lg = 0.25 * rank_m * (rank_m - 1) * std::log(kPi);
    int sign = 1;
    for (int nu = 0; nu < rank_m; ++nu) {
        double arg = z - 0.5 * nu;
        if (arg <= 0.0 && arg == std::floor(arg)) {
            throw PoleError("Gamma_m: pole at argument " + std::to_string(arg));
        }
        int s = 1;
        lg += ::lgamma_r(arg, &s);
        sign *= s;
    }
    return {lg, sign};
}

double gamma_m_numeric(int rank_m, double z) {
    auto [lg, sign] = log_gamma_m(rank_m, z);
    return sign * std::exp(lg);
}

GammaExpr::GammaExpr(int rank_m, RationalFunction rat, HalfInteger shift,
                     BigRational four_pi_alpha, BigRational four_pi_beta)
    : rank_m_(rank_m),
      rat_(std::move(rat)),
      shift_(std::move(shift)),
      alpha_(std::move(four_pi_alpha)),
      beta_(std::move(four_pi_beta)) {
    if (rank_m_ < 1) {
        throw DomainError("GammaExpr: rank must be positive");
    }
}

GammaExpr GammaExpr::canonicalized() const {
    GammaExpr e(*this);
    // Move shift down: Gamma_m(s + sigma) = prod(s + (sigma-1) - nu/2) * Gamma_m(s + sigma - 1).
    while (e.shift_ >= HalfInteger(1)) {
        e.shift_ -= HalfInteger(1);
        e.rat_ *= RationalFunction(shift_rule_product(e.rank_m_, e.shift_.to_rational()));
    }
    // Move shift up: Gamma_m(s + sigma) = Gamma_m(s + sigma + 1) / prod(s + sigma - nu/2).
    while (e.shift_.sign() < 0) {
        e.rat_ /= RationalFunction(shift_rule_product(e.rank_m_, e.shift_.to_rational()));
        e.shift_ += HalfInteger(1);
    }
    if (e.rat_.is_zero()) {
        // Normalize the zero expression completely.
        e.shift_ = HalfInteger(0);
        e.alpha_ = BigRational(0);
        e.beta_ = BigRational(0);
    }
    return e;
}

GammaExpr add(const GammaExpr& a, const GammaExpr& b) {
    GammaExpr ca = a.canonicalized();
    GammaExpr cb = b.canonicalized();
    if (ca.is_zero()) return cb;
    if (cb.is_zero()) return ca;
    if (ca.rank_m_ != cb.rank_m_) {
        throw IncompatibleExpr("add: distinct Gamma ranks");
    }
    if (ca.shift_ != cb.shift_) {
        throw IncompatibleExpr("add: distinct canonical shift classes");
    }
    if (ca.alpha_ != cb.alpha_ || ca.beta_ != cb.beta_) {
        throw IncompatibleExpr("add: distinct (4pi)-exponents");
    }
    ca.rat_ += cb.rat_;
    return ca.canonicalized();
}

GammaExpr GammaExpr::operator-() const {
    GammaExpr e(*this);
    e.rat_ = -e.rat_;
    return e;
}

GammaExpr& GammaExpr::operator*=(const RationalFunction& f) {
    rat_ *= f;
    return *this;
}

GammaExpr& GammaExpr::operator*=(const BigRational& c) {
    rat_ *= RationalFunction(c);
    return *this;
}

GammaExpr GammaExpr::shifted(const HalfInteger& c) const {
    GammaExpr e(*this);
    BigRational cr = c.to_rational();
    e.rat_ = e.rat_.shift(cr);
    e.shift_ += c;
    e.beta_ += e.alpha_ * cr;
    return e.canonicalized();
}

GammaExpr GammaExpr::with_shift(const HalfInteger& target) const {
    GammaExpr e = canonicalized();
    if (!(target - e.shift_).is_integer()) {
        throw DomainError("with_shift: target shift differs by a non-integer");
    }
    while (e.shift_ < target) {
        e.rat_ /= RationalFunction(shift_rule_product(e.rank_m_, e.shift_.to_rational()));
        e.shift_ += HalfInteger(1);
    }
    while (target < e.shift_) {
        e.shift_ -= HalfInteger(1);
        e.rat_ *= RationalFunction(shift_rule_product(e.rank_m_, e.shift_.to_rational()));
    }
    return e;
}

GammaExpr GammaExpr::scaled_four_pi(const BigRational& da, const BigRational& db) const {
    GammaExpr e(*this);
    e.alpha_ += da;
    e.beta_ += db;
    return e;
}

bool operator==(const GammaExpr& a, const GammaExpr& b) {
    GammaExpr ca = a.canonicalized();
    GammaExpr cb = b.canonicalized();
    if (ca.is_zero() && cb.is_zero()) return true;
    return ca.rank_m_ == cb.rank_m_ && ca.shift_ == cb.shift_ &&
           ca.rat_ == cb.rat_ && ca.alpha_ == cb.alpha_ && ca.beta_ == cb.beta_;
}

double GammaExpr::eval_numeric(double s0) const {
    double rv = rat_.eval_double(s0);  // throws PoleError at poles of rat
    double z = s0 + shift_.to_double();
    auto [lg, sign] = log_gamma_m(rank_m_, z);
    double expo = alpha_.to_double() * s0 + beta_.to_double();
    return rv * sign * std::exp(lg + expo * kLog4Pi);
}

std::string GammaExpr::to_string() const {
    std::ostringstream os;
    std::string rat_str = rat_.to_string("s");
    const bool multi_term = rat_.is_polynomial() &&
                            (rat_str.find(" + ") != std::string::npos ||
                             rat_str.find(" - ") != std::string::npos);
    if (multi_term) {
        os << "(" << rat_str << ")";
    } else {
        os << rat_str;
    }
    os << " * Gamma_" << rank_m_ << "(s";
    if (!shift_.is_zero()) {
        os << (shift_.sign() > 0 ? "+" : "-");
        HalfInteger a = shift_.sign() > 0 ? shift_ : -shift_;
        os << a.to_string();
    }
    os << ")";
    if (!alpha_.is_zero() || !beta_.is_zero()) {
        Poly expo{{beta_, alpha_}};
        os << " * (4pi)^(" << expo.to_string("s") << ")";
    }
    return os.str();
}

nlohmann::json GammaExpr::to_json() const {
    nlohmann::json j;
    j["m"] = rank_m_;
    j["shift"] = shift_.to_rational().to_string();
    auto coeff_array = [](const Poly& p) {
        nlohmann::json arr = nlohmann::json::array();
        if (p.is_zero()) {
            arr.push_back("0");
            return arr;
        }
        for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
        return arr;
    };
    j["num"] = coeff_array(rat_.num());
    j["den"] = coeff_array(rat_.den());
    j["four_pi"] = {{"a", alpha_.to_string()}, {"b", beta_.to_string()}};
    return j;
}

GammaExpr GammaExpr::from_json(const nlohmann::json& j) {
    auto poly_of = [](const nlohmann::json& arr) {
        std::vector<BigRational> cs;
        for (const auto& v : arr) cs.push_back(BigRational::from_string(v.get<std::string>()));
        return Poly(std::move(cs));
    };
    BigRational sh = BigRational::from_string(j.at("shift").get<std::string>());
    BigRational twice = sh * BigRational(2);
    if (!twice.is_integer()) {
        throw DomainError("GammaExpr::from_json: shift must be a half-integer");
    }
    return GammaExpr(
        j.at("m").get<int>(),
        RationalFunction(poly_of(j.at("num")), poly_of(j.at("den"))),
        HalfInteger::from_twice(twice.numerator()),
        BigRational::from_string(j.at("four_pi").at("a").get<std::string>()),
        BigRational::from_string(j.at("four_pi").at("b").get<std::string>()));
}

double ExactGammaValue::to_double() const {
    if (coeff.is_zero()) return 0.0;
    double g = gamma_m_numeric(rank_m, gamma_arg.to_double());
    return coeff.to_double() * g * std::exp(four_pi_exp.to_double() * kLog4Pi);
}

std::string ExactGammaValue::to_string() const {
    if (coeff.is_zero()) return "0";
    std::ostringstream os;
    os << coeff.to_string() << " * Gamma_" << rank_m << "(" << gamma_arg.to_string() << ")";
    if (!four_pi_exp.is_zero()) {
        os << " * (4pi)^(" << four_pi_exp.to_string() << ")";
    }
    return os.str();
}

ExactGammaValue limit_at(const GammaExpr& e, const BigRational& s0) {
    BigRational z = s0 + e.shift().to_rational();
    if (gamma_m_has_pole(e.rank_m(), z)) {
        throw PoleError("limit_at: Gamma factor has a pole at " + z.to_string());
    }
    const Poly& num = e.rat().num();
    const Poly& den = e.rat().den();
    BigRational expo = e.four_pi_alpha() * s0 + e.four_pi_beta();
    if (num.is_zero()) {
        return {BigRational(0), e.rank_m(), z, expo};
    }
    long mnum = num.root_multiplicity(s0);
    long mden = den.root_multiplicity(s0);
    if (mnum < mden) {
        throw DivergesError("limit_at: denominator vanishes to higher order at " + s0.to_string());
    }
    BigRational value(0);
    if (mnum == mden) {
        value = num.deflate(s0, mnum).eval(s0) / den.deflate(s0, mden).eval(s0);
    }
    return {value, e.rank_m(), z, expo};
}

ExactGammaValue value_at(const GammaExpr& e, const BigRational& s0) {
    BigRational z = s0 + e.shift().to_rational();
    if (gamma_m_has_pole(e.rank_m(), z)) {
        throw PoleError("value_at: Gamma factor has a pole at " + z.to_string());
    }
    return {e.rat().eval(s0), e.rank_m(), z, e.four_pi_alpha() * s0 + e.four_pi_beta()};
}

} // namespace vvgamma
