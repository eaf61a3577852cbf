#include "vvgamma/gamma_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "vvgamma/combinatorics.hpp"

namespace vvgamma {

DetDerivative DetDerivative::seed() {
    DetDerivative d;
    d.terms_.push_back({BigRational(1), 0, 0, 0, 0, Poly(1)});
    return d;
}

DetDerivative DetDerivative::from_terms(std::vector<DetTerm> terms) {
    DetDerivative d;
    d.terms_ = std::move(terms);
    d.normalize();
    return d;
}

void DetDerivative::normalize() {
    // Merge terms with equal monomial part, keep poly monic with the scalar
    // in coeff, sort by (det_shift, p11, p22, p12).
    std::map<std::tuple<int, int, int, int>, Poly> merged;
    for (const auto& t : terms_) {
        merged[{t.det_shift, t.p11, t.p22, t.p12}] += t.poly * t.coeff;
    }
    terms_.clear();
    for (auto& [key, poly] : merged) {
        if (poly.is_zero()) continue;
        auto [n, a, b, c] = key;
        BigRational lead = poly.leading();
        terms_.push_back({lead, a, b, c, n, poly * lead.inverse()});
    }
}

// d/dT11 on one term: lowers T11 power, and acting on det^{-(s+n)} brings
// down -(s+n) T22 det^{-(s+n+1)}.
DetDerivative DetDerivative::d11() const {
    DetDerivative out;
    for (const auto& t : terms_) {
        if (t.p11 > 0) {
            DetTerm u = t;
            u.coeff *= BigRational(t.p11);
            u.p11 -= 1;
            out.terms_.push_back(std::move(u));
        }
        DetTerm v = t;
        v.p22 += 1;
        v.det_shift += 1;
        v.poly = t.poly * Poly::x_plus(BigRational(t.det_shift));
        v.coeff = -t.coeff;
        out.terms_.push_back(std::move(v));
    }
    out.normalize();
    return out;
}

DetDerivative DetDerivative::d22() const {
    DetDerivative out;
    for (const auto& t : terms_) {
        if (t.p22 > 0) {
            DetTerm u = t;
            u.coeff *= BigRational(t.p22);
            u.p22 -= 1;
            out.terms_.push_back(std::move(u));
        }
        DetTerm v = t;
        v.p11 += 1;
        v.det_shift += 1;
        v.poly = t.poly * Poly::x_plus(BigRational(t.det_shift));
        v.coeff = -t.coeff;
        out.terms_.push_back(std::move(v));
    }
    out.normalize();
    return out;
}

// d12 = (1/2) d/dT12; on det^{-(s+n)} it yields +(s+n) T12 det^{-(s+n+1)}.
DetDerivative DetDerivative::d12() const {
    DetDerivative out;
    for (const auto& t : terms_) {
        if (t.p12 > 0) {
            DetTerm u = t;
            u.coeff *= BigRational(t.p12, 2);
            u.p12 -= 1;
            out.terms_.push_back(std::move(u));
        }
        DetTerm v = t;
        v.p12 += 1;
        v.det_shift += 1;
        v.poly = t.poly * Poly::x_plus(BigRational(t.det_shift));
        out.terms_.push_back(std::move(v));
    }
    out.normalize();
    return out;
}

double DetDerivative::eval(double t11, double t22, double t12, double s) const {
    double det = t11 * t22 - t12 * t12;
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff.to_double() * t.poly.eval_double(s);
        v *= std::pow(t11, t.p11) * std::pow(t22, t.p22) * std::pow(t12, t.p12);
        v *= std::pow(det, -(s + t.det_shift));
        sum += v;
    }
    return sum;
}

Poly DetDerivative::at_identity() const {
    Poly p;
    for (const auto& t : terms_) {
        if (t.p12 > 0) continue;
        p += t.poly * t.coeff;
    }
    return p;
}

DetDerivative det_derivative(int n1, int n2, int n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || n1 + n2 + n3 == 0) {
        throw DomainError("det_derivative: orders must be nonnegative, one positive");
    }
    DetDerivative d = DetDerivative::seed();
    for (int i = 0; i < n3; ++i) d = d.d12();
    for (int i = 0; i < n2; ++i) d = d.d22();
    for (int i = 0; i < n1; ++i) d = d.d11();
    return d;
}

GammaExpr gamma_alternating(int m, int q) {
    if (q < 1 || q > m) throw DomainError("gamma_alternating: need 1 <= q <= m");
    Poly p = c_poly(q).reflect();  // C_[q](-s)
    if (q % 2 != 0) p = -p;
    return GammaExpr(m, RationalFunction(std::move(p)), HalfInteger(0));
}

GammaExpr monomial_integral(int n1, int n2, int n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0) {
        throw DomainError("monomial_integral: negative exponent");
    }
    if (n3 % 2 != 0) {
        return GammaExpr(2, RationalFunction(0), HalfInteger(0));
    }
    const int h = n3 / 2;
    Poly sum;
    for (int k = 0; k <= std::min(n1, n2); ++k) {
        BigRational c(mpz_class(binomial(n1, k) * binomial(n2, k) * factorial(k)));
        if (k % 2 != 0) c = -c;
        sum += c * Poly::rising_product(BigRational(0), n1 + n2 + h - k);
    }
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(h));
    BigRational front = BigRational(triangle(n3 - 1, h)) / BigRational(pow2);
    return GammaExpr(2, RationalFunction(sum * front), HalfInteger(0));
}

GammaExpr gamma_rk(long r, long k) {
    if (r < 0 || k < 0 || k > r) throw DomainError("gamma_rk: need 0 <= k <= r");
    if (k > r / 2) return gamma_rk(r, r - k);  // functional equation
    Poly sum;
    for (long mu = 0; mu <= r / 2; ++mu) {
        mpz_class inner = 0;
        for (long j = 0; j <= k; ++j) {
            mpz_class term = binomial(k, j) * binomial(r - 2 * k, 2 * (mu - j));
            inner += ((mu - j) % 2 == 0) ? term : -term;
        }
        if (inner == 0) continue;
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(mu));
        BigRational c = BigRational(mpz_class(triangle(2 * mu - 1, mu) * inner)) / BigRational(pow2);
        sum += c * Poly::rising_product(BigRational(0), r - mu);
    }
    return GammaExpr(2, RationalFunction(std::move(sum)), HalfInteger(0));
}

GammaOperator gamma_operator(const HighestWeight& l) {
    GammaOperator op;
    op.weight = l;
    op.shift = HalfInteger(l.l2);
    const long r = l.r();
    op.diag.reserve(static_cast<std::size_t>(r) + 1);
    for (long k = 0; k <= r; ++k) {
        op.diag.push_back(gamma_rk(r, k).shifted(HalfInteger(l.l2)));
    }
    return op;
}

namespace {

// Polynomial in (Y11, Y22, Y12) over Q(i), keyed by exponent triples.
using YPoly = std::map<std::tuple<int, int, int>, GaussianRational>;

YPoly ypoly_scalar(const GaussianRational& c) {
    YPoly p;
    if (!c.is_zero()) p[{0, 0, 0}] = c;
    return p;
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    YPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            auto key = std::make_tuple(std::get<0>(ea) + std::get<0>(eb),
                                       std::get<1>(ea) + std::get<1>(eb),
                                       std::get<2>(ea) + std::get<2>(eb));
            out[key] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

YPoly ypoly_pow(const YPoly& a, long e) {
    YPoly r = ypoly_scalar(GaussianRational(1));
    for (long t = 0; t < e; ++t) r = ypoly_mul(r, a);
    return r;
}

// P_k(nu, Y) expanded into Y-monomials.
YPoly expand_p_k(long r, long k, long nu) {
    const GaussianRational i = GaussianRational::i();
    YPoly f_minus{{{1, 0, 0}, GaussianRational(1)}, {{0, 0, 1}, -i}};  // Y11 - i Y12
    YPoly f_plus{{{1, 0, 0}, GaussianRational(1)}, {{0, 0, 1}, i}};    // Y11 + i Y12
    YPoly g_plus{{{0, 1, 0}, GaussianRational(1)}, {{0, 0, 1}, i}};    // Y22 + i Y12
    YPoly g_minus{{{0, 1, 0}, GaussianRational(1)}, {{0, 0, 1}, -i}};  // Y22 - i Y12

    YPoly sum;
    for (long j = 0; j <= std::min(r - k, nu); ++j) {
        if (k + j - nu < 0) continue;
        GaussianRational c(BigRational(mpz_class(binomial(r - k, j) * binomial(k, nu - j))));
        if (j % 2 != 0) c = -c;
        YPoly term = ypoly_scalar(c);
        term = ypoly_mul(term, ypoly_pow(f_minus, r - k - j));
        term = ypoly_mul(term, ypoly_pow(f_plus, k + j - nu));
        term = ypoly_mul(term, ypoly_pow(g_plus, j));
        term = ypoly_mul(term, ypoly_pow(g_minus, nu - j));
        for (const auto& [e, cc] : term) sum[e] += cc;
    }
    for (auto it = sum.begin(); it != sum.end();) {
        it = it->second.is_zero() ? sum.erase(it) : std::next(it);
    }
    return sum;
}

// Integrates a Y-polynomial monomial by monomial; the imaginary part of the
// coefficient sum must cancel, which the caller asserts.
std::pair<GammaExpr, GammaExpr> integrate_ypoly(const YPoly& p) {
    GammaExpr re(2, RationalFunction(0), HalfInteger(0));
    GammaExpr im(2, RationalFunction(0), HalfInteger(0));
    for (const auto& [e, c] : p) {
        auto [a, b, d] = e;
        GammaExpr mi = monomial_integral(a, b, d);
        if (mi.is_zero()) continue;
        re = add(re, mi * c.real());
        im = add(im, mi * c.imag());
    }
    return {re, im};
}

} // namespace

Report gamma_rk_independence_check(long r, long k) {
    Report rep;
    if (r < 0 || k < 0 || k > r) throw DomainError("gamma_rk_independence_check: bad indices");
    GammaExpr expected = gamma_rk(r, k);
    for (long nu = 0; nu <= r; ++nu) {
        mpz_class c = c_k_nu(r, k, nu);
        if (c == 0) continue;
        auto [re, im] = integrate_ypoly(expand_p_k(r, k, nu));
        std::ostringstream name;
        name << "Gamma(" << r << "," << k << ",s) via nu=" << nu;
        bool ok = im.is_zero() && (re * BigRational(c).inverse()) == expected;
        rep.add(name.str(), ok);
    }
    return rep;
}

Report symmetric_matrix_form_check() {
    Report rep;
    // Entries of Y X Y as Y-polynomials with coefficients linear in
    // (X1, X12, X2); integrate and compare with
    // s(s+1) Gamma_2 * X + (s/2) Gamma_2 * adj(X).
    // (Y X Y)_{11} = Y11^2 X1 + 2 Y11 Y12 X12 + Y12^2 X2
    // (Y X Y)_{12} = Y11 Y12 X1 + (Y11 Y22 + Y12^2) X12 + Y12 Y22 X2
    // (Y X Y)_{22} = Y12^2 X1 + 2 Y12 Y22 X12 + Y22^2 X2
    GammaExpr zero(2, RationalFunction(0), HalfInteger(0));
    auto mi = [](int a, int b, int c) { return monomial_integral(a, b, c); };

    GammaExpr e11_x1 = mi(2, 0, 0);
    GammaExpr e11_x12 = mi(1, 0, 1) * BigRational(2);
    GammaExpr e11_x2 = mi(0, 0, 2);
    GammaExpr e12_x1 = mi(1, 0, 1);
    GammaExpr e12_x12 = add(mi(1, 1, 0), mi(0, 0, 2));
    GammaExpr e12_x2 = mi(0, 1, 1);
    GammaExpr e22_x1 = mi(0, 0, 2);
    GammaExpr e22_x12 = mi(0, 1, 1) * BigRational(2);
    GammaExpr e22_x2 = mi(0, 2, 0);

    Poly s = Poly::x();
    GammaExpr A(2, RationalFunction(s * Poly::x_plus(BigRational(1))), HalfInteger(0));  // s(s+1) Gamma_2
    GammaExpr B(2, RationalFunction(s * BigRational(1, 2)), HalfInteger(0));             // (s/2) Gamma_2

    // X-coefficient matrices of the target: s(s+1)G X + (s/2)G adj(X).
    rep.add("entry (1,1): X1 coefficient", e11_x1 == A);
    rep.add("entry (1,1): X12 coefficient", e11_x12 == zero);
    rep.add("entry (1,1): X2 coefficient", e11_x2 == B);
    rep.add("entry (1,2): X1 coefficient", e12_x1 == zero);
    rep.add("entry (1,2): X12 coefficient", e12_x12 == add(A, -B));
    rep.add("entry (1,2): X2 coefficient", e12_x2 == zero);
    rep.add("entry (2,2): X1 coefficient", e22_x1 == B);
    rep.add("entry (2,2): X12 coefficient", e22_x12 == zero);
    rep.add("entry (2,2): X2 coefficient", e22_x2 == A);

    // Trace consistency: trace = (2 s(s+1) + s) Gamma_2 * (X1 + X2) summands.
    GammaExpr trace_coeff = add(A, B);
    GammaExpr middle = gamma_rk(2, 1);
    rep.add("trace route: s(s+1) + s/2 = s(s+3/2) = Gamma(2,1,s)", trace_coeff == middle);

    // X = identity: diagonal entries s(s+3/2) Gamma_2(s) = Gamma(2,1,s).
    GammaExpr diag_at_identity = add(e11_x1, e11_x2);
    rep.add("X = identity reproduces s(s+3/2) Gamma_2(s)", diag_at_identity == middle);
    return rep;
}

InvertibilityVerdict invertibility_report(const HighestWeight& l, const BigRational& s0) {
    GammaOperator op = gamma_operator(l);
    InvertibilityVerdict v;
    v.invertible = true;
    for (long k = 0; k < static_cast<long>(op.diag.size()); ++k) {
        const GammaExpr& e = op.diag[static_cast<std::size_t>(k)];
        // Polynomial part only: num/den with den nonvanishing by construction.
        BigRational d = e.rat().den().eval(s0);
        if (d.is_zero()) {
            throw PoleError("invertibility_report: rational part has a pole at s0");
        }
        if (e.rat().num().eval(s0).is_zero()) {
            v.invertible = false;
            v.vanishing.push_back(k);
        }
    }
    return v;
}

namespace {

// Eq. (r,0) closed form via the C(r,2mu) coefficients.
Poly gamma_r0_form_one(long r) {
    Poly sum;
    for (long mu = 0; mu <= r / 2; ++mu) {
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(mu));
        BigRational c = BigRational(mpz_class(binomial(r, 2 * mu) * triangle(2 * mu - 1, mu))) / BigRational(pow2);
        if (mu % 2 != 0) c = -c;
        sum += c * Poly::rising_product(BigRational(0), r - mu);
    }
    return sum;
}

// Eq. (r,0) closed form via the j-sum over binomial triples.
Poly gamma_r0_form_two(long r) {
    Poly sum;
    mpz_class pow2r;
    mpz_ui_pow_ui(pow2r.get_mpz_t(), 2, static_cast<unsigned long>(r));
    for (long mu = 0; mu <= r / 2; ++mu) {
        mpz_class inner = 0;
        for (long j = mu; j <= r - mu; ++j) {
            inner += binomial(r, j) * binomial(r - j, mu) * binomial(j, mu);
        }
        BigRational c = BigRational(mpz_class(factorial(mu) * inner)) / BigRational(pow2r);
        if (mu % 2 != 0) c = -c;
        sum += c * Poly::rising_product(BigRational(0), r - mu);
    }
    return sum;
}

} // namespace

Report gamma_identity_suite(long r_max) {
    Report rep;

    bool palin = true;
    for (long r = 0; r <= std::min(r_max, 12L); ++r) {
        for (long k = 0; k <= r; ++k) {
            if (!(gamma_rk(r, k) == gamma_rk(r, r - k))) palin = false;
        }
    }
    rep.add("palindrome Gamma(r,k,s) = Gamma(r,r-k,s), r <= 12", palin);

    bool divis = true;
    for (long r = 0; r <= std::min(r_max, 12L); ++r) {
        Poly factor = Poly::rising_product(BigRational(0), r / 2);
        for (long k = 0; k <= r / 2; ++k) {
            GammaExpr g = gamma_rk(r, k);
            if (!g.rat().is_polynomial() || !g.rat().num().divisible_by(factor)) divis = false;
        }
    }
    rep.add("divisibility by Gamma_2(s) prod_{l<floor(r/2)} (s+l), r <= 12", divis);

    bool forms = true;
    for (long r = 0; r <= std::max(r_max, 40L); ++r) {
        if (gamma_r0_form_one(r) != gamma_r0_form_two(r)) forms = false;
    }
    rep.add("Gamma(r,0,s): both closed forms agree, r <= max(r_max, 40)", forms);

    bool trace_ok = true;
    for (long r = 0; r <= std::min(r_max, 12L); ++r) {
        // 2^r Gamma(r,0,s) = sum over the binomial expansion of (Y11+Y22)^r.
        GammaExpr sum(2, RationalFunction(0), HalfInteger(0));
        for (long j = 0; j <= r; ++j) {
            sum = add(sum, monomial_integral(static_cast<int>(j), static_cast<int>(r - j), 0) *
                               BigRational(binomial(r, j)));
        }
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(r));
        if (!(sum == gamma_rk(r, 0) * BigRational(pow2))) trace_ok = false;
    }
    rep.add("trace route: 2^r Gamma(r,0,s) = integral of (Y11+Y22)^r, r <= 12", trace_ok);

    return rep;
}

} // namespace vvgamma
