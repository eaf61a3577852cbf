#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "vvgamma/gamma_expr.hpp"

using namespace vvgamma;

namespace {

const double kPi = 3.14159265358979323846;

GammaExpr random_expr(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> small(-3, 3);
    std::uniform_int_distribution<long> twice(-4, 6);
    std::uniform_int_distribution<int> deg(0, 3);
    std::vector<BigRational> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(small(rng));
    Poly num(std::move(cs));
    if (num.is_zero()) num = Poly(1);
    return GammaExpr(2, RationalFunction(num), HalfInteger::from_twice(twice(rng)),
                     BigRational(small(rng)), BigRational(small(rng)));
}

} // namespace

TEST_CASE("canonicalize: functional equation examples") {
    // Gamma_2(s+1) -> sigma 0, rat s(s-1/2)
    GammaExpr e(2, RationalFunction(1), HalfInteger(1));
    GammaExpr c = e.canonicalized();
    CHECK(c.shift() == HalfInteger(0));
    CHECK(c.rat() == RationalFunction(Poly::x() * Poly::x_plus(BigRational(-1, 2))));

    // Gamma_2(s+3/2) -> sigma 1/2, rat (s+1/2) s
    GammaExpr e2(2, RationalFunction(1), HalfInteger::from_twice(3));
    GammaExpr c2 = e2.canonicalized();
    CHECK(c2.shift() == HalfInteger::half());
    CHECK(c2.rat() == RationalFunction(Poly::x_plus(BigRational(1, 2)) * Poly::x()));

    // s Gamma_2(s) is already canonical.
    GammaExpr e3(2, RationalFunction(Poly::x()), HalfInteger(0));
    CHECK(e3.canonicalized().rat() == e3.rat());
    CHECK(e3.canonicalized().shift() == HalfInteger(0));
}

TEST_CASE("canonicalize handles negative shifts and is idempotent") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 80; ++i) {
        GammaExpr e = random_expr(rng);
        GammaExpr c = e.canonicalized();
        CHECK((c.shift() == HalfInteger(0) || c.shift() == HalfInteger::half()));
        CHECK(c.canonicalized() == c);
        // Value preservation at random regular points in (1, 5).
        std::uniform_real_distribution<double> pt(1.0, 5.0);
        for (int t = 0; t < 10; ++t) {
            double s0 = pt(rng);
            double a = e.eval_numeric(s0);
            double b = c.eval_numeric(s0);
            CHECK(std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1e-300}));
        }
    }
}

TEST_CASE("add combines compatible expressions") {
    GammaExpr a(2, RationalFunction(Poly::x()), HalfInteger(0));
    GammaExpr b(2, RationalFunction(Poly::x_plus(BigRational(1))), HalfInteger(0));
    GammaExpr sum = add(a, b);
    CHECK(sum.rat() == RationalFunction(Poly{{BigRational(1), BigRational(2)}}));

    GammaExpr half(2, RationalFunction(1), HalfInteger::half());
    CHECK_THROWS_AS(add(a, half), IncompatibleExpr);

    GammaExpr scaled = a.scaled_four_pi(BigRational(-2), BigRational(0));
    CHECK_THROWS_AS(add(a, scaled), IncompatibleExpr);

    // Adding across representations works once canonical classes agree.
    GammaExpr shifted_rep(2, RationalFunction(1), HalfInteger(1));  // = s(s-1/2) Gamma_2(s)
    GammaExpr direct(2, RationalFunction(Poly::x() * Poly::x_plus(BigRational(-1, 2))),
                     HalfInteger(0));
    CHECK(add(shifted_rep, -direct).is_zero());
}

TEST_CASE("eval_numeric matches direct Gamma computations") {
    // Gamma_2(2) = sqrt(pi) Gamma(2) Gamma(3/2) = pi/2.
    GammaExpr g2 = GammaExpr::gamma_m(2);
    CHECK(g2.eval_numeric(2.0) == doctest::Approx(kPi / 2).epsilon(1e-13));

    // s Gamma_2(s) at s=0: pole of the Gamma factor, not silently cancelled.
    GammaExpr e(2, RationalFunction(Poly::x()), HalfInteger(0));
    CHECK_THROWS_AS(e.eval_numeric(0.0), PoleError);

    // (4pi)^{-2s} Gamma_2(s) at s=3.
    GammaExpr f(2, RationalFunction(1), HalfInteger(0), BigRational(-2), BigRational(0));
    double expected = std::pow(4 * kPi, -6.0) * std::sqrt(kPi) * std::tgamma(3.0) * std::tgamma(2.5);
    CHECK(f.eval_numeric(3.0) == doctest::Approx(expected).epsilon(1e-12));

    // Gamma_3(3) = pi^{3/2} Gamma(3) Gamma(5/2) Gamma(2) = (3/2) pi^2.
    CHECK(gamma_m_numeric(3, 3.0) == doctest::Approx(1.5 * kPi * kPi).epsilon(1e-13));

    // Sign tracking left of the poles: Gamma_1 is the ordinary Gamma.
    CHECK(gamma_m_numeric(1, -0.3) == doctest::Approx(std::tgamma(-0.3)).epsilon(1e-13));
    CHECK(gamma_m_numeric(1, -1.7) == doctest::Approx(std::tgamma(-1.7)).epsilon(1e-13));
    CHECK(gamma_m_has_pole(2, BigRational(1, 2)));
    CHECK(gamma_m_has_pole(2, BigRational(0)));
    CHECK(!gamma_m_has_pole(2, BigRational(3, 4)));
    CHECK_THROWS_AS(gamma_m_numeric(2, -1.0), PoleError);
}

TEST_CASE("shifted substitutes and re-canonicalizes") {
    // Gamma_2(s) shifted by 2 equals Gamma_2(s+2) as an expression.
    GammaExpr g = GammaExpr::gamma_m(2).shifted(HalfInteger(2));
    GammaExpr direct(2, RationalFunction(1), HalfInteger(2));
    CHECK(g == direct);
    for (double s0 : {1.1, 2.7}) {
        CHECK(g.eval_numeric(s0) ==
              doctest::Approx(gamma_m_numeric(2, s0 + 2)).epsilon(1e-12));
    }
    // Affine (4pi)-exponent follows the substitution.
    GammaExpr f(2, RationalFunction(1), HalfInteger(0), BigRational(-2), BigRational(0));
    GammaExpr fs = f.shifted(HalfInteger(1));
    CHECK(fs.four_pi_alpha() == BigRational(-2));
    CHECK(fs.four_pi_beta() == BigRational(-2));
}

TEST_CASE("with_shift re-presents without changing the value") {
    GammaExpr e(2, RationalFunction(Poly::x()), HalfInteger(0));
    GammaExpr hi = e.with_shift(HalfInteger(3));
    CHECK(hi.shift() == HalfInteger(3));
    CHECK(hi == e);
    CHECK_THROWS_AS(e.with_shift(HalfInteger::half()), DomainError);
}

TEST_CASE("limit_at: removable singularities and exact limits") {
    // (s^2 - s/2)/(s+k-1) at s=0; presented against a regular Gamma factor.
    Poly num = Poly::x() * Poly::x_plus(BigRational(-1, 2));
    for (long k : {2L, 3L, 7L}) {
        GammaExpr e(2, RationalFunction(num, Poly::x_plus(BigRational(k - 1))),
                    HalfInteger::from_twice(2 * k + 1));
        ExactGammaValue v = limit_at(e, BigRational(0));
        CHECK(v.coeff == BigRational(0));
    }
    {
        GammaExpr e(2, RationalFunction(num, Poly::x()), HalfInteger::from_twice(3));
        ExactGammaValue v = limit_at(e, BigRational(0));
        CHECK(v.coeff == BigRational(-1, 2));
        CHECK(v.gamma_arg == BigRational(3, 2));
    }
    {
        // s/s at 0 -> 1 (canonical form already cancels).
        GammaExpr e(2, RationalFunction(Poly::x(), Poly::x()), HalfInteger(2));
        CHECK(limit_at(e, BigRational(0)).coeff == BigRational(1));
    }
    {
        // Divergence: 1/s at 0.
        GammaExpr e(2, RationalFunction(Poly(1), Poly::x()), HalfInteger(2));
        CHECK_THROWS_AS(limit_at(e, BigRational(0)), DivergesError);
    }
    {
        // Gamma pole at the evaluation point is a precondition violation.
        GammaExpr e(2, RationalFunction(Poly::x()), HalfInteger(0));
        CHECK_THROWS_AS(limit_at(e, BigRational(0)), PoleError);
    }
}

TEST_CASE("equality is decidable and agrees with numeric equality") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> pt(1.5, 4.5);
    for (int i = 0; i < 50; ++i) {
        GammaExpr a = random_expr(rng);
        GammaExpr b = random_expr(rng);
        bool eq = (a == b);
        bool numeq = true;
        for (int t = 0; t < 5; ++t) {
            double s0 = pt(rng);
            double va = a.eval_numeric(s0);
            double vb = b.eval_numeric(s0);
            if (std::abs(va - vb) > 1e-10 * std::max({std::abs(va), std::abs(vb), 1e-300})) {
                numeq = false;
            }
        }
        if (eq) CHECK(numeq);
        if (!numeq) CHECK(!eq);
    }
}

TEST_CASE("JSON serialization round-trips the documented schema") {
    // The documented literal form.
    auto j = nlohmann::json::parse(
        R"({"m":2,"shift":"1/2","num":["-1/2","1"],"den":["1"],"four_pi":{"a":"-2","b":"-4"}})");
    GammaExpr e = GammaExpr::from_json(j);
    CHECK(e.rank_m() == 2);
    CHECK(e.shift() == HalfInteger::half());
    CHECK(e.rat() == RationalFunction(Poly{{BigRational(-1, 2), BigRational(1)}}));
    CHECK(e.four_pi_beta() == BigRational(-4));
    CHECK(GammaExpr::from_json(e.to_json()) == e);

    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
        GammaExpr a = random_expr(rng).canonicalized();
        GammaExpr back = GammaExpr::from_json(a.to_json());
        CHECK(back == a);
    }
}
