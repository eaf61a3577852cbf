#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vvgamma/combinatorics.hpp"
#include "vvgamma/gamma_engine.hpp"

using namespace vvgamma;

namespace {

// Independent statements of the derivative lemma's closed forms; the engine
// composes single differentiation steps and must reproduce these exactly.

DetDerivative lemma_pure_11(int n) {
    // (-1)^n T22^n det^{-(s+n)} prod_{l<n}(s+l)
    BigRational sign = (n % 2 == 0) ? BigRational(1) : BigRational(-1);
    return DetDerivative::from_terms(
        {{sign, 0, n, 0, n, Poly::rising_product(BigRational(0), n)}});
}

DetDerivative lemma_pure_22(int n) {
    BigRational sign = (n % 2 == 0) ? BigRational(1) : BigRational(-1);
    return DetDerivative::from_terms(
        {{sign, n, 0, 0, n, Poly::rising_product(BigRational(0), n)}});
}

DetDerivative lemma_pure_12(int n) {
    std::vector<DetTerm> terms;
    for (int k = 0; k <= n - 1; ++k) {
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
        BigRational c = BigRational(triangle(n - 1, k)) / BigRational(pow2);
        terms.push_back({c, 0, 0, n - 2 * k, n - k,
                         Poly::rising_product(BigRational(0), n - k)});
    }
    return DetDerivative::from_terms(std::move(terms));
}

DetDerivative lemma_mixed(int n1, int n2) {
    std::vector<DetTerm> terms;
    for (int k = 0; k <= std::min(n1, n2); ++k) {
        BigRational c(mpz_class(factorial(k) * binomial(n1, k) * binomial(n2, k)));
        if ((n1 + n2 + k) % 2 != 0) c = -c;
        terms.push_back({c, n2 - k, n1 - k, 0, n1 + n2 - k,
                         Poly::rising_product(BigRational(0), n1 + n2 - k)});
    }
    return DetDerivative::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("det_derivative: first-order displays") {
    // d12 det^{-s} = s T12 det^{-(s+1)}
    DetDerivative d = det_derivative(0, 0, 1);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].coeff == BigRational(1));
    CHECK(d.terms()[0].p12 == 1);
    CHECK(d.terms()[0].det_shift == 1);
    CHECK(d.terms()[0].poly == Poly::x());

    // d11 det^{-s} = -s T22 det^{-(s+1)}
    DetDerivative e = det_derivative(1, 0, 0);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms()[0].coeff == BigRational(-1));
    CHECK(e.terms()[0].p22 == 1);
    CHECK(e.terms()[0].poly == Poly::x());
}

TEST_CASE("det_derivative reproduces the lemma closed forms exactly") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(det_derivative(n, 0, 0) == lemma_pure_11(n));
        CHECK(det_derivative(0, n, 0) == lemma_pure_22(n));
        CHECK(det_derivative(0, 0, n) == lemma_pure_12(n));
    }
    for (int n1 = 1; n1 <= 4; ++n1) {
        for (int n2 = 1; n2 <= 4; ++n2) {
            CHECK(det_derivative(n1, n2, 0) == lemma_mixed(n1, n2));
        }
    }
    CHECK_THROWS_AS(det_derivative(0, 0, 0), DomainError);
}

TEST_CASE("gamma_alternating: alternating-power eigenvalues") {
    // m=2, q=1: s Gamma_2(s).
    CHECK(gamma_alternating(2, 1) ==
          GammaExpr(2, RationalFunction(Poly::x()), HalfInteger(0)));
    // m=2, q=2: s(s-1/2) Gamma_2(s) = Gamma_2(s+1) after canonicalization.
    CHECK(gamma_alternating(2, 2) == GammaExpr(2, RationalFunction(1), HalfInteger(1)));
    // m=3, q=2: s(s-1/2) Gamma_3(s); numeric check at s=3.
    GammaExpr g32 = gamma_alternating(3, 2);
    CHECK(g32.rank_m() == 3);
    double expected = 3.0 * 2.5 * gamma_m_numeric(3, 3.0);
    CHECK(g32.eval_numeric(3.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_alternating(2, 3), DomainError);
}

TEST_CASE("monomial_integral: examples and the derivative route") {
    CHECK(monomial_integral(0, 0, 1).is_zero());
    CHECK(monomial_integral(1, 0, 0) ==
          GammaExpr(2, RationalFunction(Poly::x()), HalfInteger(0)));
    CHECK(monomial_integral(1, 1, 0) ==
          GammaExpr(2, RationalFunction(Poly::x() * Poly::x()), HalfInteger(0)));
    CHECK(monomial_integral(0, 0, 2) ==
          GammaExpr(2, RationalFunction(BigRational(1, 2) * Poly::x()), HalfInteger(0)));
    // The scalar case integrates to Gamma_2(s) itself.
    CHECK(monomial_integral(0, 0, 0) == GammaExpr::gamma_m(2));
    // A diagonal entry of the standard-representation integral.
    CHECK(monomial_integral(1, 0, 0) == gamma_alternating(2, 1));
    // Cross-check of (0,0,2) through the derivative route at T = identity.
    Poly d2 = det_derivative(0, 0, 2).at_identity();
    CHECK(GammaExpr(2, RationalFunction(d2), HalfInteger(0)) == monomial_integral(0, 0, 2));

    // Independent route: Gamma_2(s) (-1)^{n1+n2+n3} (derivative at T = 1).
    for (int n1 = 0; n1 <= 4; ++n1) {
        for (int n2 = 0; n2 <= 4; ++n2) {
            for (int n3 = 0; n3 <= 4; ++n3) {
                if (n1 + n2 + n3 == 0 || n1 + n2 + n3 > 6) continue;
                Poly at_one = det_derivative(n1, n2, n3).at_identity();
                if ((n1 + n2 + n3) % 2 != 0) at_one = -at_one;
                GammaExpr via_derivative(2, RationalFunction(at_one), HalfInteger(0));
                CHECK(via_derivative == monomial_integral(n1, n2, n3));
            }
        }
    }
}

TEST_CASE("gamma_rk: symmetric-representation example and low rank") {
    Poly s = Poly::x();
    CHECK(gamma_rk(2, 0) ==
          GammaExpr(2, RationalFunction(s * Poly::x_plus(BigRational(1, 2))), HalfInteger(0)));
    CHECK(gamma_rk(2, 1) ==
          GammaExpr(2, RationalFunction(s * Poly::x_plus(BigRational(3, 2))), HalfInteger(0)));
    CHECK(gamma_rk(1, 0) == GammaExpr(2, RationalFunction(s), HalfInteger(0)));
    // Functional equation route for k > r/2.
    CHECK(gamma_rk(2, 2) == gamma_rk(2, 0));
    CHECK(gamma_rk(5, 4) == gamma_rk(5, 1));
    // k = 0, r = 0 is the scalar Gamma.
    CHECK(gamma_rk(0, 0) == GammaExpr::gamma_m(2));
}

TEST_CASE("gamma_operator: twist reduction") {
    GammaOperator op = gamma_operator(HighestWeight(2, 0));
    REQUIRE(op.diag.size() == 3);
    CHECK(op.diag[0] == gamma_rk(2, 0));
    CHECK(op.diag[1] == gamma_rk(2, 1));
    CHECK(op.diag[2] == gamma_rk(2, 0));

    GammaOperator scalar = gamma_operator(HighestWeight(0, 0));
    REQUIRE(scalar.diag.size() == 1);
    CHECK(scalar.diag[0] == GammaExpr::gamma_m(2));

    // (1,1) = det twist of the trivial representation: one entry Gamma_2(s+1).
    GammaOperator det_twist = gamma_operator(HighestWeight(1, 1));
    REQUIRE(det_twist.diag.size() == 1);
    CHECK(det_twist.diag[0] == GammaExpr(2, RationalFunction(1), HalfInteger(1)));

    // (2,1) = st x det: the shift rule moves evaluation points by one.
    GammaOperator st_det = gamma_operator(HighestWeight(2, 1));
    REQUIRE(st_det.diag.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(st_det.diag[k].eval_numeric(2.0) ==
              doctest::Approx(gamma_rk(1, static_cast<long>(k)).eval_numeric(3.0))
                  .epsilon(1e-12));
    }
}

TEST_CASE("nu-independence of the eigenvalue expression") {
    for (long r = 0; r <= 5; ++r) {
        for (long k = 0; k <= r; ++k) {
            Report rep = gamma_rk_independence_check(r, k);
            CHECK(!rep.checks().empty());
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("symmetric-representation matrix-space form") {
    Report rep = symmetric_matrix_form_check();
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks()) {
            if (!c.pass) MESSAGE(c.name);
        }
    }
    CHECK(rep.all_pass());
}

TEST_CASE("invertibility verdicts at rational points") {
    InvertibilityVerdict v1 = invertibility_report(HighestWeight(2, 0), BigRational(3));
    CHECK(v1.invertible);
    CHECK(v1.vanishing.empty());

    InvertibilityVerdict v2 = invertibility_report(HighestWeight(2, 0), BigRational(0));
    CHECK(!v2.invertible);
    CHECK(v2.vanishing == std::vector<long>{0, 1, 2});

    InvertibilityVerdict v3 = invertibility_report(HighestWeight(2, 0), BigRational(-1, 2));
    CHECK(!v3.invertible);
    CHECK(v3.vanishing == std::vector<long>{0, 2});

    // A negative det twist moves shift-product factors into the denominator;
    // evaluation at one of their roots is a genuine pole of the rational part.
    GammaOperator neg = gamma_operator(HighestWeight(-2, -2));
    CHECK(neg.diag[0].rat().den().degree() == 4);
    CHECK_THROWS_AS(invertibility_report(HighestWeight(-2, -2), BigRational(1)), PoleError);
    CHECK(invertibility_report(HighestWeight(-2, -2), BigRational(5)).invertible);
}

TEST_CASE("identity suite: palindrome, divisibility, closed forms, trace") {
    Report rep = gamma_identity_suite(12);
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks()) {
            if (!c.pass) MESSAGE(c.name);
        }
    }
    CHECK(rep.all_pass());
}
