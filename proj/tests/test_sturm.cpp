#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vvgamma/sturm.hpp"

using namespace vvgamma;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("c_rho_scalar: display values and domain") {
    // kappa = 3: (4pi)^{-4} (3/2) Gamma_2(3/2).
    ExactGammaValue v = c_rho_scalar(3);
    CHECK(v.coeff == BigRational(3, 2));
    CHECK(v.gamma_arg == BigRational(3, 2));
    CHECK(v.four_pi_exp == BigRational(-4));

    // kappa = 2 hits the Gamma_2(1/2) pole.
    CHECK_THROWS_AS(c_rho_scalar(2), DomainError);
    CHECK_THROWS_AS(c_rho_scalar(1), DomainError);
}

TEST_CASE("c_rho two-route equality for kappa in [3,10]") {
    Report rep = c_rho_two_route_check(10);
    CHECK(rep.all_pass());
}

TEST_CASE("maass_terms coefficients") {
    MaassTermSet m1 = maass_terms(1);
    CHECK(m1.terms.size() == 4);
    // k=1: (k+1)(k-1/2) = 1; -4pi(k-1/2) = -2pi meaning coeff -1/2 on (4pi)^1.
    CHECK(m1.terms[0].coeff == BigRational(1));
    CHECK(m1.terms[0].four_pi_power == 0);
    CHECK(m1.terms[1].coeff == BigRational(-1, 2));
    CHECK(m1.terms[1].four_pi_power == 1);
    CHECK(m1.terms[2].coeff == BigRational(1));
    CHECK(m1.terms[2].four_pi_power == 2);
    CHECK(m1.terms[3].coeff == BigRational(-1));
    CHECK(m1.terms[3].four_pi_power == 1);

    MaassTermSet m2 = maass_terms(2);
    CHECK(m2.terms[0].coeff == BigRational(9, 2));
    CHECK_THROWS_AS(maass_terms(0), DomainError);
}

TEST_CASE("sturm_terms: display values") {
    SturmTermSet t1 = sturm_terms(1);
    // t3 at s=0, k=1: (4pi)^{-2} (3/2) Gamma_2(3/2).
    ExactGammaValue v = value_at(t1.t3, BigRational(0));
    CHECK(v.coeff == BigRational(3, 2));
    CHECK(v.gamma_arg == BigRational(3, 2));
    CHECK(v.four_pi_exp == BigRational(-2));

    // t1/t2 = -(k+1)/(2(s+k)) as a rational function.
    for (long k = 1; k <= 6; ++k) {
        SturmTermSet t = sturm_terms(k);
        RationalFunction ratio = t.t1.rat() / t.t2.rat();
        RationalFunction expected(Poly(BigRational(-(k + 1))),
                                  BigRational(2) * Poly::x_plus(BigRational(k)));
        CHECK(ratio == expected);
    }

    // t3 - t4 = (s+k-1/2) (4pi)^{-2(s+k)} Gamma_2(s+k+1/2), checked
    // symbolically and numerically.
    for (long k = 1; k <= 4; ++k) {
        SturmTermSet t = sturm_terms(k);
        GammaExpr diff = add(t.t3, -t.t4);
        GammaExpr expected(2, RationalFunction(Poly::x_plus(BigRational(2 * k - 1, 2))),
                           HalfInteger::from_twice(2 * k + 1), BigRational(-2),
                           BigRational(-2 * k));
        CHECK(diff == expected);
        CHECK(diff.eval_numeric(0.7) ==
              doctest::Approx(t.t3.eval_numeric(0.7) - t.t4.eval_numeric(0.7)).epsilon(1e-12));
    }
}

TEST_CASE("two-route Sturm terms for k <= 10") {
    Report rep = sturm_two_route_check(10);
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks()) {
            if (!c.pass) MESSAGE(c.name);
        }
    }
    CHECK(rep.all_pass());
}

TEST_CASE("combine_b: the k=1 collapse and the numerator identity") {
    // k=1: (4pi)^{-2(s+1)} (s - 1/2) Gamma_2(s + 3/2).
    GammaExpr b1 = combine_b(1);
    GammaExpr expected(2, RationalFunction(Poly::x_plus(BigRational(-1, 2))),
                       HalfInteger::from_twice(3), BigRational(-2), BigRational(-2));
    CHECK(b1 == expected);
    // Numeric confirmation at s = 1.
    CHECK(b1.eval_numeric(1.0) == doctest::Approx(expected.eval_numeric(1.0)).epsilon(1e-13));
    double direct = std::pow(4 * kPi, -4.0) * 0.5 * gamma_m_numeric(2, 2.5);
    CHECK(b1.eval_numeric(1.0) == doctest::Approx(direct).epsilon(1e-12));

    Report rep = combine_b_numerator_check(20);
    CHECK(rep.all_pass());
}

TEST_CASE("phantom_limit: dichotomy values") {
    PiMultiple p1 = phantom_limit(1);
    CHECK(p1.coeff == BigRational(-8));
    CHECK(p1.pi_power == 2);
    CHECK(p1.to_string() == "-8*pi^2");
    CHECK(p1.to_double() == doctest::Approx(-16.0 * kPi * kPi / 2).epsilon(1e-15));

    CHECK(phantom_limit(2).is_zero());
    CHECK(phantom_limit(7).is_zero());
    CHECK(phantom_limit(2).to_string() == "0");
    CHECK_THROWS_AS(phantom_limit(0), DomainError);
}

TEST_CASE("theorem verdict") {
    Report minimal = theorem_verdict(2);
    CHECK(minimal.all_pass());

    Report full = theorem_verdict(20);
    CHECK(full.all_pass());
    CHECK(full.checks().size() == 20);
    // The k=1 entry carries the weight and Harish-Chandra parameter.
    CHECK(full.checks()[0].detail.find("(4,3)") != std::string::npos);
    CHECK(full.checks()[0].detail.find("(3,1)") != std::string::npos);
    CHECK_THROWS_AS(theorem_verdict(1), DomainError);
}
