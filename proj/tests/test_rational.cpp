#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vvgamma/rational.hpp"

using namespace vvgamma;

namespace {

BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return {num(rng), den(rng)};
}

} // namespace

TEST_CASE("BigRational canonical representation") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(-2, -4) == BigRational(1, 2));
    CHECK(BigRational(2, -4).to_string() == "-1/2");
    CHECK(BigRational(0, 7).to_string() == "0");
    CHECK(BigRational(6, 3).is_integer());
    CHECK(BigRational(6, 3).denominator() == 1);
}

TEST_CASE("BigRational parsing and printing round-trip") {
    for (const char* s : {"0", "1", "-1", "3/7", "-22/7", "123456789012345678901/2"}) {
        CHECK(BigRational::from_string(s).to_string() == s);
    }
    CHECK_THROWS_AS(BigRational::from_string("not-a-number"), DomainError);
    CHECK_THROWS_AS(BigRational(1, 0), DomainError);
}

TEST_CASE("BigRational field operations") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigRational a = random_rational(rng);
        BigRational b = random_rational(rng);
        BigRational c = random_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == BigRational(1));
        }
    }
    CHECK_THROWS_AS(BigRational(0).inverse(), DomainError);
}

TEST_CASE("GaussianRational field axioms") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        GaussianRational a(random_rational(rng), random_rational(rng));
        GaussianRational b(random_rational(rng), random_rational(rng));
        GaussianRational c(random_rational(rng), random_rational(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == GaussianRational(1));
        }
    }
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(GaussianRational::i_power(2) == GaussianRational(-1));
    CHECK(GaussianRational::i_power(-1) == -GaussianRational::i());
    CHECK(GaussianRational::i_power(7) == GaussianRational::i_power(3));
}

TEST_CASE("HalfInteger arithmetic is closed and exact") {
    HalfInteger h = HalfInteger::half();
    CHECK((h + h) == HalfInteger(1));
    CHECK((h + HalfInteger(2)).to_rational() == BigRational(5, 2));
    CHECK(!h.is_integer());
    CHECK((h + h).is_integer());
    CHECK(HalfInteger::from_twice(mpz_class(-3)).to_string() == "-3/2");
    CHECK((-h).to_double() == -0.5);
}
