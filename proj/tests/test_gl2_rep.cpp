#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "vvgamma/gl2_rep.hpp"

using namespace vvgamma;

namespace {

Mat2 random_int_mat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-4, 4);
    return {GaussianRational(BigRational(d(rng))), GaussianRational(BigRational(d(rng))),
            GaussianRational(BigRational(d(rng))), GaussianRational(BigRational(d(rng)))};
}

// Test-only numeric representation matrix for arbitrary real g, built by
// direct polynomial expansion of P(z . g); independent of rho_matrix.
std::vector<std::vector<std::complex<double>>> rho_numeric(long r, double g11, double g12,
                                                           double g21, double g22) {
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<std::complex<double>>> m(dim,
                                                     std::vector<std::complex<double>>(dim, 0.0));
    auto expand = [](double p, double q, long n) {
        std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
        for (long j = 0; j <= n; ++j) {
            double b = 1.0;
            for (long t = 0; t < j; ++t) b *= static_cast<double>(n - t) / (t + 1);
            c[static_cast<std::size_t>(j)] = b * std::pow(p, n - j) * std::pow(q, j);
        }
        return c;
    };
    for (long nu = 0; nu <= r; ++nu) {
        auto f1 = expand(g11, g21, r - nu);
        auto f2 = expand(g12, g22, nu);
        for (std::size_t i = 0; i < f1.size(); ++i) {
            for (std::size_t j = 0; j < f2.size(); ++j) {
                m[i + j][static_cast<std::size_t>(nu)] += f1[i] * f2[j];
            }
        }
    }
    return m;
}

} // namespace

TEST_CASE("HighestWeight dominance") {
    HighestWeight l(3, 1);
    CHECK(l.r() == 2);
    CHECK(l.absolute_weight() == 1);
    CHECK_THROWS_AS(HighestWeight(0, 1), DomainError);
}

TEST_CASE("rho_matrix: identity, diagonal, degree one") {
    CHECK(rho_matrix(3, Mat2::identity()).entries == GMat::identity(4));

    // r=2, diag(a,d) -> diag(a^2, ad, d^2)
    Mat2 g = Mat2::diag(GaussianRational(BigRational(2)), GaussianRational(BigRational(3)));
    RepMatrix m = rho_matrix(2, g);
    CHECK(m.entries.at(0, 0) == GaussianRational(BigRational(4)));
    CHECK(m.entries.at(1, 1) == GaussianRational(BigRational(6)));
    CHECK(m.entries.at(2, 2) == GaussianRational(BigRational(9)));
    CHECK(m.entries.at(0, 1).is_zero());

    // r=1: with the row-vector substitution P(z -> z.g) the matrix is g
    // itself, which is what the homomorphism property forces.
    Mat2 h{GaussianRational(BigRational(1)), GaussianRational(BigRational(2)),
           GaussianRational(BigRational(3)), GaussianRational(BigRational(4))};
    RepMatrix m1 = rho_matrix(1, h);
    CHECK(m1.entries.at(0, 0) == h.a);
    CHECK(m1.entries.at(0, 1) == h.b);
    CHECK(m1.entries.at(1, 0) == h.c);
    CHECK(m1.entries.at(1, 1) == h.d);
}

TEST_CASE("rho_matrix multiplicativity on random integer matrices") {
    std::mt19937_64 rng(101);
    for (long r = 0; r <= 6; ++r) {
        for (int trial = 0; trial < 20; ++trial) {
            Mat2 g = random_int_mat(rng);
            Mat2 h = random_int_mat(rng);
            GMat lhs = rho_matrix(r, g).entries * rho_matrix(r, h).entries;
            GMat rhs = rho_matrix(r, g * h).entries;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weight_basis: low-rank columns and normalization") {
    // r=1: V_0 = z1 - i z2, V_1 = z1 + i z2.
    WeightBasis b1 = weight_basis(1);
    CHECK(b1.columns.at(0, 0) == GaussianRational(1));
    CHECK(b1.columns.at(1, 0) == -GaussianRational::i());
    CHECK(b1.columns.at(0, 1) == GaussianRational(1));
    CHECK(b1.columns.at(1, 1) == GaussianRational::i());

    // r=2, k=1: (z1-iz2)(z1+iz2) = z1^2 + z2^2 -> coordinates (1, 0, 1).
    WeightBasis b2 = weight_basis(2);
    CHECK(b2.columns.at(0, 1) == GaussianRational(1));
    CHECK(b2.columns.at(1, 1).is_zero());
    CHECK(b2.columns.at(2, 1) == GaussianRational(1));

    // Row nu=0 of every column is 1; the basis matrix is invertible.
    for (long r = 0; r <= 6; ++r) {
        WeightBasis b = weight_basis(r);
        for (long k = 0; k <= r; ++k) {
            CHECK(b.columns.at(0, static_cast<std::size_t>(k)) == GaussianRational(1));
        }
        GMat inv = b.columns.inverse();
        CHECK(inv * b.columns == GMat::identity(static_cast<std::size_t>(r) + 1));
    }
}

TEST_CASE("SO(2) eigen-relation: rho(k_theta) V_k = e^{i theta (2k-r)} V_k") {
    // Phase convention fixed by the r=1 case with k_theta = (c s; -s c).
    for (long r : {1L, 2L, 3L, 5L}) {
        WeightBasis b = weight_basis(r);
        for (double theta : {M_PI / 7.0, 1.0}) {
            double c = std::cos(theta);
            double s = std::sin(theta);
            auto m = rho_numeric(r, c, s, -s, c);
            for (long k = 0; k <= r; ++k) {
                std::complex<double> phase =
                    std::exp(std::complex<double>(0.0, theta * (2.0 * k - r)));
                for (long nu = 0; nu <= r; ++nu) {
                    std::complex<double> lhs = 0.0;
                    for (long mu = 0; mu <= r; ++mu) {
                        const GaussianRational& v =
                            b.columns.at(static_cast<std::size_t>(mu), static_cast<std::size_t>(k));
                        lhs += m[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] *
                               std::complex<double>(v.real().to_double(), v.imag().to_double());
                    }
                    const GaussianRational& w =
                        b.columns.at(static_cast<std::size_t>(nu), static_cast<std::size_t>(k));
                    std::complex<double> rhs =
                        phase * std::complex<double>(w.real().to_double(), w.imag().to_double());
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("p_k_value: known values") {
    // Y = identity gives c_k(nu).
    SymMat2 eye{BigRational(1), BigRational(1), BigRational(0)};
    for (long r = 0; r <= 5; ++r) {
        for (long k = 0; k <= r; ++k) {
            for (long nu = 0; nu <= r; ++nu) {
                CHECK(p_k_value(r, k, nu, eye) ==
                      GaussianRational(BigRational(c_k_nu(r, k, nu))));
            }
        }
    }
    // r=1, k=0, nu=0: Y11 - i Y12.
    SymMat2 y{BigRational(3), BigRational(5), BigRational(2)};
    CHECK(p_k_value(1, 0, 0, y) ==
          GaussianRational(BigRational(3)) - GaussianRational::i() * GaussianRational(BigRational(2)));
}

TEST_CASE("p_k_value agrees with the matrix route exactly") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<long> den(1, 4);
    for (long r = 0; r <= 5; ++r) {
        WeightBasis b = weight_basis(r);
        for (int trial = 0; trial < 5; ++trial) {
            SymMat2 y{BigRational(d(rng), den(rng)), BigRational(d(rng), den(rng)),
                      BigRational(d(rng), den(rng))};
            RepMatrix rho = rho_matrix(r, y.as_mat2());
            for (long k = 0; k <= r; ++k) {
                for (long nu = 0; nu <= r; ++nu) {
                    // (rho(Y) . V_k)_nu / i^nu
                    GaussianRational coord(0);
                    for (long mu = 0; mu <= r; ++mu) {
                        coord += rho.entries.at(static_cast<std::size_t>(nu),
                                                static_cast<std::size_t>(mu)) *
                                 b.columns.at(static_cast<std::size_t>(mu),
                                              static_cast<std::size_t>(k));
                    }
                    coord = coord / GaussianRational::i_power(nu);
                    CHECK(coord == p_k_value(r, k, nu, y));
                }
            }
        }
    }
}
