#include "vvgamma/gl2_rep.hpp"

#include <algorithm>

namespace vvgamma {

GMat GMat::identity(std::size_t n) {
    GMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

GMat operator*(const GMat& a, const GMat& b) {
    if (a.cols_ != b.rows_) throw DomainError("GMat: dimension mismatch");
    GMat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

std::vector<GaussianRational> GMat::column(std::size_t j) const {
    std::vector<GaussianRational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

GMat GMat::inverse() const {
    if (rows_ != cols_) throw DomainError("GMat: inverse of a non-square matrix");
    const std::size_t n = rows_;
    GMat a(*this);
    GMat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw DomainError("GMat: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        GaussianRational d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Coefficients of (p z1 + q z2)^n in the monomial basis, ascending z2-power.
std::vector<GaussianRational> binomial_expand(const GaussianRational& p,
                                              const GaussianRational& q, long n) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
    // c[j] = C(n,j) p^{n-j} q^j, with the powers built incrementally.
    std::vector<GaussianRational> ppow(static_cast<std::size_t>(n) + 1, GaussianRational(1));
    std::vector<GaussianRational> qpow(static_cast<std::size_t>(n) + 1, GaussianRational(1));
    for (long j = 1; j <= n; ++j) {
        ppow[static_cast<std::size_t>(j)] = ppow[static_cast<std::size_t>(j - 1)] * p;
        qpow[static_cast<std::size_t>(j)] = qpow[static_cast<std::size_t>(j - 1)] * q;
    }
    for (long j = 0; j <= n; ++j) {
        c[static_cast<std::size_t>(j)] =
            GaussianRational(BigRational(binomial(n, j))) *
            ppow[static_cast<std::size_t>(n - j)] * qpow[static_cast<std::size_t>(j)];
    }
    return c;
}

} // namespace

RepMatrix rho_matrix(long r, const Mat2& g) {
    if (r < 0) throw DomainError("rho_matrix: r must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    RepMatrix m{r, BasisTag::Monomial, GMat(dim, dim)};
    // (z.g)_1 = g11 z1 + g21 z2,  (z.g)_2 = g12 z1 + g22 z2.
    for (long nu = 0; nu <= r; ++nu) {
        auto f1 = binomial_expand(g.a, g.c, r - nu);   // ((z.g)_1)^{r-nu}
        auto f2 = binomial_expand(g.b, g.d, nu);       // ((z.g)_2)^{nu}
        for (std::size_t i = 0; i < f1.size(); ++i) {
            if (f1[i].is_zero()) continue;
            for (std::size_t j = 0; j < f2.size(); ++j) {
                m.entries.at(i + j, static_cast<std::size_t>(nu)) += f1[i] * f2[j];
            }
        }
    }
    return m;
}

WeightBasis weight_basis(long r) {
    if (r < 0) throw DomainError("weight_basis: r must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    WeightBasis b{r, GMat(dim, dim)};
    for (long k = 0; k <= r; ++k) {
        for (long nu = 0; nu <= r; ++nu) {
            b.columns.at(static_cast<std::size_t>(nu), static_cast<std::size_t>(k)) =
                GaussianRational::i_power(nu) * GaussianRational(BigRational(c_k_nu(r, k, nu)));
        }
    }
    return b;
}

GaussianRational p_k_value(long r, long k, long nu, const SymMat2& y) {
    if (k < 0 || k > r || nu < 0 || nu > r) {
        throw DomainError("p_k_value: indices out of range");
    }
    const GaussianRational i = GaussianRational::i();
    const GaussianRational f_minus = GaussianRational(y.y11) - i * GaussianRational(y.y12);
    const GaussianRational f_plus = GaussianRational(y.y11) + i * GaussianRational(y.y12);
    const GaussianRational g_plus = GaussianRational(y.y22) + i * GaussianRational(y.y12);
    const GaussianRational g_minus = GaussianRational(y.y22) - i * GaussianRational(y.y12);

    auto power = [](const GaussianRational& base, long e) {
        GaussianRational p(1);
        for (long t = 0; t < e; ++t) p *= base;
        return p;
    };

    GaussianRational sum(0);
    for (long j = 0; j <= std::min(r - k, nu); ++j) {
        if (k + j - nu < 0) continue;  // C(k, nu-j) = 0 there
        GaussianRational term =
            GaussianRational(BigRational(mpz_class(binomial(r - k, j) * binomial(k, nu - j))));
        if (j % 2 != 0) term = -term;
        term *= power(f_minus, r - k - j);
        term *= power(f_plus, k + j - nu);
        term *= power(g_plus, j);
        term *= power(g_minus, nu - j);
        sum += term;
    }
    return sum;
}

} // namespace vvgamma
