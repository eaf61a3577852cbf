#pragma once

#include <array>
#include <vector>

#include "vvgamma/combinatorics.hpp"
#include "vvgamma/rational.hpp"

namespace vvgamma {

/// Dominant weight (l1 >= l2) of GL(2); r = l1 - l2, absolute weight l2.
struct HighestWeight {
    long l1 = 0;
    long l2 = 0;

    HighestWeight() = default;
    HighestWeight(long a, long b) : l1(a), l2(b) {
        if (l1 < l2) throw DomainError("HighestWeight: dominance l1 >= l2 violated");
    }
    long r() const { return l1 - l2; }
    long absolute_weight() const { return l2; }
};

/// Dense matrix over Q(i) with exact arithmetic; sized at runtime.
class GMat {
public:
    GMat() = default;
    GMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static GMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend GMat operator*(const GMat& a, const GMat& b);
    friend bool operator==(const GMat& a, const GMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const GMat& a, const GMat& b) { return !(a == b); }

    std::vector<GaussianRational> column(std::size_t j) const;

    /// Exact inverse by Gauss-Jordan elimination; throws DomainError when singular.
    GMat inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

enum class BasisTag { Monomial, Weight };

/// Matrix of rho_r(g) on homogeneous degree-r polynomials in (z1, z2).
/// Column nu holds the coordinates of the image of z1^{r-nu} z2^nu in the
/// monomial basis (nu ascending).  rho_r(g) P(z) = P(z . g) with z a row
/// vector, so rho_r(gh) = rho_r(g) rho_r(h).
struct RepMatrix {
    long r = 0;
    BasisTag basis = BasisTag::Monomial;
    GMat entries;
};

/// 2x2 matrix over Q(i), row-major {a, b; c, d}.
struct Mat2 {
    GaussianRational a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(GaussianRational x, GaussianRational y) { return {std::move(x), 0, 0, std::move(y)}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

/// Symmetric 2x2 matrix with exact rational entries.
struct SymMat2 {
    BigRational y11, y22, y12;
    Mat2 as_mat2() const { return {y11, y12, y12, y22}; }
};

RepMatrix rho_matrix(long r, const Mat2& g);

/// Coordinates of the SO(2)-weight vectors V_k, k = 0..r, in the monomial
/// basis: column k has entry i^nu c_k(nu) at row nu.  V_k has weight -r+2k.
struct WeightBasis {
    long r = 0;
    GMat columns;  // (r+1) x (r+1)
};

WeightBasis weight_basis(long r);

/// P_k(nu, Y): the monomial-nu coordinate of rho_r(Y) V_k divided by i^nu,
/// as the explicit j-sum over (Y11 -+ iY12), (Y22 +- iY12) factors.
GaussianRational p_k_value(long r, long k, long nu, const SymMat2& y);

} // namespace vvgamma
