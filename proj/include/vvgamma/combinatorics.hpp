#pragma once

#include <gmpxx.h>

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "vvgamma/poly.hpp"
#include "vvgamma/report.hpp"

namespace vvgamma {

/// Binomial coefficient with the out-of-range convention C(n,k) = 0 for
/// k < 0, n < 0 or k > n.
mpz_class binomial(long n, long k);

/// (2n-1)!! style double factorial of an odd/even argument; (-1)!! = 1.
mpz_class double_factorial(long n);

mpz_class factorial(long n);

/// Memoized triangle numbers a_{n,m}:
///   a_{n,0} = 1,  a_{0,m} = 0 for m > 0,
///   a_{n,m} = (n - 2(m-1)) a_{n-1,m-1} + a_{n-1,m},
/// plus the stipulated special case a_{-1,0} = 1.
/// Interior values (n >= 1, 1 <= m <= n) are stored densely row by row;
/// everything above the diagonal is zero by the staircase property.
/// Concurrent readers share the lock; fills are exclusive.
class TriangleTable {
public:
    mpz_class value(long n, long m);

    /// Re-checks the recursion for every memoized entry.
    bool recheck_recursion();

private:
    void fill_to_row(long n);  // caller holds the exclusive lock
    std::vector<std::vector<mpz_class>> rows_;  // rows_[n-1][m-1] = a_{n,m}
    std::shared_mutex mutex_;
};

/// Process-wide table used by the free functions below.
TriangleTable& triangle_table();

/// a_{n,m}; accepts n = -1 with m = 0 (stipulated value 1).
mpz_class triangle(long n, long m);

/// Verifies, for all indices reachable below n_max, the closed forms
///   (i)   a_{n,1} = n(n+1)/2
///   (ii)  a_{n,2} = n(n+1)(n-1)(n-2)/8
///   (iii) a_{n,m} = 0 for m > floor((n+1)/2)
///   (iv)  a_{2v-1,v} = a_{2(v-1),v-1}
/// and the special values
///   (a)   a_{2u-1,u}   = (2u-1)!!
///   (b)   a_{2u-1,u-1} = u (2u-1)!!
///   (c)   a_{2u,u-1}   = (u/3) (2u+1)!!
Report verify_triangle_closed_forms(long n_max);

/// C_[q](x) = x (x + 1/2) ... (x + (q-1)/2); degree q.
Poly c_poly(long q);

/// c_k(nu) = sum_j (-1)^j C(r-k, j) C(k, nu-j); c_k(0) = 1.
mpz_class c_k_nu(long r, long k, long nu);

/// Exact check of
///   (mu!/2^r) sum_{j=mu}^{r-mu} C(r,j) C(r-j,mu) C(j,mu) = C(r,2mu) a_{2mu-1,mu} / 2^mu
/// for all 0 <= mu <= floor(r/2), r <= r_max.
Report binomial_identity_check(long r_max);

} // namespace vvgamma
