#include "vvgamma/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "vvgamma/errors.hpp"

namespace vvgamma {

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class double_factorial(long n) {
    if (n <= 0) return 1;  // (-1)!! = 1, 0!! = 1
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

// Base cases of the triangle recursion; entries above the diagonal m > n
// are zero (subsumed by the staircase property, provable by induction).
// Only interior values (n >= 1, 1 <= m <= n) live in the memo table.
bool triangle_base(long n, long m, mpz_class& out) {
    if (m == 0) {
        out = 1;  // includes the stipulated a_{-1,0} = 1
        return true;
    }
    if (n <= 0) {
        out = 0;
        return true;
    }
    if (m > n) {
        out = 0;
        return true;
    }
    return false;
}

} // namespace

mpz_class TriangleTable::value(long n, long m) {
    if (n < -1 || m < 0 || (n == -1 && m != 0)) {
        throw DomainError("triangle: index out of range");
    }
    mpz_class base;
    if (triangle_base(n, m, base)) return base;
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(n) <= rows_.size()) {
            return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
        }
    }
    std::unique_lock lock(mutex_);
    fill_to_row(n);
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
}

void TriangleTable::fill_to_row(long n) {
    auto get = [this](long nn, long mm) {
        mpz_class base;
        if (triangle_base(nn, mm, base)) return base;
        return rows_[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(mm - 1)];
    };
    for (long nn = static_cast<long>(rows_.size()) + 1; nn <= n; ++nn) {
        std::vector<mpz_class> row(static_cast<std::size_t>(nn));
        for (long mm = 1; mm <= nn; ++mm) {
            row[static_cast<std::size_t>(mm - 1)] =
                mpz_class(nn - 2 * (mm - 1)) * get(nn - 1, mm - 1) + get(nn - 1, mm);
        }
        rows_.push_back(std::move(row));
    }
}

bool TriangleTable::recheck_recursion() {
    std::shared_lock lock(mutex_);
    auto get = [this](long nn, long mm) {
        mpz_class base;
        if (triangle_base(nn, mm, base)) return base;
        return rows_[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(mm - 1)];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            const long m = static_cast<long>(j) + 1;
            if (rows_[i][j] != mpz_class(n - 2 * (m - 1)) * get(n - 1, m - 1) + get(n - 1, m)) {
                return false;
            }
        }
    }
    return true;
}

TriangleTable& triangle_table() {
    static TriangleTable table;
    return table;
}

mpz_class triangle(long n, long m) {
    return triangle_table().value(n, m);
}

Report verify_triangle_closed_forms(long n_max) {
    Report rep;
    if (n_max < 2) throw DomainError("verify_triangle_closed_forms: n_max must be >= 2");

    bool i_ok = true, ii_ok = true, iii_ok = true, iv_ok = true;
    std::ostringstream bad;
    for (long n = 0; n <= n_max; ++n) {
        if (triangle(n, 1) != mpz_class(n) * (n + 1) / 2) {
            i_ok = false;
            bad << " (i) n=" << n;
        }
        if (triangle(n, 2) * 8 != mpz_class(n) * (n + 1) * (n - 1) * (n - 2)) {
            ii_ok = false;
            bad << " (ii) n=" << n;
        }
        for (long m = (n + 1) / 2 + 1; m <= n + 2; ++m) {
            if (triangle(n, m) != 0) {
                iii_ok = false;
                bad << " (iii) n=" << n << ",m=" << m;
            }
        }
    }
    for (long v = 1; 2 * v - 1 <= n_max; ++v) {
        if (triangle(2 * v - 1, v) != triangle(2 * (v - 1), v - 1)) {
            iv_ok = false;
            bad << " (iv) v=" << v;
        }
    }
    rep.add("triangle (i) a_{n,1} = n(n+1)/2", i_ok);
    rep.add("triangle (ii) a_{n,2} = n(n+1)(n-1)(n-2)/8", ii_ok);
    rep.add("triangle (iii) vanishing above the staircase", iii_ok);
    rep.add("triangle (iv) a_{2v-1,v} = a_{2(v-1),v-1}", iv_ok);

    bool a_ok = true, b_ok = true, c_ok = true;
    for (long mu = 1; 2 * mu - 1 <= n_max; ++mu) {
        if (triangle(2 * mu - 1, mu) != double_factorial(2 * mu - 1)) a_ok = false;
        if (triangle(2 * mu - 1, mu - 1) != mpz_class(mu) * double_factorial(2 * mu - 1)) {
            b_ok = false;
        }
        if (2 * mu <= n_max &&
            triangle(2 * mu, mu - 1) * 3 != mpz_class(mu) * double_factorial(2 * mu + 1)) {
            c_ok = false;
        }
    }
    rep.add("special values (a) a_{2u-1,u} = (2u-1)!!", a_ok);
    rep.add("special values (b) a_{2u-1,u-1} = u(2u-1)!!", b_ok);
    rep.add("special values (c) a_{2u,u-1} = (u/3)(2u+1)!!", c_ok);

    rep.add("memoized entries re-satisfy the recursion", triangle_table().recheck_recursion());

    if (!bad.str().empty()) {
        rep.add("triangle closed-form violations", false, bad.str());
    }
    return rep;
}

Poly c_poly(long q) {
    if (q < 1) throw DomainError("c_poly: q must be >= 1");
    Poly p(1);
    for (long j = 0; j < q; ++j) {
        p *= Poly::x_plus(BigRational(j, 2));
    }
    return p;
}

mpz_class c_k_nu(long r, long k, long nu) {
    if (k < 0 || k > r || nu < 0 || nu > r) {
        throw DomainError("c_k_nu: indices out of range");
    }
    mpz_class sum = 0;
    for (long j = 0; j <= std::min(r - k, nu); ++j) {
        mpz_class term = binomial(r - k, j) * binomial(k, nu - j);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

Report binomial_identity_check(long r_max) {
    Report rep;
    if (r_max < 1) throw DomainError("binomial_identity_check: r_max must be >= 1");
    bool ok = true;
    std::ostringstream bad;
    for (long r = 1; r <= r_max; ++r) {
        for (long mu = 0; mu <= r / 2; ++mu) {
            // Both sides multiplied by 2^r to stay in integers:
            // mu! sum_j C(r,j)C(r-j,mu)C(j,mu)  vs  C(r,2mu) a_{2mu-1,mu} 2^{r-mu}.
            mpz_class lhs = 0;
            for (long j = mu; j <= r - mu; ++j) {
                lhs += binomial(r, j) * binomial(r - j, mu) * binomial(j, mu);
            }
            lhs *= factorial(mu);
            mpz_class pow2;
            mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(r - mu));
            mpz_class rhs = binomial(r, 2 * mu) * triangle(2 * mu - 1, mu) * pow2;
            if (lhs != rhs) {
                ok = false;
                bad << " r=" << r << ",mu=" << mu;
            }
        }
    }
    rep.add("binomial identity (coefficient comparison)", ok, ok ? "" : bad.str());
    return rep;
}

} // namespace vvgamma
