#pragma once

// Storage and uniform-code bounds, evaluated in exact integer/rational
// arithmetic.  Floating point is deliberately absent here: every floor is
// applied once, to an exact rational.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbc/codes.hpp"
#include "cbc/errors.hpp"
#include "cbc/matrix.hpp"

namespace cbc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt floor_rat(const BigRat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;  // round toward -inf
    return q;
}

inline BigInt ceil_rat(const BigRat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

// U_{m,k,s} = (k-1) C(m,s) / C(k-1,s), the threshold quantity of the
// storage lower bound.
inline BigRat storage_threshold(long long m, long long k, long long s) {
    return BigRat(BigInt(k - 1) * binom(m, s), binom(k - 1, s));
}

// Least s in [1, k-1] with n <= U_{m,k,s}.
inline long long minimal_s(long long n, long long k, long long m) {
    if (n < 1 || BigInt(n) > BigInt(k - 1) * binom(m, k - 1))
        throw OutOfRange("n outside [1, (k-1)C(m,k-1)]");
    for (long long s = 1; s <= k - 1; ++s) {
        if (BigRat(n) <= storage_threshold(m, k, s)) return s;
    }
    throw OutOfRange("no s in [1,k-1] satisfies the threshold");
}

// Lower bound N(n,k,m) >= ns - floor((k-s)(U_{m,k,s} - n)/(m-k+1)).
inline BigInt storage_lower(long long n, long long k, long long m) {
    const long long s = minimal_s(n, k, m);
    BigRat inner = BigRat(k - s) * (storage_threshold(m, k, s) - n) / BigRat(m - k + 1);
    return BigInt(n) * s - floor_rat(inner);
}

// Upper bound n(m,c,k) <= floor((k-1) C(m,c) / C(k-1,c)).
inline BigInt uniform_upper(long long m, long long c, long long k) {
    if (c < 1 || c > k - 1 || k - 1 > m) throw OutOfRange("need 1 <= c <= k-1 <= m");
    return floor_rat(BigRat(BigInt(k - 1) * binom(m, c), binom(k - 1, c)));
}

// Johnson-type upper bound on A(m,4,w), the maximum size of a binary
// constant-weight-w code with minimum distance 4.  Complement symmetry
// plus the recursion A(m,4,w) <= floor(m A(m-1,4,w-1) / w).
// A(6,4,2) = 3 is exact.
inline BigInt johnson_upper_A(long long m, long long w) {
    if (w < 0 || w > m) throw OutOfRange("need 0 <= w <= m");
    if (2 * w > m) w = m - w;  // A(m,4,w) = A(m,4,m-w)
    if (w <= 1) return 1;
    if (w == 2) return m / 2;
    return floor_rat(BigRat(BigInt(m) * johnson_upper_A(m - 1, w - 1), w));
}

struct BoundReport {
    std::string name;
    std::map<std::string, long long> inputs;
    BigInt bound = 0;
    BigInt achieved = 0;
    BigInt gap = 0;  // achieved - bound for lower bounds, bound - achieved for upper
    std::string verdict;
};

// Range check for C_TD(q): n <= C(m,k-2) - (m-k+1) A(m,4,k-3).  A enters
// negatively, so substituting the Johnson upper bound can only lower the
// right side; if the inequality still holds, it holds for the true A.
inline BoundReport new_range_check(int q) {
    if (!is_prime_power(q)) throw NotPrimePower(q);
    if (q < 3) throw QTooSmall(q, 3);
    const long long n = static_cast<long long>(q) * q + q - 1;
    const long long k = static_cast<long long>(q) * q - q - 1;
    const long long m = static_cast<long long>(q) * q - q;

    BigInt a_up = (q == 3) ? BigInt(3)  // A(6,4,2) = 3 exactly
                           : johnson_upper_A(m, k - 3);
    BigInt rhs = binom(m, k - 2) - BigInt(m - k + 1) * a_up;

    BoundReport rep;
    rep.name = "new_range";
    rep.inputs = {{"q", q}, {"n", n}, {"k", k}, {"m", m}};
    rep.bound = rhs;
    rep.achieved = n;
    rep.gap = rhs - n;
    rep.verdict = (BigInt(n) <= rhs) ? "holds" : "fails";
    return rep;
}

// Exact N(n,k,m) in the regimes of the known-values table; nullopt outside.
inline std::optional<BigInt> table_exact_N(long long n, long long k, long long m) {
    if (m == n) return BigInt(n);
    if (m == k) return BigInt(k) * n - BigInt(k) * (k - 1);
    if (n == m + 1) return BigInt(m + k);
    if (n == m + 2) {
        // smallest u with u^2 >= k+1
        long long u = 0;
        while (u * u < k + 1) ++u;
        if (m + 1 - k >= u) {
            long long t = 0;  // smallest t with t^2 >= 4(k+1), i.e. ceil(2 sqrt(k+1))
            while (t * t < 4 * (k + 1)) ++t;
            return BigInt(m + k - 2 + t);
        }
        return BigInt(2 * m - 2) + ceil_rat(BigRat(1) + BigRat(k + 1, m - k + 1));
    }
    const BigInt hi = BigInt(k - 1) * binom(m, k - 1);
    if (BigInt(n) >= hi) return BigInt(k) * n - hi;
    if (BigInt(n) >= binom(m, k - 2))
        return BigInt(n) * (k - 1) - floor_rat(BigRat(hi - n, m - k + 1));
    return std::nullopt;
}

// Optimality of a constructed code: non-uniform codes compare N against
// the storage lower bound, uniform codes compare n against the uniform
// upper bound.
inline std::vector<BoundReport> optimality_report(const IncidenceMatrix& mat,
                                                  long long claimed_k) {
    CodeParams p = params_of(mat, claimed_k);
    std::vector<BoundReport> out;
    if (p.c) {
        BoundReport rep;
        rep.name = "uniform_upper";
        rep.inputs = {{"m", p.m}, {"c", *p.c}, {"k", claimed_k}, {"n", p.n}};
        rep.bound = uniform_upper(p.m, *p.c, claimed_k);
        rep.achieved = p.n;
        rep.gap = rep.bound - rep.achieved;
        rep.verdict = (rep.gap == 0) ? "optimal" : "gap=" + rep.gap.str();
        out.push_back(std::move(rep));
    } else {
        BoundReport rep;
        rep.name = "storage_lower";
        rep.inputs = {{"n", p.n}, {"k", claimed_k}, {"m", p.m}, {"N", p.N}};
        rep.bound = storage_lower(p.n, claimed_k, p.m);
        rep.achieved = p.N;
        rep.gap = rep.achieved - rep.bound;
        rep.verdict = (rep.gap == 0) ? "optimal" : "gap=" + rep.gap.str();
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace cbc
