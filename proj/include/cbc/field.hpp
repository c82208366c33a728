#pragma once

// Finite field arithmetic GF(p^e) via precomputed index tables.
// Element index encodes the polynomial representation in base p:
// index = c0 + c1*p + ... + c_{e-1}*p^{e-1}.  Index 0 is the additive
// identity, index 1 the multiplicative identity.

#include <cstdint>
#include <optional>
#include <vector>

#include "cbc/errors.hpp"

namespace cbc {

namespace detail {

// Returns (p, e) if q = p^e for a prime p, e >= 1.  Trial factorization,
// intended for q <= 2^20.
inline std::optional<std::pair<int, int>> prime_power_split(long long q) {
    if (q < 2) return std::nullopt;
    long long p = 0;
    long long x = q;
    for (long long d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            p = d;
            while (x % d == 0) x /= d;
            if (x != 1) return std::nullopt;  // two distinct prime factors
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int e = 0;
    for (long long t = q; t > 1; t /= p) ++e;
    return std::make_pair(static_cast<int>(p), e);
}

}  // namespace detail

class FieldTable {
public:
    int p = 0;
    int e = 0;
    int q = 0;
    std::vector<int> irreducible;  // length e+1, monic, coefficients in [0,p)

    int add(int a, int b) const {
        if (!add_table_.empty()) return add_table_[a * q + b];
        return static_cast<int>((static_cast<long long>(a) + b) % q);
    }
    int mul(int a, int b) const {
        if (!mul_table_.empty()) return mul_table_[a * q + b];
        return static_cast<int>(static_cast<long long>(a) * b % q);
    }
    int neg(int a) const { return a == 0 ? 0 : sub(0, a); }
    int sub(int a, int b) const {
        if (!add_table_.empty()) {
            // locate -b by scanning its row once; tables are small
            for (int x = 0; x < q; ++x)
                if (add(b, x) == 0) return add(a, x);
        }
        return static_cast<int>(((static_cast<long long>(a) - b) % q + q) % q);
    }
    int inv(int a) const {
        for (int x = 1; x < q; ++x)
            if (mul(a, x) == 1) return x;
        throw OutOfRange("no inverse for 0");
    }

    const std::vector<int>& add_table() const { return add_table_; }
    const std::vector<int>& mul_table() const { return mul_table_; }

    friend FieldTable field_new(long long q);

private:
    std::vector<int> add_table_;
    std::vector<int> mul_table_;
};

namespace detail {

// Polynomials over GF(p), coefficient vectors, lowest degree first.
inline std::vector<int> poly_decode(long long idx, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return c;
}

inline int poly_deg(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = poly_deg(m);
    int da = poly_deg(a);
    int inv_lead = 0;
    for (int x = 1; x < p; ++x)
        if (m[dm] * x % p == 1) inv_lead = x;
    while (da >= dm) {
        int coef = a[da] * inv_lead % p;
        for (int i = 0; i <= dm; ++i) {
            a[da - dm + i] = ((a[da - dm + i] - coef * m[i]) % p + p) % p;
        }
        da = poly_deg(a);
    }
    return a;
}

inline std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                    const std::vector<int>& m, int p) {
    std::vector<int> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

inline bool poly_is_zero(const std::vector<int>& a) { return poly_deg(a) < 0; }

// Irreducibility over GF(p) by trial division with all monic polynomials
// of degree 1..deg/2.  Desk scale only.
inline bool poly_irreducible(const std::vector<int>& f, int p) {
    int df = poly_deg(f);
    for (int d = 1; 2 * d <= df; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> g = poly_decode(idx, p, d + 1);
            g[d] = 1;  // monic
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

// First monic irreducible of degree e over GF(p), by ascending coefficient
// encoding.  Fixed per (p,e) so field construction is deterministic.
inline std::vector<int> first_irreducible(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> f = poly_decode(idx, p, e + 1);
        f[e] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw OutOfRange("no irreducible polynomial found");  // unreachable
}

}  // namespace detail

inline FieldTable field_new(long long q_in) {
    auto pe = detail::prime_power_split(q_in);
    if (!pe) throw NotPrimePower(q_in);
    FieldTable f;
    f.p = pe->first;
    f.e = pe->second;
    f.q = static_cast<int>(q_in);

    if (f.e == 1) {
        f.irreducible = {0, 1};  // x, i.e. GF(p) = GF(p)[x]/(x)
        if (f.q <= 256) {
            f.add_table_.resize(static_cast<size_t>(f.q) * f.q);
            f.mul_table_.resize(static_cast<size_t>(f.q) * f.q);
            for (int a = 0; a < f.q; ++a)
                for (int b = 0; b < f.q; ++b) {
                    f.add_table_[a * f.q + b] = (a + b) % f.q;
                    f.mul_table_[a * f.q + b] =
                        static_cast<int>(static_cast<long long>(a) * b % f.q);
                }
        }
        return f;
    }

    if (f.q > 256) throw OutOfRange("extension fields supported only for q <= 256");
    f.irreducible = detail::first_irreducible(f.p, f.e);
    f.add_table_.resize(static_cast<size_t>(f.q) * f.q);
    f.mul_table_.resize(static_cast<size_t>(f.q) * f.q);
    auto encode = [&](const std::vector<int>& c) {
        long long v = 0;
        for (int i = f.e - 1; i >= 0; --i) v = v * f.p + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return static_cast<int>(v);
    };
    for (int a = 0; a < f.q; ++a) {
        std::vector<int> pa = detail::poly_decode(a, f.p, f.e);
        for (int b = 0; b < f.q; ++b) {
            std::vector<int> pb = detail::poly_decode(b, f.p, f.e);
            std::vector<int> s(f.e);
            for (int i = 0; i < f.e; ++i) s[i] = (pa[i] + pb[i]) % f.p;
            f.add_table_[a * f.q + b] = encode(s);
            f.mul_table_[a * f.q + b] = encode(detail::poly_mulmod(pa, pb, f.irreducible, f.p));
        }
    }
    return f;
}

inline std::vector<int> field_elements(const FieldTable& f) {
    std::vector<int> out(f.q);
    for (int i = 0; i < f.q; ++i) out[i] = i;
    return out;
}

inline bool is_prime_power(long long q) { return detail::prime_power_split(q).has_value(); }

}  // namespace cbc
