#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gbent/zq.hpp"

namespace gbent {

// Checked 64-bit ops. Walsh coefficients are counts bounded by 2^n, but
// products in norm checks can grow; wrap-around must never decide a predicate.
inline std::int64_t add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic: 64-bit add overflow");
    return r;
}
inline std::int64_t sub_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic: 64-bit sub overflow");
    return r;
}
inline std::int64_t mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic: 64-bit mul overflow");
    return r;
}

using Coeffs = std::vector<std::int64_t>;

namespace detail {

// exact division of integer polynomials, divisor monic; low -> high coeffs
inline Coeffs polydiv_monic(Coeffs num, const Coeffs& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    Coeffs out(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
        std::int64_t c = num[i + dd];
        out[i] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j)
                num[i + j] = sub_i64(num[i + j], mul_i64(c, den[j]));
    }
    for (auto v : num)
        if (v != 0) throw std::logic_error("polydiv_monic: nonzero remainder");
    return out;
}

inline Coeffs polymul(const Coeffs& a, const Coeffs& b) {
    Coeffs r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j]) r[i + j] = add_i64(r[i + j], mul_i64(a[i], b[j]));
    return r;
}

}  // namespace detail

/**
 * Coefficients of the q-th cyclotomic polynomial Phi_q, low -> high, monic.
 * Computed by dividing x^q - 1 by the product of Phi_d over proper divisors.
 */
inline Coeffs cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q >= 1");
    std::vector<Coeffs> memo(q + 1);
    auto phi = [&](auto&& self, int m) -> const Coeffs& {
        if (!memo[m].empty()) return memo[m];
        Coeffs num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;  // x^m - 1
        Coeffs den{1};
        for (int d = 1; d < m; ++d)
            if (m % d == 0) den = detail::polymul(den, self(self, d));
        memo[m] = detail::polydiv_monic(std::move(num), den);
        return memo[m];
    };
    return phi(phi, q);
}

/**
 * Immutable per-q context: Phi_q plus the reduced forms of all q roots of
 * unity. Reduced coordinates (degree < phi(q)) are the canonical basis of
 * Z[w]; all equality/zero decisions happen there.
 */
struct Cyclotomy {
    int q;
    Coeffs minpoly;   // Phi_q, low -> high, monic
    int degree;       // phi(q)
    std::vector<Coeffs> unit_reduced;  // reduced form of w^j, j in [0,q)

    explicit Cyclotomy(int q_) : q(q_), minpoly(cyclotomic_polynomial(q_)) {
        degree = static_cast<int>(minpoly.size()) - 1;
        unit_reduced.reserve(q);
        for (int j = 0; j < q; ++j) {
            Coeffs v(q, 0);
            v[j] = 1;
            unit_reduced.push_back(reduce(v));
        }
    }

    /// remainder of a raw coefficient vector modulo Phi_q; result has degree coords
    Coeffs reduce(const Coeffs& raw) const {
        Coeffs v = raw;
        for (int i = static_cast<int>(v.size()) - 1; i >= degree; --i) {
            std::int64_t c = v[i];
            if (c != 0) {
                for (int j = 0; j <= degree; ++j)
                    v[i - degree + j] = sub_i64(v[i - degree + j], mul_i64(c, minpoly[j]));
            }
        }
        v.resize(degree);
        return v;
    }

    /// exponent j with reduced == w^j, if the element is a q-th root of unity
    std::optional<int> unit_exponent(const Coeffs& reduced) const {
        for (int j = 0; j < q; ++j)
            if (unit_reduced[j] == reduced) return j;
        return std::nullopt;
    }
};

/// process-wide cache; contexts are immutable so sharing is safe
inline const Cyclotomy& cyclotomy(int q) {
    static std::map<int, Cyclotomy> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Cyclotomy(q)).first;
    return it->second;
}

/**
 * Element of Z[x]/(x^q - 1): integer coefficient vector (c_0,...,c_{q-1})
 * for sum c_j w^j. Kept unreduced; predicates reduce modulo Phi_q.
 */
struct CycElem {
    Coeffs c;

    CycElem() = default;
    explicit CycElem(Coeffs coeffs) : c(std::move(coeffs)) {}

    int q() const { return static_cast<int>(c.size()); }

    static CycElem zero(int q) { return CycElem(Coeffs(q, 0)); }
    static CycElem root(int q, int j) {
        Coeffs v(q, 0);
        v[((j % q) + q) % q] = 1;
        return CycElem(std::move(v));
    }
    static CycElem constant(int q, std::int64_t m) {
        Coeffs v(q, 0);
        v[0] = m;
        return CycElem(std::move(v));
    }
};

inline void check_same_q(const CycElem& a, const CycElem& b) {
    if (a.q() != b.q())
        throw std::invalid_argument("CycElem: mismatched q");
}

inline CycElem add(const CycElem& a, const CycElem& b) {
    check_same_q(a, b);
    CycElem r = a;
    for (int i = 0; i < r.q(); ++i) r.c[i] = add_i64(r.c[i], b.c[i]);
    return r;
}
inline CycElem sub(const CycElem& a, const CycElem& b) {
    check_same_q(a, b);
    CycElem r = a;
    for (int i = 0; i < r.q(); ++i) r.c[i] = sub_i64(r.c[i], b.c[i]);
    return r;
}
inline CycElem negate(const CycElem& a) {
    CycElem r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

/// multiplication by w^j: cyclic rotation of the coefficient vector
inline CycElem rotate_mul(const CycElem& z, int j) {
    const int q = z.q();
    j = ((j % q) + q) % q;
    CycElem r = CycElem::zero(q);
    for (int i = 0; i < q; ++i) r.c[(i + j) % q] = z.c[i];
    return r;
}

/// complex conjugate: c_j -> c_{(q-j) mod q}
inline CycElem conjugate(const CycElem& z) {
    const int q = z.q();
    CycElem r = CycElem::zero(q);
    for (int i = 0; i < q; ++i) r.c[(q - i) % q] = z.c[i];
    return r;
}

/// full product (cyclic convolution) in Z[x]/(x^q - 1)
inline CycElem mul(const CycElem& a, const CycElem& b) {
    check_same_q(a, b);
    const int q = a.q();
    CycElem r = CycElem::zero(q);
    for (int i = 0; i < q; ++i)
        if (a.c[i] != 0)
            for (int j = 0; j < q; ++j)
                if (b.c[j] != 0)
                    r.c[(i + j) % q] = add_i64(r.c[(i + j) % q], mul_i64(a.c[i], b.c[j]));
    return r;
}

inline bool is_zero(const CycElem& z, const Cyclotomy& cy) {
    Coeffs r = cy.reduce(z.c);
    for (auto v : r)
        if (v != 0) return false;
    return true;
}
inline bool is_zero(const CycElem& z) { return is_zero(z, cyclotomy(z.q())); }

inline bool equal_mod(const CycElem& a, const CycElem& b, const Cyclotomy& cy) {
    return cy.reduce(a.c) == cy.reduce(b.c);
}
inline bool equal_mod(const CycElem& a, const CycElem& b) {
    check_same_q(a, b);
    return equal_mod(a, b, cyclotomy(a.q()));
}

/**
 * Decide z == m * w^d for some d and return the smallest such d.
 * Scans all q candidates; the answer is unique for m != 0 but the scan
 * does not assume it.
 */
inline std::optional<int> as_scaled_root(const CycElem& z, std::int64_t m,
                                         const Cyclotomy& cy) {
    if (m < 1) throw std::invalid_argument("as_scaled_root: m >= 1");
    Coeffs r = cy.reduce(z.c);
    for (int d = 0; d < cy.q; ++d) {
        bool hit = true;
        for (int i = 0; i < cy.degree; ++i)
            if (r[i] != mul_i64(m, cy.unit_reduced[d][i])) { hit = false; break; }
        if (hit) return d;
    }
    return std::nullopt;
}
inline std::optional<int> as_scaled_root(const CycElem& z, std::int64_t m) {
    return as_scaled_root(z, m, cyclotomy(z.q()));
}

/// true iff z * conj(z) reduces to the rational integer m
inline bool norm_squared_equals(const CycElem& z, std::int64_t m, const Cyclotomy& cy) {
    if (m < 0) throw std::invalid_argument("norm_squared_equals: m >= 0");
    Coeffs r = cy.reduce(mul(z, conjugate(z)).c);
    if (r.empty()) return m == 0;
    if (r[0] != m) return false;
    for (int i = 1; i < cy.degree; ++i)
        if (r[i] != 0) return false;
    return true;
}
inline bool norm_squared_equals(const CycElem& z, std::int64_t m) {
    return norm_squared_equals(z, m, cyclotomy(z.q()));
}

}  // namespace gbent
