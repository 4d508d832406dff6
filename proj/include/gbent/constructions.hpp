#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbent/function.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/groups.hpp"
#include "gbent/zq.hpp"

namespace gbent {

/**
 * Direct sum f(x) = f_1(x^(1)) + ... + f_r(x^(r)) on the concatenation of the
 * parts' variables (first part most significant). All parts share q.
 */
inline GBF direct_sum(const std::vector<GBF>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty part list");
    const QParam q = parts[0].q;
    int n = 0;
    for (const auto& p : parts) {
        if (p.q.q != q.q) throw std::invalid_argument("direct_sum: parts must share q");
        n += p.n;
    }
    if (n > 24) throw std::invalid_argument("direct_sum: combined n too large");
    std::vector<int> values(size_t{1} << n, 0);
    for (std::uint32_t x = 0; x < values.size(); ++x) {
        int acc = 0;
        int shift = n;
        for (const auto& p : parts) {
            shift -= p.n;
            acc += p.values[(x >> shift) & ((1u << p.n) - 1)];
        }
        values[x] = zq_norm(acc, q.q);
    }
    return {n, q, std::move(values)};
}

/**
 * Generalized Maiorana-McFarland function f(x,y) = (q/2)<x,pi(y)> + g(y) on
 * x,y in F_2^(n/2); gbent for every permutation pi and every g.
 */
inline GBF mm_general(const std::vector<std::uint32_t>& pi, const GBF& g) {
    const int m = g.n;
    const std::uint32_t M = 1u << m;
    if (pi.size() != M)
        throw std::invalid_argument("mm_general: pi must permute F_2^(n/2)");
    std::vector<bool> hit(M, false);
    for (auto v : pi) {
        if (v >= M || hit[v])
            throw std::invalid_argument("mm_general: pi is not a bijection");
        hit[v] = true;
    }
    const QParam q = g.q;
    std::vector<int> values(size_t{1} << (2 * m));
    for (std::uint32_t x = 0; x < M; ++x)
        for (std::uint32_t y = 0; y < M; ++y)
            values[(x << m) | y] = zq_norm(q.half * parity_and(x, pi[y]) + g.values[y], q.q);
    return {2 * m, q, std::move(values)};
}

/// closed-form dual (q/2)<pi^{-1}(x),y> + g(pi^{-1}(x)) of mm_general(pi, g)
inline GBF mm_general_dual(const std::vector<std::uint32_t>& pi, const GBF& g) {
    const int m = g.n;
    const std::uint32_t M = 1u << m;
    std::vector<std::uint32_t> inv(M);
    for (std::uint32_t y = 0; y < M; ++y) inv[pi[y]] = y;
    const QParam q = g.q;
    std::vector<int> values(size_t{1} << (2 * m));
    for (std::uint32_t x = 0; x < M; ++x)
        for (std::uint32_t y = 0; y < M; ++y)
            values[(x << m) | y] =
                zq_norm(q.half * parity_and(inv[x], y) + g.values[inv[x]], q.q);
    return {2 * m, q, std::move(values)};
}

/**
 * Parameters of the (anti-)self-dual Maiorana-McFarland family:
 * pi(y) = L(y^b), g(y) = (q/2)<b,y> + d with L orthogonal.
 * wt(b) even gives self-dual, odd gives anti-self-dual.
 */
struct MMParameters {
    OrthMatrix L;
    GF2Vector b;
    int d;

    MMParameters(OrthMatrix L_, GF2Vector b_, int d_)
        : L(std::move(L_)), b(b_), d(d_) {
        if (L.n != b.n)
            throw std::invalid_argument("MMParameters: L and b dimension mismatch");
    }
};

inline GBF mm_self_dual(const MMParameters& p, const QParam& q, bool want_anti) {
    const bool even = p.b.even_weight();
    if (want_anti == even)
        throw std::invalid_argument(want_anti
            ? "mm_self_dual: anti-self-dual needs odd wt(b)"
            : "mm_self_dual: self-dual needs even wt(b)");
    const int m = p.L.n;
    const std::uint32_t M = 1u << m;
    std::vector<int> values(size_t{1} << (2 * m));
    for (std::uint32_t y = 0; y < M; ++y) {
        std::uint32_t py = p.L.apply(y ^ p.b.bits);
        int gy = q.half * parity_and(p.b.bits, y) + p.d;
        for (std::uint32_t x = 0; x < M; ++x)
            values[(x << m) | y] = zq_norm(q.half * parity_and(x, py) + gy, q.q);
    }
    return {2 * m, q, std::move(values)};
}

/// q * 2^(n/2-1) * |O_(n/2)|, the size of each MM (anti-)self-dual family
inline long long mm_count_self_dual(int n, const QParam& q) {
    if (n % 2 != 0) throw std::invalid_argument("mm_count_self_dual: n must be even");
    long long orth = static_cast<long long>(enumerate_orthogonal(n / 2).size());
    return static_cast<long long>(q.q) * (1ll << (n / 2 - 1)) * orth;
}

namespace detail {

inline void dillon_check_components(const GF2mField& field, const std::vector<GBF>& G) {
    const int k = static_cast<int>(G.size());
    if (k < 1) throw std::invalid_argument("dillon: need at least one component");
    const int sz = field.size();
    for (int j = 0; j < k; ++j) {
        const GBF& g = G[j];
        if (g.q.q != 2 || g.n != field.m)
            throw std::invalid_argument("dillon: component " + std::to_string(j) +
                                        " must be Boolean on F_2^m");
        if (g.values[0] != 0)
            throw std::invalid_argument("dillon: component " + std::to_string(j) +
                                        " has G(0) != 0");
        int wt = std::accumulate(g.values.begin(), g.values.end(), 0);
        if (wt != sz / 2)
            throw std::invalid_argument("dillon: component " + std::to_string(j) +
                                        " is not balanced");
    }
    // exact character-sum condition: sum_t w^(sum_j 2^j G_j(t)) == 0
    const int q = 1 << k;
    const Cyclotomy& cy = cyclotomy(q);
    CycElem acc = CycElem::zero(q);
    for (int t = 0; t < sz; ++t) {
        int v = 0;
        for (int j = 0; j < k; ++j) v += G[j].values[t] << j;
        acc = add(acc, CycElem::root(q, v % q));
    }
    if (!is_zero(acc, cy))
        throw std::invalid_argument("dillon: character sum of the components is nonzero");
}

}  // namespace detail

/**
 * Dillon-type bivariate construction f(x,y) = sum_j 2^j G_j(x/y) over
 * GF(2^m) x GF(2^m) -> Z_(2^k), with the convention 1/0 = 0. The truth table
 * is indexed through the field's self-dual-basis coordinates, under which
 * inversion-symmetric components yield a self-dual gbent function.
 */
inline GBF dillon(const GF2mField& field, const std::vector<GBF>& G) {
    detail::dillon_check_components(field, G);
    const int k = static_cast<int>(G.size());
    const int q = 1 << k;
    const int m = field.m;
    const std::uint32_t M = 1u << m;
    std::vector<int> values(size_t{1} << (2 * m));
    for (std::uint32_t x = 0; x < M; ++x) {
        for (std::uint32_t y = 0; y < M; ++y) {
            std::uint32_t t = field.div(x, y);
            int v = 0;
            for (int j = 0; j < k; ++j) v += G[j].values[t] << j;
            values[(field.trace_index(x) << m) | field.trace_index(y)] = v % q;
        }
    }
    return {2 * m, QParam(q), std::move(values)};
}

/**
 * All component tuples (G_0,...,G_{k-1}) that satisfy every dillon
 * precondition plus inversion symmetry G_j(u) = G_j(1/u). Possibly empty.
 */
inline std::vector<std::vector<GBF>> dillon_search_components(const GF2mField& field,
                                                              int k) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("dillon_search_components: k in [1,3]");
    const int sz = field.size();
    std::vector<GBF> cands;
    for (std::uint32_t bits = 0; bits < (1u << sz); ++bits) {
        if (bits & 1) continue;  // G(0) = 0
        if (std::popcount(bits) != sz / 2) continue;
        bool sym = true;
        for (int u = 1; u < sz && sym; ++u)
            sym = ((bits >> u) & 1) == ((bits >> field.inv(u)) & 1);
        if (!sym) continue;
        std::vector<int> tab(sz);
        for (int u = 0; u < sz; ++u) tab[u] = (bits >> u) & 1;
        cands.emplace_back(field.m, QParam(2), std::move(tab));
    }
    const int q = 1 << k;
    const Cyclotomy& cy = cyclotomy(q);
    std::vector<std::vector<GBF>> out;
    std::vector<size_t> idx(k, 0);
    while (true) {
        CycElem acc = CycElem::zero(q);
        for (int t = 0; t < sz; ++t) {
            int v = 0;
            for (int j = 0; j < k; ++j) v += cands[idx[j]].values[t] << j;
            acc = add(acc, CycElem::root(q, v % q));
        }
        if (is_zero(acc, cy)) {
            std::vector<GBF> tup;
            for (int j = 0; j < k; ++j) tup.push_back(cands[idx[j]]);
            out.push_back(std::move(tup));
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == cands.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

namespace detail {

inline GBF concat_blocks(const GBF& b00, const GBF& b01, const GBF& b10, const GBF& b11) {
    std::vector<int> values;
    values.reserve(b00.size() * 4);
    for (const GBF* b : {&b00, &b01, &b10, &b11})
        values.insert(values.end(), b->values.begin(), b->values.end());
    return {b00.n + 2, b00.q, std::move(values)};
}

}  // namespace detail

/**
 * Iterative step: from a regular gbent f in n variables, the value blocks
 * (f, f~, f~, f + q/2) form a self-dual gbent function in n+2 variables
 * (sign function (F, F~, F~, -F)).
 */
inline GBF iterative_self_dual(const GBF& f) {
    DualityStatus st = classify_duality(f);
    if (!st.is_regular())
        throw std::domain_error("iterative_self_dual: input must be regular gbent");
    return detail::concat_blocks(f, *st.dual, *st.dual, f.plus_constant(f.q.half));
}

/**
 * Mixed iterative step from a self-dual f and an anti-self-dual g (same n, q):
 * value blocks (f, g, g + q/2, f), sign function (F, G, -G, F). The output is
 * gbent; its duality status is whatever classify_duality reports.
 */
inline GBF iterative_mixed(const GBF& f_sd, const GBF& g_asd) {
    check_same_shape(f_sd, g_asd, "iterative_mixed");
    if (classify_duality(f_sd).kind != DualityKind::SelfDual)
        throw std::domain_error("iterative_mixed: first argument must be self-dual");
    if (classify_duality(g_asd).kind != DualityKind::AntiSelfDual)
        throw std::domain_error("iterative_mixed: second argument must be anti-self-dual");
    return detail::concat_blocks(f_sd, g_asd, g_asd.plus_constant(g_asd.q.half), f_sd);
}

/**
 * Self-dual function symmetric in its two leading variables:
 * h(z,y,x) = f(x) + (z^y)(f~(x) + (q-1)f(x)) + (q/2) z y for regular gbent f.
 */
inline GBF two_var_symmetric(const GBF& f) {
    DualityStatus st = classify_duality(f);
    if (!st.is_regular())
        throw std::domain_error("two_var_symmetric: input must be regular gbent");
    const int q = f.q.q;
    std::vector<int> g(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        g[i] = zq_norm(st.dual->values[i] + (q - 1) * f.values[i], q);
    std::vector<int> values;
    values.reserve(f.size() * 4);
    for (int z = 0; z <= 1; ++z)
        for (int y = 0; y <= 1; ++y)
            for (size_t i = 0; i < f.size(); ++i)
                values.push_back(zq_norm(f.values[i] + (z ^ y) * g[i] + f.q.half * z * y, q));
    return {f.n + 2, f.q, std::move(values)};
}

/// variant taking the diagonal term explicitly; anything but s == q/2 is rejected
inline GBF two_var_symmetric(const GBF& f, const GBF& s) {
    check_same_shape(f, s, "two_var_symmetric");
    for (int v : s.values)
        if (v != f.q.half)
            throw std::invalid_argument("two_var_symmetric: s(x) must be identically q/2");
    return two_var_symmetric(f);
}

/// affine function f(x) = lambda_0 + sum_i lambda_i x_i mod q
inline GBF affine(int n, const QParam& q, const std::vector<int>& lambdas) {
    if (lambdas.size() != size_t(n) + 1)
        throw std::invalid_argument("affine: need n+1 coefficients");
    std::vector<int> values(size_t{1} << n);
    for (std::uint32_t x = 0; x < values.size(); ++x) {
        long long acc = lambdas[0];
        for (int i = 1; i <= n; ++i)
            if ((x >> (n - i)) & 1u) acc += lambdas[i];
        values[x] = zq_norm(acc, q.q);
    }
    return {n, q, std::move(values)};
}

}  // namespace gbent
