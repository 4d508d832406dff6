#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gbent/function.hpp"
#include "gbent/zq.hpp"

namespace gbent {

/// thrown when a desk-scale budget guard trips; the CLI maps it to exit 3
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Binary matrix L with L L^T = I_n over F_2, rows stored as bitmasks in the
 * same MSB-first convention as GF2Vector. L^{-1} = L^T.
 */
struct OrthMatrix {
    int n;
    std::vector<std::uint32_t> rows;

    OrthMatrix(int n_, std::vector<std::uint32_t> rows_, bool validate = true)
        : n(n_), rows(std::move(rows_)) {
        if (n_ < 1 || n_ > 32 || rows.size() != size_t(n_))
            throw std::invalid_argument("OrthMatrix: bad dimensions");
        if (validate && !orthogonal())
            throw std::invalid_argument("OrthMatrix: L*L^T != I");
    }

    static OrthMatrix identity(int n) {
        std::vector<std::uint32_t> r(n);
        for (int i = 0; i < n; ++i) r[i] = 1u << (n - 1 - i);
        return OrthMatrix(n, std::move(r), false);
    }

    bool orthogonal() const {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (parity_and(rows[i], rows[j]) != (i == j ? 1 : 0)) return false;
        return true;
    }

    std::uint32_t apply(std::uint32_t x) const {
        std::uint32_t y = 0;
        for (int i = 0; i < n; ++i)
            y |= std::uint32_t(parity_and(rows[i], x)) << (n - 1 - i);
        return y;
    }

    OrthMatrix transpose() const {
        std::vector<std::uint32_t> t(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> (n - 1 - j)) & 1u) t[j] |= 1u << (n - 1 - i);
        return OrthMatrix(n, std::move(t), false);
    }

    /// (this * other) as maps: apply other first, then this
    OrthMatrix multiply(const OrthMatrix& other) const {
        if (n != other.n) throw std::invalid_argument("OrthMatrix: size mismatch");
        OrthMatrix ot = other.transpose();
        std::vector<std::uint32_t> r(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (parity_and(rows[i], ot.rows[j])) r[i] |= 1u << (n - 1 - j);
        return OrthMatrix(n, std::move(r), false);
    }

    friend bool operator==(const OrthMatrix&, const OrthMatrix&) = default;
};

/**
 * Complete list of O_n over F_2 by backtracking over rows: every prefix of
 * rows is orthonormal (odd self-inner-product, zero pairwise).
 */
inline std::vector<OrthMatrix> enumerate_orthogonal(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_orthogonal: n >= 1");
    if (n > 7)
        throw budget_error(
            "enumerate_orthogonal: n > 7 produces too many matrices to hold in "
            "a list; iterate by streaming instead");
    std::vector<OrthMatrix> out;
    std::vector<std::uint32_t> rows;
    auto rec = [&](auto&& self) -> void {
        if (rows.size() == size_t(n)) {
            out.emplace_back(n, rows, false);
            return;
        }
        for (std::uint32_t cand = 1; cand < (1u << n); ++cand) {
            if (parity_and(cand, cand) != 1) continue;
            bool ok = true;
            for (auto r : rows)
                if (parity_and(cand, r)) { ok = false; break; }
            if (!ok) continue;
            rows.push_back(cand);
            self(self);
            rows.pop_back();
        }
    };
    rec(rec);
    return out;
}

/**
 * Element of the extended orthogonal group action
 * f(x) -> f(L(x^c)) + (q/2)<c,x> + d. Even-weight c preserves
 * (anti-)self-duality; odd-weight c swaps the two kinds.
 */
struct ExtOrthElement {
    OrthMatrix L;
    GF2Vector c;
    int d;

    ExtOrthElement(OrthMatrix L_, GF2Vector c_, int d_)
        : L(std::move(L_)), c(c_), d(d_) {
        if (L.n != c.n)
            throw std::invalid_argument("ExtOrthElement: L and c dimension mismatch");
    }

    bool parity_even() const { return c.even_weight(); }
};

/// compose so that apply(f, compose(second, first, q)) == apply(apply(f, first), second)
inline ExtOrthElement compose(const ExtOrthElement& second, const ExtOrthElement& first,
                              const QParam& q) {
    OrthMatrix L = first.L.multiply(second.L);
    std::uint32_t lc = second.L.transpose().apply(first.c.bits);
    std::uint32_t c = second.c.bits ^ lc;
    int d = zq_norm(first.d + second.d + q.half * parity_and(lc, second.c.bits), q.q);
    return ExtOrthElement(std::move(L), GF2Vector(c, first.c.n), d);
}

inline GBF apply_symmetry(const GBF& f, const ExtOrthElement& e) {
    if (e.L.n != f.n)
        throw std::invalid_argument("apply_symmetry: dimension mismatch");
    const int q = f.q.q;
    std::vector<int> out(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        int v = f.values[e.L.apply(x ^ e.c.bits)] + f.q.half * parity_and(e.c.bits, x) + e.d;
        out[x] = zq_norm(v, q);
    }
    return {f.n, f.q, std::move(out)};
}

/// odd-weight-c version: bijection between self-dual and anti-self-dual sets
inline GBF sd_asd_bijection(const GBF& f, const ExtOrthElement& e) {
    if (e.parity_even())
        throw std::invalid_argument("sd_asd_bijection: wt(c) must be odd");
    return apply_symmetry(f, e);
}

struct Orbit {
    GBF canonical;     // lexicographically least value vector in the orbit
    size_t size;
    std::vector<GBF> members;  // optional; empty unless requested
};

/**
 * Partition a set of functions into orbits under all extended orthogonal
 * elements with even-weight c, by breadth-first closure over the full
 * element list. The input set must be closed under the action.
 */
inline std::vector<Orbit> classify_orbits(const std::vector<GBF>& functions,
                                          bool store_members = false) {
    std::vector<Orbit> orbits;
    if (functions.empty()) return orbits;
    const int n = functions[0].n;
    const QParam q = functions[0].q;
    for (const auto& f : functions)
        if (f.n != n || f.q.q != q.q)
            throw std::invalid_argument("classify_orbits: mixed (n,q) input");

    std::unordered_set<GBF, GbfHash> pool(functions.begin(), functions.end());
    std::vector<OrthMatrix> group = enumerate_orthogonal(n);
    const std::uint32_t N = 1u << n;

    // one lookup table per (L, even c): perm[x] = L(x^c), plus the q/2 <c,x> term
    struct Move {
        std::vector<std::uint32_t> perm;
        std::vector<int> shift;
    };
    std::vector<Move> moves;
    for (const auto& L : group) {
        for (std::uint32_t c = 0; c < N; ++c) {
            if (std::popcount(c) & 1) continue;
            Move mv;
            mv.perm.resize(N);
            mv.shift.resize(N);
            for (std::uint32_t x = 0; x < N; ++x) {
                mv.perm[x] = L.apply(x ^ c);
                mv.shift[x] = q.half * parity_and(c, x);
            }
            moves.push_back(std::move(mv));
        }
    }

    std::unordered_set<GBF, GbfHash> assigned;
    for (const auto& seed : functions) {
        if (assigned.count(seed)) continue;
        std::vector<GBF> members{seed};
        std::unordered_set<GBF, GbfHash> seen{seed};
        std::vector<GBF> stack{seed};
        while (!stack.empty()) {
            GBF g = std::move(stack.back());
            stack.pop_back();
            std::vector<int> img(N);
            for (const auto& mv : moves) {
                for (int d = 0; d < q.q; ++d) {
                    for (std::uint32_t x = 0; x < N; ++x)
                        img[x] = zq_norm(g.values[mv.perm[x]] + mv.shift[x] + d, q.q);
                    GBF out(n, q, img);
                    if (seen.insert(out).second) {
                        if (!pool.count(out)) {
                            std::string tbl;
                            for (int v : out.values) tbl += std::to_string(v) + " ";
                            throw std::invalid_argument(
                                "classify_orbits: input set not closed under the "
                                "action; escaping function: " + tbl);
                        }
                        members.push_back(out);
                        stack.push_back(std::move(out));
                    }
                }
            }
        }
        GBF canon = *std::min_element(members.begin(), members.end());
        for (const auto& m : members) assigned.insert(m);
        Orbit o{std::move(canon), members.size(), {}};
        if (store_members) {
            std::sort(members.begin(), members.end());
            o.members = std::move(members);
        }
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.canonical < b.canonical; });
    return orbits;
}

}  // namespace gbent
