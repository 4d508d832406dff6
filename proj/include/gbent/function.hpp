#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/zq.hpp"

namespace gbent {

/**
 * Map F_2^n -> Z_q as a truth table of 2^n values. Index convention:
 * x = (x_1,...,x_n) sits at index sum x_i * 2^(n-i) (x_1 most significant).
 */
struct GeneralizedBooleanFunction {
    int n;
    QParam q;
    std::vector<int> values;

    GeneralizedBooleanFunction(int n_, QParam q_, std::vector<int> values_)
        : n(n_), q(q_), values(std::move(values_)) {
        if (n_ < 1 || n_ > 30)
            throw std::invalid_argument("GeneralizedBooleanFunction: n out of range");
        if (values.size() != (size_t{1} << n_))
            throw std::invalid_argument("GeneralizedBooleanFunction: table must have 2^n values");
        for (int v : values)
            if (v < 0 || v >= q.q)
                throw std::invalid_argument("GeneralizedBooleanFunction: value out of [0,q)");
    }

    size_t size() const { return values.size(); }
    int operator()(std::uint32_t x) const { return values[x]; }

    GeneralizedBooleanFunction plus_constant(int d) const {
        auto out = values;
        for (auto& v : out) v = zq_norm(v + d, q.q);
        return {n, q, std::move(out)};
    }

    friend bool operator==(const GeneralizedBooleanFunction& a,
                           const GeneralizedBooleanFunction& b) {
        return a.n == b.n && a.q.q == b.q.q && a.values == b.values;
    }
    friend auto operator<=>(const GeneralizedBooleanFunction& a,
                            const GeneralizedBooleanFunction& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.q.q <=> b.q.q; c != 0) return c;
        return a.values <=> b.values;
    }
};

using GBF = GeneralizedBooleanFunction;

inline size_t hash_value(const GBF& f) {
    size_t h = 1469598103934665603ull ^ (size_t(f.n) << 8) ^ size_t(f.q.q);
    for (int v : f.values) {
        h ^= size_t(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}
struct GbfHash {
    size_t operator()(const GBF& f) const { return hash_value(f); }
};

/// sign function F = w^f as unit CycElem entries
inline std::vector<CycElem> sign_function(const GBF& f) {
    std::vector<CycElem> out;
    out.reserve(f.size());
    for (int v : f.values) out.push_back(CycElem::root(f.q.q, v));
    return out;
}

/**
 * Spectrum of the generalized Walsh-Hadamard transform,
 * H_f(y) = sum_x w^{f(x)} (-1)^{<x,y>}, kept unreduced in Z[x]/(x^q - 1).
 */
struct WalshSpectrum {
    int n;
    QParam q;
    std::vector<CycElem> entries;
};

/// standard in-place size-2^n butterfly over CycElem values
inline void hadamard_inplace(std::vector<CycElem>& a) {
    const size_t N = a.size();
    for (size_t h = 1; h < N; h <<= 1) {
        for (size_t i = 0; i < N; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                CycElem x = a[j];
                CycElem y = a[j + h];
                a[j] = add(x, y);
                a[j + h] = sub(x, y);
            }
        }
    }
}

inline WalshSpectrum walsh_hadamard(const GBF& f) {
    std::vector<CycElem> a = sign_function(f);
    hadamard_inplace(a);
    return {f.n, f.q, std::move(a)};
}

/// Parseval: sum_y H(y) conj(H(y)) == 2^(2n), an exact cyclotomic identity
inline bool parseval_holds(const WalshSpectrum& s) {
    const Cyclotomy& cy = cyclotomy(s.q.q);
    CycElem acc = CycElem::zero(s.q.q);
    for (const auto& e : s.entries) acc = add(acc, mul(e, conjugate(e)));
    return equal_mod(acc, CycElem::constant(s.q.q, std::int64_t{1} << (2 * s.n)), cy);
}

enum class DualityKind { NotGbent, GbentNonRegular, Regular, SelfDual, AntiSelfDual };

/**
 * Exhaustive, mutually exclusive classification. SelfDual/AntiSelfDual are
 * reported instead of the generic Regular when they apply; `dual` is present
 * for all three regular kinds.
 */
struct DualityStatus {
    DualityKind kind;
    std::optional<GBF> dual;

    bool is_regular() const {
        return kind == DualityKind::Regular || kind == DualityKind::SelfDual ||
               kind == DualityKind::AntiSelfDual;
    }
};

namespace detail {

// Regular exponent of a spectrum entry for odd n: first decide
// H^2 == 2^n * w^e exactly; a solution d of 2d = e (mod q) needs e even,
// and H = 2^((n-1)/2) * sqrt2 * w^d with sqrt2 = w^(q/8) + w^(-q/8)
// distinguishes d from d + q/2 (possible only when 8 | q).
inline std::optional<int> regular_exponent_odd(const CycElem& h, int n, int q,
                                               const Cyclotomy& cy) {
    auto e = as_scaled_root(mul(h, h), std::int64_t{1} << n, cy);
    if (!e || (*e % 2) != 0) return std::nullopt;
    if (q % 8 != 0) return std::nullopt;
    CycElem sqrt2 = add(CycElem::root(q, q / 8), CycElem::root(q, q - q / 8));
    const std::int64_t half_pow = std::int64_t{1} << ((n - 1) / 2);
    for (int d : {*e / 2, *e / 2 + q / 2}) {
        CycElem target = rotate_mul(sqrt2, d);
        for (auto& v : target.c) v = mul_i64(v, half_pow);
        if (is_zero(sub(h, target), cy)) return ((d % q) + q) % q;
    }
    return std::nullopt;
}

}  // namespace detail

inline bool is_gbent(const GBF& f) {
    const Cyclotomy& cy = cyclotomy(f.q.q);
    WalshSpectrum s = walsh_hadamard(f);
    const std::int64_t target = std::int64_t{1} << f.n;
    for (const auto& e : s.entries)
        if (!norm_squared_equals(e, target, cy)) return false;
    return true;
}

inline DualityStatus classify_duality(const GBF& f) {
    const int q = f.q.q;
    const Cyclotomy& cy = cyclotomy(q);
    WalshSpectrum s = walsh_hadamard(f);
    const std::int64_t norm_target = std::int64_t{1} << f.n;
    for (const auto& e : s.entries)
        if (!norm_squared_equals(e, norm_target, cy))
            return {DualityKind::NotGbent, std::nullopt};

    std::vector<int> dual_values;
    dual_values.reserve(f.size());
    if (f.n % 2 == 0) {
        const std::int64_t scale = std::int64_t{1} << (f.n / 2);
        for (const auto& e : s.entries) {
            auto d = as_scaled_root(e, scale, cy);
            if (!d) return {DualityKind::GbentNonRegular, std::nullopt};
            dual_values.push_back(*d);
        }
    } else {
        for (const auto& e : s.entries) {
            auto d = detail::regular_exponent_odd(e, f.n, q, cy);
            if (!d) return {DualityKind::GbentNonRegular, std::nullopt};
            dual_values.push_back(*d);
        }
    }

    GBF dual_fn(f.n, f.q, std::move(dual_values));
    if (dual_fn.values == f.values) return {DualityKind::SelfDual, std::move(dual_fn)};
    bool anti = true;
    for (size_t i = 0; i < f.size(); ++i)
        if (dual_fn.values[i] != zq_norm(f.values[i] + f.q.half, q)) { anti = false; break; }
    if (anti) return {DualityKind::AntiSelfDual, std::move(dual_fn)};
    return {DualityKind::Regular, std::move(dual_fn)};
}

/// dual function f~; throws unless f is regular gbent
inline GBF dual(const GBF& f) {
    DualityStatus st = classify_duality(f);
    if (!st.is_regular())
        throw std::domain_error("dual: function is not regular gbent");
    return *st.dual;
}

/// number of binary digits h with 2^(h-1) < q <= 2^h
inline int component_count(const QParam& q) {
    int h = 1;
    while ((1 << h) < q.q) ++h;
    return h;
}

/**
 * Binary expansion f = a_0 + 2 a_1 + ... + 2^(h-1) a_{h-1} into Boolean
 * component functions; exact recomposition whenever q = 2^h.
 */
inline std::vector<GBF> decompose_components(const GBF& f) {
    const int h = component_count(f.q);
    std::vector<GBF> out;
    out.reserve(h);
    for (int j = 0; j < h; ++j) {
        std::vector<int> bits(f.size());
        for (size_t i = 0; i < f.size(); ++i) bits[i] = (f.values[i] >> j) & 1;
        out.emplace_back(f.n, QParam(2), std::move(bits));
    }
    return out;
}

inline void check_same_shape(const GBF& f, const GBF& g, const char* who) {
    if (f.n != g.n || f.q.q != g.q.q)
        throw std::invalid_argument(std::string(who) + ": functions must share n and q");
}

inline long long lee_distance(const GBF& f, const GBF& g) {
    check_same_shape(f, g, "lee_distance");
    long long acc = 0;
    for (size_t i = 0; i < f.size(); ++i)
        acc += lee_weight(f.values[i] - g.values[i], f.q);
    return acc;
}

inline long long hamming_distance(const GBF& f, const GBF& g) {
    check_same_shape(f, g, "hamming_distance");
    long long acc = 0;
    for (size_t i = 0; i < f.size(); ++i)
        if (f.values[i] != g.values[i]) ++acc;
    return acc;
}

}  // namespace gbent
