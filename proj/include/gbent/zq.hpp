#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace gbent {

/**
 * Modulus parameter for Z_q. q must be a positive even integer; q/2 is
 * cached because it shows up in every construction ((-1) = w^{q/2}).
 */
struct QParam {
    int q;
    int half;

    explicit QParam(int q_) : q(q_), half(q_ / 2) {
        if (q_ < 2 || q_ % 2 != 0)
            throw std::invalid_argument("QParam: q must be even and >= 2");
    }

    friend bool operator==(const QParam&, const QParam&) = default;
};

inline int zq_norm(long long v, int q) {
    long long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

/// Lee weight wt_L(v) = min(v, q - v) after normalizing v into [0, q).
inline int lee_weight(long long v, const QParam& q) {
    int r = zq_norm(v, q.q);
    return r <= q.half ? r : q.q - r;
}

/**
 * Binary vector of dimension n <= 32, stored as the truth-table index:
 * x = (x_1,...,x_n) maps to bits = sum x_i * 2^(n-i), x_1 most significant.
 * Inner products are popcount parity on the masks.
 */
struct GF2Vector {
    std::uint32_t bits;
    int n;

    GF2Vector(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
        if (n_ < 1 || n_ > 32)
            throw std::invalid_argument("GF2Vector: n out of range [1,32]");
        if (n_ < 32 && (bits_ >> n_) != 0)
            throw std::invalid_argument("GF2Vector: bits exceed dimension");
    }

    /// component x_i, i in [1, n]
    int component(int i) const { return (bits >> (n - i)) & 1u; }
    int weight() const { return std::popcount(bits); }
    bool even_weight() const { return (weight() & 1) == 0; }

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
};

inline int inner_product(const GF2Vector& x, const GF2Vector& y) {
    if (x.n != y.n)
        throw std::invalid_argument("inner_product: dimension mismatch");
    return std::popcount(x.bits & y.bits) & 1;
}

/// parity of <a,b> on raw masks; the hot path of the searches
inline int parity_and(std::uint32_t a, std::uint32_t b) {
    return std::popcount(a & b) & 1;
}

}  // namespace gbent
