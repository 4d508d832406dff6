#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gbent {

/**
 * Small binary field GF(2^m), m in [1,4], with log/antilog tables over a
 * fixed primitive modulus. Elements are polynomial-coefficient integers.
 *
 * For the bivariate constructions the field is embedded into bit vectors
 * through a self-dual basis (Tr(e_i e_j) = delta_ij), so that the bit inner
 * product agrees with the trace form; the embedding is exposed as
 * trace_index(). The basis is the lexicographically least one, found by
 * backtracking at construction time, which keeps outputs reproducible.
 */
struct GF2mField {
    int m;
    std::uint32_t modulus;
    std::vector<std::uint16_t> log_tab;    // index by element, element 0 unused
    std::vector<std::uint16_t> alog_tab;   // index by exponent in [0, 2^m-1)
    std::vector<std::uint16_t> sd_basis;   // self-dual basis e_1..e_m
    std::vector<std::uint16_t> to_trace;   // element -> trace-coordinate index
    std::vector<std::uint16_t> from_trace; // inverse of to_trace

    explicit GF2mField(int m_) : m(m_) {
        static constexpr std::uint32_t fixed_moduli[5] = {0, 0b11, 0b111, 0b1011, 0b10011};
        if (m_ < 1 || m_ > 4)
            throw std::invalid_argument("GF2mField: m in [1,4]");
        modulus = fixed_moduli[m_];
        build_tables();
        build_self_dual_basis();
    }

    int size() const { return 1 << m; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_tab[a] + log_tab[b];
        const int ord = size() - 1;
        if (s >= ord) s -= ord;
        return alog_tab[s];
    }

    /// multiplicative inverse with the convention 1/0 = 0
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) return 0;
        const int ord = size() - 1;
        return alog_tab[(ord - log_tab[a]) % ord];
    }

    /// x/y = x * inv(y); both conventions 1/0 = 0 and x/0 = 0 follow
    std::uint32_t div(std::uint32_t x, std::uint32_t y) const {
        return mul(x, inv(y));
    }

    int trace(std::uint32_t u) const {
        std::uint32_t t = 0, x = u;
        for (int i = 0; i < m; ++i) {
            t ^= x;
            x = mul_slow(x, x);
        }
        return t & 1;  // the trace lands in F_2
    }

    /// bit-vector index of a field element in the self-dual basis (MSB first)
    std::uint32_t trace_index(std::uint32_t u) const { return to_trace[u]; }
    std::uint32_t element_of_index(std::uint32_t i) const { return from_trace[i]; }

private:
    // carry-less multiply mod modulus; used before tables exist
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t p = 0;
        const std::uint32_t top = 1u << m;
        while (b) {
            if (b & 1) p ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= modulus;
        }
        return p;
    }

    void build_tables() {
        const int sz = size();
        log_tab.assign(sz, 0);
        alog_tab.assign(sz - 1, 0);
        std::uint32_t x = 1;
        for (int i = 0; i < sz - 1; ++i) {
            alog_tab[i] = static_cast<std::uint16_t>(x);
            log_tab[x] = static_cast<std::uint16_t>(i);
            x = mul_slow(x, 2);
        }
        if (x != 1)
            throw std::logic_error("GF2mField: modulus is not primitive");
    }

    void build_self_dual_basis() {
        const int sz = size();
        sd_basis.clear();
        auto spans_new = [&](std::uint32_t cand) {
            // cand independent from current basis iff not in its span
            std::vector<std::uint32_t> span{0};
            for (auto e : sd_basis) {
                size_t len = span.size();
                for (size_t i = 0; i < len; ++i) span.push_back(span[i] ^ e);
            }
            for (auto v : span)
                if (v == cand) return false;
            return true;
        };
        auto rec = [&](auto&& self) -> bool {
            if (sd_basis.size() == size_t(m)) return true;
            for (std::uint32_t cand = 1; cand < std::uint32_t(sz); ++cand) {
                if (trace(mul_slow(cand, cand)) != 1) continue;
                bool orth = true;
                for (auto e : sd_basis)
                    if (trace(mul_slow(cand, e)) != 0) { orth = false; break; }
                if (!orth || !spans_new(cand)) continue;
                sd_basis.push_back(static_cast<std::uint16_t>(cand));
                if (self(self)) return true;
                sd_basis.pop_back();
            }
            return false;
        };
        if (!rec(rec))
            throw std::logic_error("GF2mField: no self-dual basis found");
        to_trace.assign(sz, 0);
        from_trace.assign(sz, 0);
        for (int u = 0; u < sz; ++u) {
            std::uint32_t idx = 0;
            for (int i = 0; i < m; ++i)
                idx |= std::uint32_t(trace(mul_slow(u, sd_basis[i]))) << (m - 1 - i);
            to_trace[u] = static_cast<std::uint16_t>(idx);
            from_trace[idx] = static_cast<std::uint16_t>(u);
        }
    }
};

}  // namespace gbent
