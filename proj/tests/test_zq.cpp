#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gbent/function.hpp"
#include "gbent/zq.hpp"

#include "test_helpers.hpp"

using namespace gbent;

TEST_CASE("QParam rejects odd or tiny moduli") {
    CHECK_THROWS_AS(QParam(3), std::invalid_argument);
    CHECK_THROWS_AS(QParam(0), std::invalid_argument);
    CHECK_THROWS_AS(QParam(-2), std::invalid_argument);
    CHECK(QParam(6).half == 3);
}

TEST_CASE("inner product over F_2^n") {
    // x=(1,0,1), y=(1,1,1) -> 0
    CHECK(inner_product(GF2Vector(0b101, 3), GF2Vector(0b111, 3)) == 0);
    CHECK(inner_product(GF2Vector(0, 5), GF2Vector(0b10110, 5)) == 0);
    CHECK(inner_product(GF2Vector(0b11, 2), GF2Vector(0b11, 2)) == 0);
    CHECK(inner_product(GF2Vector(0b100, 3), GF2Vector(0b110, 3)) == 1);
    CHECK_THROWS_AS(inner_product(GF2Vector(1, 2), GF2Vector(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("GF2Vector component order is x1-most-significant") {
    GF2Vector v(0b100, 3);  // x = (1,0,0)
    CHECK(v.component(1) == 1);
    CHECK(v.component(2) == 0);
    CHECK(v.component(3) == 0);
    CHECK_THROWS_AS(GF2Vector(0b1000, 3), std::invalid_argument);
}

TEST_CASE("lee weight basics") {
    QParam q4(4);
    CHECK(lee_weight(0, q4) == 0);
    CHECK(lee_weight(2, q4) == 2);
    CHECK(lee_weight(3, q4) == 1);
    QParam q8(8);
    for (int v = 0; v < 8; ++v)
        CHECK(lee_weight(v, q8) == lee_weight(8 - v, q8));
}

TEST_CASE("lee distance on small tables") {
    QParam q(4);
    GBF f(1, q, {0, 0});
    GBF g(1, q, {1, 3});
    CHECK(lee_distance(f, f) == 0);
    CHECK(lee_distance(f, g) == 2);  // wt_L(3) + wt_L(1)
    CHECK(lee_distance(g, f) == 2);
}

TEST_CASE("hamming distance and q=2 coincidence") {
    QParam q(4);
    GBF f(2, q, {0, 0, 0, 2});
    GBF g(2, q, {0, 0, 0, 0});
    CHECK(hamming_distance(f, g) == 1);
    CHECK(hamming_distance(f, f) == 0);
    GBF h(2, QParam(2), {0, 1, 1, 0});
    CHECK_THROWS_AS(hamming_distance(f, h), std::invalid_argument);

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        GBF a = oracle::random_function(3, 2, rng);
        GBF b = oracle::random_function(3, 2, rng);
        CHECK(lee_distance(a, b) == hamming_distance(a, b));
    }
}

TEST_CASE("both distances are metrics on random triples") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        GBF a = oracle::random_function(3, 6, rng);
        GBF b = oracle::random_function(3, 6, rng);
        GBF c = oracle::random_function(3, 6, rng);
        // symmetry
        CHECK(lee_distance(a, b) == lee_distance(b, a));
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        // identity
        CHECK((lee_distance(a, b) == 0) == (a.values == b.values));
        CHECK((hamming_distance(a, b) == 0) == (a.values == b.values));
        // triangle inequality
        CHECK(lee_distance(a, c) <= lee_distance(a, b) + lee_distance(b, c));
        CHECK(hamming_distance(a, c) <=
              hamming_distance(a, b) + hamming_distance(b, c));
    }
}

TEST_CASE("lee distance of MM pair differing in d by 1") {
    // closed form 2^n*w - 2dw + (q/2)d with w=1, d=0: direct summation check
    QParam q(4);
    std::vector<int> v1(16), v2(16);
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) {
            int base = 2 * parity_and(x, y);
            v1[(x << 2) | y] = base % 4;
            v2[(x << 2) | y] = (base + 1) % 4;
        }
    GBF f1(4, q, v1), f2(4, q, v2);
    CHECK(lee_distance(f1, f2) == 16);
}
