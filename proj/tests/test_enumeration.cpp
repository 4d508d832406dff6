#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gbent/enumeration.hpp"

#include "test_helpers.hpp"

using namespace gbent;

TEST_CASE("n=2 counts follow the closed form for every even q") {
    for (int q : {2, 4, 6, 8}) {
        auto rep = enumerate_self_dual(2, q, DualKind::SelfDual);
        REQUIRE(rep.found.size() == size_t(q));
        // solution pattern (d, d, d, d + q/2)
        std::set<std::vector<int>> want;
        for (int d = 0; d < q; ++d)
            want.insert({d, d, d, (d + q / 2) % q});
        std::set<std::vector<int>> got;
        for (const auto& f : rep.found) got.insert(f.values);
        CHECK(got == want);
    }
}

TEST_CASE("structured search equals the naive scan at n=2") {
    for (int q : {2, 4, 6}) {
        for (DualKind kind : {DualKind::SelfDual, DualKind::AntiSelfDual}) {
            auto fast = enumerate_self_dual(2, q, kind);
            auto slow = enumerate_naive(2, q, kind);
            REQUIRE(fast.found.size() == slow.found.size());
            for (size_t i = 0; i < fast.found.size(); ++i)
                REQUIRE(fast.found[i].values == slow.found[i].values);
        }
    }
}

TEST_CASE("Boolean n=2 sets match the explicit functions") {
    auto sd = enumerate_naive(2, 2, DualKind::SelfDual);
    std::set<std::vector<int>> got;
    for (const auto& f : sd.found) got.insert(f.values);
    // x1 x2 and its complement
    CHECK(got == std::set<std::vector<int>>{{0, 0, 0, 1}, {1, 1, 1, 0}});

    auto asd = enumerate_naive(2, 2, DualKind::AntiSelfDual);
    got.clear();
    for (const auto& f : asd.found) got.insert(f.values);
    // x1x2 ^ x1 ^ x2 and its complement
    CHECK(got == std::set<std::vector<int>>{{0, 1, 1, 1}, {1, 0, 0, 0}});
}

TEST_CASE("quaternary n=4 enumeration finds 400 of each kind") {
    auto sd = enumerate_self_dual(4, 4, DualKind::SelfDual);
    CHECK(sd.found.size() == 400);
    CHECK(sd.candidates_scanned == 65536);
    auto asd = enumerate_self_dual(4, 4, DualKind::AntiSelfDual);
    CHECK(asd.found.size() == 400);

    // dual involution and Parseval hold on the found set (sampled)
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 25; ++t) {
        const GBF& f = sd.found[rng() % sd.found.size()];
        CHECK(dual(f).values == f.values);
        CHECK(parseval_holds(walsh_hadamard(f)));
    }

    // multi-threaded partition merges to the same set
    auto sd2 = enumerate_self_dual(4, 4, DualKind::SelfDual, 4);
    REQUIRE(sd2.found.size() == sd.found.size());
    for (size_t i = 0; i < sd.found.size(); ++i)
        REQUIRE(sd2.found[i].values == sd.found[i].values);
}

TEST_CASE("found sets are closed under even-c symmetries and linked by odd-c") {
    auto sd = enumerate_self_dual(4, 4, DualKind::SelfDual).found;
    auto asd = enumerate_self_dual(4, 4, DualKind::AntiSelfDual).found;
    std::set<std::vector<int>> sd_set, asd_set;
    for (const auto& f : sd) sd_set.insert(f.values);
    for (const auto& f : asd) asd_set.insert(f.values);

    auto group = enumerate_orthogonal(4);
    std::mt19937_64 rng(31415);
    for (int t = 0; t < 40; ++t) {
        const GBF& f = sd[rng() % sd.size()];
        std::uint32_t c;
        do { c = std::uint32_t(rng()) & 0xF; } while (std::popcount(c) & 1);
        ExtOrthElement e(group[rng() % group.size()], GF2Vector(c, 4), int(rng() % 4));
        CHECK(sd_set.count(apply_symmetry(f, e).values));
    }

    // one fixed odd-c element maps the sd set exactly onto the asd set
    ExtOrthElement b(OrthMatrix::identity(4), GF2Vector(0b1000, 4), 0);
    std::set<std::vector<int>> image;
    for (const auto& f : sd) image.insert(sd_asd_bijection(f, b).values);
    CHECK(image == asd_set);
}

TEST_CASE("odd n falls back to the naive scan") {
    auto rep = enumerate_self_dual(1, 4, DualKind::SelfDual);
    CHECK(rep.candidates_scanned == 16);
    CHECK(rep.found.empty());
}

TEST_CASE("budget guards throw budget_error") {
    CHECK_THROWS_AS(enumerate_naive(4, 4, DualKind::SelfDual), budget_error);
    CHECK_THROWS_AS(enumerate_self_dual(6, 4, DualKind::SelfDual), budget_error);
    CHECK_THROWS_AS(affine_scan(8, 8), budget_error);
}

TEST_CASE("span dimension is a rank over the cyclotomic field") {
    // w * (1) and (1) are linearly dependent over Q(w) even though their
    // rational coordinate vectors are independent
    std::vector<std::vector<CycElem>> signs{{CycElem::root(4, 0)},
                                            {CycElem::root(4, 1)}};
    CHECK(span_dimension(signs, 4) == 1);

    std::vector<std::vector<CycElem>> two{{CycElem::root(4, 0), CycElem::root(4, 0)},
                                          {CycElem::root(4, 0), CycElem::root(4, 2)}};
    CHECK(span_dimension(two, 4) == 2);

    CHECK_THROWS_AS(span_dimension(std::vector<std::vector<CycElem>>{}, 4),
                    std::invalid_argument);
}

TEST_CASE("span dimensions of the enumerated sets") {
    auto sd2 = enumerate_self_dual(2, 4, DualKind::SelfDual).found;
    CHECK(span_dimension(sd2) == 1);

    auto sd4 = enumerate_self_dual(4, 4, DualKind::SelfDual).found;
    CHECK(span_dimension(sd4) == 8);
    auto asd4 = enumerate_self_dual(4, 4, DualKind::AntiSelfDual).found;
    CHECK(span_dimension(asd4) == 8);

    // Boolean case, same statement
    auto sdb = enumerate_naive(4, 2, DualKind::SelfDual).found;
    CHECK(span_dimension(sdb) == 8);
}

TEST_CASE("quarter-block products vanish for self-dual functions") {
    GBF seed(2, QParam(4), {0, 0, 0, 2});
    GBF f = iterative_self_dual(seed);
    CHECK(verify_quarter_block_products(f));

    CHECK_THROWS_AS(verify_quarter_block_products(seed), std::invalid_argument);
    GBF notsd(4, QParam(4), {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(verify_quarter_block_products(notsd), std::domain_error);
}

TEST_CASE("a regular non-self-dual function can violate the quarter identities") {
    // frozen counterexample: gbent, regular, with nonzero paired quarter sums
    GBF f(4, QParam(4), {1, 3, 0, 1, 0, 3, 0, 0, 2, 2, 0, 3, 1, 0, 2, 0});
    auto st = classify_duality(f);
    REQUIRE(st.kind == DualityKind::Regular);
    auto [s1, s2] = quarter_block_sums(f);
    const Cyclotomy& cy = cyclotomy(4);
    CHECK_FALSE((is_zero(s1, cy) && is_zero(s2, cy)));
}

TEST_CASE("counterexample search over bent-pair gbent functions succeeds") {
    // f = (a1 ^ b) + 2 a1 with a1, b Boolean bent is gbent; scan a few random
    // pairs for one whose quarter sums are nonzero
    std::mt19937_64 rng(777);
    const Cyclotomy& cy = cyclotomy(4);
    auto random_bent = [&]() {
        // MM form <x, pi(y)> ^ g(y) gives bent Boolean functions in 4 vars
        std::vector<std::uint32_t> pi{0, 1, 2, 3};
        std::shuffle(pi.begin(), pi.end(), rng);
        GBF g = oracle::random_function(2, 2, rng);
        return mm_general(pi, g);
    };
    bool found = false;
    for (int t = 0; t < 200 && !found; ++t) {
        GBF a1 = random_bent();
        GBF b = random_bent();
        std::vector<int> values(16);
        for (int i = 0; i < 16; ++i)
            values[i] = (a1.values[i] ^ b.values[i]) + 2 * a1.values[i];
        GBF f(4, QParam(4), values);
        auto st = classify_duality(f);
        if (st.kind != DualityKind::Regular) continue;
        auto [s1, s2] = quarter_block_sums(f);
        if (!is_zero(s1, cy) || !is_zero(s2, cy)) found = true;
    }
    CHECK(found);
}

TEST_CASE("hamming spectrum of the MM class") {
    auto rep = hamming_spectrum_mm(4, 4);
    CHECK(rep.sd_count == 16);
    CHECK(rep.asd_count == 16);
    CHECK(rep.predicted == std::vector<long long>{0, 4, 8, 12, 16});
    CHECK(rep.contained);
    for (const auto& [d, ok] : rep.attained) CHECK(ok);
    CHECK(rep.mixed_distances == std::set<long long>{8, 16});
    CHECK(rep.same_kind_distances == std::set<long long>{4, 8, 12, 16});

    // q=2: the spectrum set is identical and mixed pairs all sit at 2^(n-1)
    auto rep2 = hamming_spectrum_mm(4, 2);
    CHECK(rep2.predicted == rep.predicted);
    CHECK(rep2.contained);
    for (const auto& [d, ok] : rep2.attained) CHECK(ok);
    CHECK(rep2.mixed_distances == std::set<long long>{8});
}

TEST_CASE("lee spectrum of the MM class") {
    auto rep = lee_spectrum_mm(4, 4);
    CHECK(rep.predicted == std::vector<long long>{0, 8, 16, 24, 32});
    CHECK(rep.contained);
    for (const auto& [d, ok] : rep.attained) CHECK(ok);
    CHECK(rep.min_nonzero == 8);
    CHECK(rep.min_nonzero_expected == 8);
    // generalized mixed-pair law: always q * 2^(n-2)
    CHECK(rep.mixed_distances == std::set<long long>{16});

    auto rep2 = lee_spectrum_mm(4, 2);
    CHECK(rep2.min_nonzero == 4);
    CHECK(rep2.min_nonzero_expected == 4);

    CHECK_THROWS_AS(lee_spectrum_mm(3, 4), std::invalid_argument);
}

TEST_CASE("affine scans find no self-dual functions") {
    auto rep = affine_scan(2, 4);
    CHECK(rep.total == 64);
    CHECK(rep.gbent == 16);
    CHECK(rep.self_dual == 0);

    auto rep2 = affine_scan(3, 8);
    CHECK(rep2.total == 4096);
    CHECK(rep2.gbent == 64);
    CHECK(rep2.self_dual == 0);
}

TEST_CASE("upper bound checks") {
    auto r = upper_bound_check(2, 2);
    CHECK(r.count_2k == 4);
    CHECK(r.count_2 == 2);
    CHECK(r.bound == 4);
    CHECK(r.holds);

    auto r1 = upper_bound_check(2, 1);
    CHECK(r1.count_2k == 2);
    CHECK(r1.bound == 2);
    CHECK(r1.holds);
}

TEST_CASE("caching classifier memoizes") {
    CachingClassifier cc;
    GBF f(2, QParam(4), {0, 0, 0, 2});
    CHECK(cc.classify(f).kind == DualityKind::SelfDual);
    CHECK(cc.classify(f).kind == DualityKind::SelfDual);
    CHECK(cc.size() == 1);
}

TEST_CASE("decomposition of the 400-set: top component is self-dual bent") {
    auto sd = enumerate_self_dual(4, 4, DualKind::SelfDual).found;
    for (const auto& f : sd) {
        auto comps = decompose_components(f);
        REQUIRE(comps.size() == 2);
        REQUIRE(classify_duality(comps[1]).kind == DualityKind::SelfDual);
    }
}
