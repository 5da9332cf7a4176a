#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "test_util.hpp"
#include "ucc/sweeps.hpp"
#include "ucc/translates.hpp"

using namespace ucc;
using testutil::mask_of;

namespace {

// the paper's Z_7 instance in zero-based encoding (labels 1..7 with 7 -> 0)
TranslateFamily paper_family() { return cyclic_translates({1, 2, 4, 0}, 7, 1); }

ShiftedFamily paper_shift() {
    return apply_shift(paper_family(), standard_shift_index(7, 3, 1));
}

std::vector<int> subset_bits(int bits, int n) {
    std::vector<int> out;
    for (int e = 0; e < n; ++e)
        if (bits >> e & 1) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("cyclic_translates anchors the base tuple and finds the period") {
    TranslateFamily t = paper_family();
    CHECK(t.k == 7);
    CHECK(t.base == std::vector<int>{1, 2, 4, 0});
    CHECK(t.tuple(1) == std::vector<int>{2, 3, 5, 1});
    CHECK(t.member_set(6) == mask_of({0, 1, 3, 6}));

    // full group: a single translate
    TranslateFamily whole = cyclic_translates({0, 1, 2}, 3, 0);
    CHECK(whole.k == 1);

    // period-2 set in Z_4
    TranslateFamily p2 = cyclic_translates({0, 2}, 4, 0);
    CHECK(p2.k == 2);
    CHECK(p2.member_set(0) == mask_of({0, 2}));
    CHECK(p2.member_set(1) == mask_of({1, 3}));

    CHECK_THROWS_AS(cyclic_translates({}, 5, 0), ArgumentError);
    CHECK_THROWS_AS(cyclic_translates({1, 2}, 5, 3), ArgumentError);
    CHECK_THROWS_AS(cyclic_translates({5}, 5, 5), RangeError);
}

TEST_CASE("k divides n for every R, exhaustively to n = 8") {
    for (int n = 1; n <= 8; ++n)
        for (int bits = 1; bits < (1 << n); ++bits) {
            std::vector<int> r = subset_bits(bits, n);
            TranslateFamily t = cyclic_translates(r, n, r.front());
            CHECK(n % t.k == 0);
            // members pairwise distinct as sets
            std::set<std::vector<int>> seen;
            for (int i = 0; i < t.k; ++i) seen.insert(mask_elements(t.member_set(i)));
            CHECK(seen.size() == static_cast<std::size_t>(t.k));
        }
}

TEST_CASE("validate_suitable on the pinned examples") {
    CHECK(validate_suitable(7, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}, 2).r == 2);
    CHECK(validate_suitable(5, {}, {}, 3).members.empty());  // vacuous

    // condition 1 fails: r - I = {0,3} != {0,1}
    SuitableCheck c = check_suitable(4, {0, 1}, {{0, 0}, {1, 1}}, 0);
    CHECK_FALSE(c.valid);
    CHECK(c.failed_condition == 1);
    CHECK_THROWS_AS(validate_suitable(4, {0, 1}, {{0, 0}, {1, 1}}, 0), ValidationError);

    // q not a bijection of I onto itself
    CHECK_THROWS_AS(check_suitable(4, {0, 1}, {{0, 2}, {1, 1}}, 1), ArgumentError);
    CHECK_THROWS_AS(check_suitable(4, {0, 1}, {{0, 0}}, 1), ArgumentError);
    CHECK_THROWS_AS(check_suitable(4, {0, 9}, {{0, 0}, {9, 9}}, 1), RangeError);

    // condition 2 can fail on its own: I = {0,1,2}, q swaps 0,1, r = 2
    SuitableCheck c2 = check_suitable(7, {0, 1, 2}, {{0, 1}, {1, 0}, {2, 2}}, 2);
    CHECK_FALSE(c2.valid);
    CHECK(c2.failed_condition == 2);
}

TEST_CASE("standard_shift_index always validates and hits the paper instance") {
    SuitableIndex s = standard_shift_index(7, 3, 1);
    CHECK(s.members == std::vector<int>{0, 1, 2});
    CHECK(s.r == 2);
    CHECK(s.q.at(0) == 1);
    CHECK(s.q.at(1) == 2);
    CHECK(s.q.at(2) == 0);

    SuitableIndex single = standard_shift_index(9, 1, 4);
    CHECK(single.members == std::vector<int>{0});
    CHECK(single.q.at(0) == 0);
    CHECK(single.r == 0);

    CHECK_NOTHROW(standard_shift_index(6, 4, 2));
    for (int n = 1; n <= 8; ++n)
        for (int l = 1; l <= n; ++l)
            for (int m = 0; m < n; ++m) CHECK_NOTHROW(standard_shift_index(n, l, m));

    CHECK_THROWS_AS(standard_shift_index(5, 0, 0), ArgumentError);
    CHECK_THROWS_AS(standard_shift_index(5, 6, 0), ArgumentError);
    CHECK_THROWS_AS(standard_shift_index(5, 2, 5), ArgumentError);
}

TEST_CASE("enumerate_suitable equals the accepted set and contains the standard indices") {
    for (int n = 1; n <= 6; ++n) {
        const int max_l = std::min(n, 4);
        std::vector<SuitableIndex> found = enumerate_suitable(n, max_l);

        // same space, filtered through the direct condition restatement
        std::size_t expect = 0;
        for (int bits = 0; bits < (1 << n); ++bits) {
            std::vector<int> I = subset_bits(bits, n);
            if (static_cast<int>(I.size()) > max_l) continue;
            std::vector<int> image = I;
            do {
                std::map<int, int> q;
                for (std::size_t j = 0; j < I.size(); ++j) q[I[j]] = image[j];
                for (int r = 0; r < n; ++r)
                    if (oracle::suitable(n, I, q, r)) {
                        ++expect;
                        CHECK(std::find(found.begin(), found.end(),
                                        SuitableIndex{n, I, q, r}) != found.end());
                    }
            } while (std::next_permutation(image.begin(), image.end()));
        }
        CHECK(found.size() == expect);

        for (int l = 1; l <= max_l; ++l)
            for (int m = 0; m < l; ++m) {
                SuitableIndex s = standard_shift_index(n, l, m);
                CHECK(std::find(found.begin(), found.end(), s) != found.end());
            }
    }
    CHECK_THROWS_AS(enumerate_suitable(9, 2), ResourceLimitError);
}

TEST_CASE("apply_shift reproduces the paper's family exactly") {
    ShiftedFamily sf = paper_shift();
    // zero-based images of {2,4,7},{3,5,1},{1,4,6,2},{4,5,7,3},{5,6,1,4},{6,7,2,5},{7,1,3,6}
    std::vector<Mask> expect = {mask_of({2, 4, 0}), mask_of({3, 5, 1}), mask_of({1, 4, 6, 2}),
                                mask_of({4, 5, 0, 3}), mask_of({5, 6, 1, 4}),
                                mask_of({6, 0, 2, 5}), mask_of({0, 1, 3, 6})};
    for (int i = 0; i < 7; ++i) CHECK(sf.member_set(i) == expect[static_cast<std::size_t>(i)]);
    CHECK(sf.cardinalities() == std::vector<int>{3, 3, 4, 4, 4, 4, 4});
    CHECK(sf.duplicate_members() == 0);

    // the first member's tuple holds the duplicated anchor before set collapse
    CHECK(sf.tuples[0] == std::vector<int>{2, 2, 4, 0});
}

TEST_CASE("apply_shift preconditions") {
    TranslateFamily p2 = cyclic_translates({0, 2}, 4, 0);  // k = 2 != n
    CHECK_THROWS_AS(apply_shift(p2, standard_shift_index(4, 2, 1)), ArgumentError);
    CHECK_THROWS_AS(apply_shift(paper_family(), standard_shift_index(6, 2, 1)),
                    ArgumentError);
}

TEST_CASE("empty or identity shifts leave the family unchanged") {
    TranslateFamily t = paper_family();
    ShiftedFamily empty_i = apply_shift(t, validate_suitable(7, {}, {}, 4));
    for (int i = 0; i < 7; ++i) CHECK(empty_i.tuples[static_cast<std::size_t>(i)] == t.tuple(i));

    // q = identity via m = 0
    ShiftedFamily ident = apply_shift(t, standard_shift_index(7, 3, 0));
    for (int i = 0; i < 7; ++i) CHECK(ident.member_set(i) == t.member_set(i));
}

TEST_CASE("the shift permutes anchors: universe stays all of Z_n") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        int bits = 1 + static_cast<int>(rng() % ((1 << n) - 1));
        std::vector<int> r = subset_bits(bits, n);
        TranslateFamily t = cyclic_translates(r, n, r.front());
        if (t.k != n) continue;
        const int l = 1 + static_cast<int>(rng() % n);
        const int m = static_cast<int>(rng() % n);
        SuitableIndex s = standard_shift_index(n, l, m);
        ShiftedFamily sf = apply_shift(t, s);

        std::vector<int> anchors_before, anchors_after;
        for (int i : s.members) {
            anchors_before.push_back(t.tuple_at(i, 0));
            anchors_after.push_back(sf.tuples[static_cast<std::size_t>(i)][0]);
        }
        std::sort(anchors_before.begin(), anchors_before.end());
        std::sort(anchors_after.begin(), anchors_after.end());
        CHECK(anchors_before == anchors_after);

        Mask universe;
        for (int i = 0; i < n; ++i) universe |= sf.member_set(i);
        CHECK(universe == Mask::first_n(n));
    }
}

TEST_CASE("thm_automorphism is a swap automorphism; paper instance spelled out") {
    ShiftedFamily sf = paper_shift();
    VertexBijection f = thm_automorphism(sf);
    BipartiteGraph g = incidence_graph(sf.as_family());
    CHECK(is_swap_automorphism(g, f));
    // f(a) = member (r + A(1) - a) mod 7 with r = 2, A(1) = 1
    for (int a = 0; a < 7; ++a) CHECK(f(a) == 7 + ((2 + 1 - a % 7 + 7) % 7));

    // I empty: the map still swaps the plain translate incidence graph
    ShiftedFamily plain = apply_shift(paper_family(), validate_suitable(7, {}, {}, 2));
    CHECK(is_swap_automorphism(incidence_graph(plain.as_family()), thm_automorphism(plain)));

    // size-2 base set with 5 distinct translates
    TranslateFamily t5 = cyclic_translates({0, 1}, 5, 0);
    REQUIRE(t5.k == 5);
    ShiftedFamily sf5 = apply_shift(t5, standard_shift_index(5, 2, 1));
    CHECK(is_swap_automorphism(incidence_graph(sf5.as_family()), thm_automorphism(sf5)));
}

TEST_CASE("augmented incidence graph introduces n/k sibling copies") {
    TranslateFamily p2 = cyclic_translates({0, 2}, 4, 0);
    BipartiteGraph g = augmented_incidence_graph(p2);
    CHECK(g.nx == 4);
    CHECK(g.ny == 4);
    CHECK(g.labels == std::vector<std::string>{"0", "1", "2", "3", "S0_1", "S0_2", "S1_1",
                                               "S1_2"});
    CHECK(g.adj[4] == g.adj[5]);  // copies share neighborhoods

    // k = n: one copy each, exactly the incidence graph
    TranslateFamily full = paper_family();
    CHECK(augmented_incidence_graph(full) == incidence_graph(full.as_family()));

    // singleton base set: a perfect matching
    TranslateFamily single = cyclic_translates({0}, 3, 0);
    BipartiteGraph m = augmented_incidence_graph(single);
    CHECK(m.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);
}

TEST_CASE("prop4_automorphism verifies on the pinned instances and degenerate cases") {
    TranslateFamily p2 = cyclic_translates({0, 2}, 4, 0);
    BipartiteGraph g = augmented_incidence_graph(p2);
    VertexBijection f = prop4_automorphism(p2);
    CHECK(is_swap_automorphism(g, f));
    // f((A+i)_c) = (2c - i) mod 4; Y ids follow i*copies + (c-1)
    CHECK(f(4) == 2);  // (A+0)_1 -> 2
    CHECK(f(5) == 0);  // (A+0)_2 -> 4 mod 4
    CHECK(f(6) == 1);  // (A+1)_1 -> 1
    CHECK(f(7) == 3);  // (A+1)_2 -> 3

    TranslateFamily whole = cyclic_translates({0, 1, 2}, 3, 0);
    CHECK(is_swap_automorphism(augmented_incidence_graph(whole), prop4_automorphism(whole)));

    TranslateFamily unit = cyclic_translates({0}, 1, 0);
    CHECK(is_swap_automorphism(augmented_incidence_graph(unit), prop4_automorphism(unit)));
}

TEST_CASE("verify_section3 bundles agree on the paper instances") {
    Section3Report ft = verify_section3(paper_family());
    CHECK(ft.automorphism_ok);
    CHECK(ft.graph.satisfied);
    CHECK(ft.family.holds);
    CHECK(ft.all_pass());

    Section3Report fs = verify_section3(paper_shift());
    CHECK(fs.all_pass());
    CHECK(fs.cardinalities == std::vector<int>{3, 3, 4, 4, 4, 4, 4});
    CHECK(fs.duplicate_members == 0);
    CHECK(fs.family.closure_size == 23);

    // degenerate: R = Z_n
    Section3Report fw = verify_section3(cyclic_translates({0, 1, 2, 3}, 4, 0));
    CHECK(fw.all_pass());
}

TEST_CASE("sweeps: proposition 4 and the shifted construction") {
    SweepResult tr = sweep_translates(5);
    CHECK(tr.failures == 0);
    CHECK(tr.instances == 1 + 3 + 7 + 15 + 31);

    SweepResult sh = sweep_shift(5, std::nullopt, 50, 1);
    CHECK(sh.failures == 0);
    // 30 candidate sets (every R except empty and Z_5), 15 (l,m) pairs each
    CHECK(sh.instances == 30 * 15);

    SweepResult fixed = sweep_shift(7, std::vector<int>{1, 2, 4, 0}, 50, 1);
    CHECK(fixed.failures == 0);
    CHECK(fixed.instances == 28);
}
