#include <random>
#include <set>

#include "doctest.h"
#include "metdim/bounds.hpp"
#include "metdim/johnson.hpp"

using namespace metdim;

namespace {

int vid(int n, std::initializer_list<int> elems) {
    return int(colex_rank(KSubset::of(elems, n)));
}

} // namespace

TEST_CASE("w_sets on J(4,2)") {
    Graph g = johnson_graph(4, 2);
    auto d = all_pairs_distances(g);
    int u = vid(4, {1, 2}), v = vid(4, {1, 3});
    auto [wuv, wvu] = w_sets(u, v, g, d);

    // brute-forced over all six vertices from the closed-form distance
    std::set<int> expect_uv{vid(4, {1, 2}), vid(4, {2, 4})};
    std::set<int> expect_vu{vid(4, {1, 3}), vid(4, {3, 4})};
    auto uv = wuv.to_vector();
    auto vv = wvu.to_vector();
    std::set<int> got_uv(uv.begin(), uv.end());
    std::set<int> got_vu(vv.begin(), vv.end());
    CHECK(got_uv == expect_uv);
    CHECK(got_vu == expect_vu);

    // swap symmetry and membership of the endpoints
    auto [swapped_uv, swapped_vu] = w_sets(v, u, g, d);
    CHECK(swapped_uv == wvu);
    CHECK(swapped_vu == wuv);

    CHECK_THROWS_AS(w_sets(vid(4, {1, 2}), vid(4, {3, 4}), g, d), std::invalid_argument);
}

TEST_CASE("w_sets properties across edges") {
    for (auto [n, k] : {std::pair{5, 2}, {6, 3}}) {
        Graph g = johnson_graph(n, k);
        auto d = all_pairs_distances(g);
        for (auto [u, v] : g.edges) {
            auto [wuv, wvu] = w_sets(u, v, g, d);
            REQUIRE(wuv.test(u));
            REQUIRE(wvu.test(v));
            REQUIRE_FALSE(wuv.intersects(wvu));
        }
    }
}

TEST_CASE("mixed_w_family") {
    Graph k2 = build_graph(2, {{0, 1}});
    auto fam = mixed_w_family(k2, all_pairs_distances(k2));
    REQUIRE(fam.size() == 2);
    CHECK(fam.sets[0].count() == 1);
    CHECK(fam.sets[1].count() == 1);
    CHECK(fam.sets[0].test(0) != fam.sets[1].test(0));

    Graph j63 = johnson_graph(6, 3);
    auto f63 = mixed_w_family(j63, all_pairs_distances(j63));
    CHECK(f63.ground_size == 20);
    for (const auto& s : f63.sets) REQUIRE(s.any());
    CHECK(f63.provenance.size() == f63.size());
}

TEST_CASE("mhsp_family structure") {
    auto fam = mhsp_family(6, 3);
    CHECK(fam.ground_size == 20);
    CHECK(fam.size() == 60); // n(n-1)(n-2)/2 triples, all distinct here
    for (const auto& s : fam.sets) REQUIRE(s.count() == 6);

    auto f52 = mhsp_family(5, 2);
    CHECK(f52.size() == 30);
    for (const auto& s : f52.sets) REQUIRE(s.count() == 2);

    CHECK_THROWS_AS(mhsp_family(6, 1), std::invalid_argument);

    std::mt19937_64 rng(29);
    for (int t = 0; t < 6; ++t) {
        int n = 5 + int(rng() % 5);
        int k = 2 + int(rng() % std::max(1, n / 2 - 1));
        auto f = mhsp_family(n, k);
        std::int64_t expect = 2 * binom(n - 3, k - 2);
        for (const auto& s : f.sets) REQUIRE(s.count() == expect);
    }
}

TEST_CASE("mhsp sets are exactly the complements of sprime") {
    int n = 6, k = 3;
    auto fam = mhsp_family(n, k);
    // pick the (x,y,z) = (1,2,3) member via provenance
    int found = -1;
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam.provenance[i].find("xy{1,2}z3") != std::string::npos) found = int(i);
    REQUIRE(found >= 0);
    auto sp = sprime(n, k, 1, 2, 3);
    std::set<int> spset(sp.begin(), sp.end());
    for (int v = 0; v < fam.ground_size; ++v)
        REQUIRE(fam.sets[found].test(v) == !spset.count(v));
}

TEST_CASE("formula_bounds against the six rows") {
    struct Row {
        int n, k, ed, mi1, mi2;
    };
    for (auto r : {Row{6, 3, 5, 5, 4}, Row{7, 3, 5, 5, 5}, Row{8, 3, 5, 5, 6},
                   Row{8, 4, 5, 6, 5}, Row{9, 3, 6, 6, 6}, Row{9, 4, 6, 6, 6}}) {
        Graph g = johnson_graph(r.n, r.k);
        auto b = formula_bounds(graph_stats(g, all_pairs_distances(g)));
        CAPTURE(r.n);
        CAPTURE(r.k);
        CHECK(b.ed_thm2 == r.ed);
        CHECK(b.mi1 == r.mi1);
        CHECK(b.mi1_regular);
        CHECK(b.mi2 == r.mi2);
    }
}

TEST_CASE("formula_bounds on irregular and tiny graphs") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    auto b = formula_bounds(graph_stats(p3, all_pairs_distances(p3)));
    CHECK(b.ed_prop1 == 1);      // ceil(log2 2)
    CHECK(b.ed_thm2 == 1);       // 1 + ceil(log2 1)
    CHECK(b.mi1 == 2);           // 1 + ceil(log2 2), safe minimum over vertices
    CHECK_FALSE(b.mi1_regular);

    Graph k2 = build_graph(2, {{0, 1}});
    auto bk = formula_bounds(graph_stats(k2, all_pairs_distances(k2)));
    CHECK(bk.mi2 == 1); // 3 <= 1 + 1*2

    Graph single = build_graph(1, {});
    CHECK_THROWS_AS(formula_bounds(graph_stats(single, all_pairs_distances(single))),
                    std::invalid_argument);
}

TEST_CASE("johnson_closed_forms") {
    auto f62 = johnson_closed_forms(6, 2);
    REQUIRE(f62.beta.has_value());
    CHECK(*f62.beta == 4);
    auto f92 = johnson_closed_forms(9, 2);
    CHECK(*f92.beta == 6);

    auto f84 = johnson_closed_forms(8, 4);
    CHECK_FALSE(f84.beta.has_value());
    REQUIRE(f84.beta_upper.has_value());
    CHECK(*f84.beta_upper == 7);

    auto f63 = johnson_closed_forms(6, 3);
    REQUIRE(f63.eqdim.has_value());
    CHECK(*f63.eqdim == 10);

    auto f52 = johnson_closed_forms(5, 2);
    CHECK_FALSE(f52.beta.has_value()); // below the n >= 6 domain
    CHECK(*f52.eqdim == 3);
    CHECK(*johnson_closed_forms(4, 2).eqdim == 2);

    CHECK_FALSE(johnson_closed_forms(7, 3).eqdim.has_value()); // n != 2k
    CHECK_FALSE(johnson_closed_forms(8, 4).eqdim.has_value()); // even k
}
