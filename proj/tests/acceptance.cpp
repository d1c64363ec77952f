// Acceptance suite: runs each criterion end to end and prints one PASS/FAIL
// line per criterion. Exit code 0 iff every selected criterion passes.
//
//   acceptance [--criterion N]... [--stretch]
//
// --stretch additionally runs the non-gating J(11,5) sandwich (exact MHSP
// plus a VNS mixed resolving set); its outcome never affects the exit code.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "metdim/driver.hpp"
#include "metdim/johnson.hpp"
#include "metdim/json_io.hpp"
#include "metdim/vns.hpp"

using namespace metdim;

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    std::map<std::pair<int, int>, std::pair<Graph, DistanceMatrix>> johnson_cache;
    std::map<std::tuple<int, int, int>, SolveResult> dim_cache;

    const std::pair<Graph, DistanceMatrix>& johnson(int n, int k) {
        auto key = std::pair{n, k};
        auto it = johnson_cache.find(key);
        if (it == johnson_cache.end()) {
            Graph g = johnson_graph(n, k);
            DistanceMatrix d = all_pairs_distances(g);
            it = johnson_cache.emplace(key, std::pair{std::move(g), std::move(d)}).first;
        }
        return it->second;
    }

    const SolveResult& dim(int n, int k, ResolveKind kind, double budget_s) {
        auto key = std::tuple{n, k, int(kind)};
        auto it = dim_cache.find(key);
        if (it == dim_cache.end()) {
            const auto& [g, d] = johnson(n, k);
            it = dim_cache.emplace(key, exact_dimension(g, d, kind, budget_s)).first;
        }
        return it->second;
    }
};

#define EXPECT(cond, msg)                                        \
    do {                                                         \
        if (!(cond)) {                                           \
            ok = false;                                          \
            log << "      failed: " << msg << "\n";              \
        }                                                        \
    } while (0)

bool crit1_johnson_structure(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    for (int n = 4; n <= 12; ++n)
        for (int k = 2; 2 * k <= n; ++k) {
            const auto& [g, d] = ctx.johnson(n, k);
            EXPECT(g.vertex_count == binom(n, k),
                   "J(" << n << "," << k << ") |V| = " << g.vertex_count);
            for (int v = 0; v < g.vertex_count && ok; ++v)
                EXPECT(g.degree(v) == k * (n - k), "J(" << n << "," << k << ") degree at " << v);
            auto stats = graph_stats(g, d);
            EXPECT(stats.diameter == k, "J(" << n << "," << k << ") diameter " << stats.diameter);
            for (int i = 0; i < g.vertex_count && ok; ++i)
                for (int j = 0; j < g.vertex_count; ++j)
                    if (int(d(i, j)) != subset_distance(g.labels[i], g.labels[j])) {
                        EXPECT(false, "J(" << n << "," << k << ") BFS vs closed form at (" << i
                                          << "," << j << ")");
                        break;
                    }
        }
    return ok;
}

bool crit2_theorem1_constructive(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    for (int n = 5; n <= 10; ++n) {
        const auto& [g, d] = ctx.johnson(n, 2);
        auto set = theorem2_set(n);
        EXPECT(std::int64_t(set.size()) == theorem2_value(n), "size at n=" << n);
        EXPECT(bool(is_resolving(set, ResolveKind::mixed, g, d)),
               "constructive set not mixed resolving at n=" << n);
    }
    return ok;
}

bool crit3_theorem1_optimal(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    const std::int64_t expected[] = {8, 12, 18};
    for (int n = 5; n <= 7; ++n) {
        for (auto kind : {ResolveKind::edge, ResolveKind::mixed}) {
            const auto& r = ctx.dim(n, 2, kind, 600.0);
            EXPECT(r.status == SolveStatus::optimal,
                   "J(" << n << ",2) " << to_string(kind) << " not optimal: "
                        << to_string(r.status));
            EXPECT(r.cardinality == expected[n - 5],
                   "J(" << n << ",2) " << to_string(kind) << " = " << r.cardinality
                        << ", expected " << expected[n - 5]);
        }
    }
    return ok;
}

bool crit4_observation1(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    const auto& [g, d] = ctx.johnson(4, 2);
    auto be = brute_force_dimension(g, d, ResolveKind::edge, 6);
    auto bm = brute_force_dimension(g, d, ResolveKind::mixed, 6);
    EXPECT(be && *be == 5, "enumeration edge dimension");
    EXPECT(bm && *bm == 5, "enumeration mixed dimension");
    EXPECT(ctx.dim(4, 2, ResolveKind::edge, 60).cardinality == 5, "solver edge dimension");
    EXPECT(ctx.dim(4, 2, ResolveKind::mixed, 60).cardinality == 5, "solver mixed dimension");

    std::vector<int> basis;
    for (auto elems : {std::vector<int>{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})
        basis.push_back(int(colex_rank(KSubset::from_elements(elems, 4))));
    std::sort(basis.begin(), basis.end());
    EXPECT(bool(is_resolving(basis, ResolveKind::mixed, g, d)), "listed basis");
    return ok;
}

bool crit5_table_bounds(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    struct Row {
        int n, k, ed, mi1, mi2, mhsp, mhs_less;
    };
    const Row rows[] = {{6, 3, 5, 5, 4, 6, 4},  {7, 3, 5, 5, 5, 10, 5}, {8, 3, 5, 5, 6, 12, 6},
                        {8, 4, 5, 6, 5, 6, 5},  {9, 3, 6, 6, 6, 16, 6}, {9, 4, 6, 6, 6, 9, 6}};
    for (const auto& row : rows) {
        const auto& [g, d] = ctx.johnson(row.n, row.k);
        auto fb = formula_bounds(graph_stats(g, d));
        EXPECT(fb.ed_thm2 == row.ed, "Ed at J(" << row.n << "," << row.k << ")");
        EXPECT(fb.mi1 == row.mi1, "Mi1 at J(" << row.n << "," << row.k << ")");
        EXPECT(fb.mi2 == row.mi2, "Mi2 at J(" << row.n << "," << row.k << ")");

        auto mhsp = min_hitting_set({mhsp_family(row.n, row.k), {}, 280.0});
        EXPECT(mhsp.status == SolveStatus::optimal,
               "MHSP solve at J(" << row.n << "," << row.k << "): " << to_string(mhsp.status));
        EXPECT(mhsp.cardinality == row.mhsp, "MHSP at J(" << row.n << "," << row.k << ") = "
                                                 << mhsp.cardinality << ", expected " << row.mhsp);

        auto whs = min_hitting_set({mixed_w_family(g, d), {}, 280.0});
        EXPECT(whs.status == SolveStatus::optimal,
               "mhs_< solve at J(" << row.n << "," << row.k << ")");
        EXPECT(whs.cardinality == row.mhs_less,
               "mhs_< at J(" << row.n << "," << row.k << ") = " << whs.cardinality
                             << ", expected " << row.mhs_less);
    }
    return ok;
}

bool crit6_table_exact_small(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    struct Row {
        int n, k, beta, beta_e, beta_m;
    };
    for (auto row : {Row{6, 3, 4, 8, 8}, Row{7, 3, 5, 10, 10}}) {
        auto check = [&](ResolveKind kind, int expected, const char* name) {
            const auto& r = ctx.dim(row.n, row.k, kind, 1700.0);
            EXPECT(r.status == SolveStatus::optimal, name << " at J(" << row.n << "," << row.k
                                                          << "): " << to_string(r.status));
            EXPECT(r.cardinality == expected, name << " at J(" << row.n << "," << row.k << ") = "
                                                   << r.cardinality << ", expected " << expected);
        };
        check(ResolveKind::vertex, row.beta, "beta");
        check(ResolveKind::edge, row.beta_e, "beta_E");
        check(ResolveKind::mixed, row.beta_m, "beta_M");
    }
    return ok;
}

bool crit7_lemma1_suite(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    std::mt19937_64 rng(2024);
    std::vector<std::pair<int, int>> params;
    for (int n = 4; n <= 12; ++n)
        for (int k = 2; 2 * k <= n; ++k) params.emplace_back(n, k);

    int failures = 0;
    for (int draw = 0; draw < 500; ++draw) {
        auto [n, k] = params[rng() % params.size()];
        const auto& [g, d] = ctx.johnson(n, k);
        int x = 1 + int(rng() % n), y, z;
        do y = 1 + int(rng() % n); while (y == x);
        do z = 1 + int(rng() % n); while (z == x || z == y);
        std::vector<int> rest;
        for (int e = 1; e <= n; ++e)
            if (e != x && e != y && e != z) rest.push_back(e);
        for (int i = 0; i < k - 2; ++i)
            std::swap(rest[i], rest[i + rng() % (rest.size() - i)]);
        std::vector<int> tstar(rest.begin(), rest.begin() + (k - 2));

        auto sp = sprime(n, k, x, y, z);
        bool good = std::int64_t(sp.size()) == binom(n, k) - 2 * binom(n - 3, k - 2);
        auto w = lemma1_witness(n, k, x, y, z, tstar);
        good = good && g.adjacent(w.e1.first, w.e1.second) &&
               g.adjacent(w.e2.first, w.e2.second);
        if (good) {
            auto c1 = coordinate_vector(Item::edge(w.e1.first, w.e1.second), sp, d);
            auto c2 = coordinate_vector(Item::edge(w.e2.first, w.e2.second), sp, d);
            good = c1 == c2;
        }
        if (!good) {
            ++failures;
            log << "      draw " << draw << ": J(" << n << "," << k << ") x=" << x << " y=" << y
                << " z=" << z << "\n";
        }
    }
    EXPECT(failures == 0, failures << " of 500 draws failed");
    return ok;
}

bool crit8_oracle_equivalence(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    std::vector<std::pair<std::string, std::pair<Graph, DistanceMatrix>>> instances;
    instances.emplace_back("J(4,2)", ctx.johnson(4, 2));
    instances.emplace_back("J(5,2)", ctx.johnson(5, 2));
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    instances.emplace_back("P4", std::pair{p4, all_pairs_distances(p4)});
    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    instances.emplace_back("C5", std::pair{c5, all_pairs_distances(c5)});
    Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    instances.emplace_back("C6", std::pair{c6, all_pairs_distances(c6)});

    for (const auto& [name, gd] : instances) {
        const auto& [g, d] = gd;
        for (auto kind : {ResolveKind::vertex, ResolveKind::edge, ResolveKind::mixed}) {
            auto brute = brute_force_dimension(g, d, kind, g.vertex_count);
            auto exact = exact_dimension(g, d, kind, 280.0);
            EXPECT(brute.has_value(), name << " " << to_string(kind) << " enumeration failed");
            EXPECT(exact.status == SolveStatus::optimal,
                   name << " " << to_string(kind) << " solver not optimal");
            if (brute && exact.status == SolveStatus::optimal)
                EXPECT(*brute == exact.cardinality,
                       name << " " << to_string(kind) << ": enumeration " << *brute
                            << " vs solver " << exact.cardinality);
        }
    }
    return ok;
}

bool crit9_bound_chain(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    const std::pair<int, int> instances[] = {{4, 2}, {5, 2}, {6, 2}, {7, 2}, {6, 3}, {7, 3}};
    for (auto [n, k] : instances) {
        const auto& [g, d] = ctx.johnson(n, k);
        int beta = ctx.dim(n, k, ResolveKind::vertex, 1700.0).cardinality;
        int beta_e = ctx.dim(n, k, ResolveKind::edge, 1700.0).cardinality;
        int beta_m = ctx.dim(n, k, ResolveKind::mixed, 1700.0).cardinality;
        auto fb = formula_bounds(graph_stats(g, d));
        auto mhsp = min_hitting_set({mhsp_family(n, k), {}, 280.0});
        auto whs = min_hitting_set({mixed_w_family(g, d), {}, 280.0});
        std::ostringstream tag;
        tag << "J(" << n << "," << k << ")";
        EXPECT(fb.ed_prop1 <= beta_e, tag.str() << " ed_prop1 > beta_E");
        EXPECT(fb.ed_thm2 <= beta_e, tag.str() << " Ed > beta_E");
        EXPECT(fb.mi1 <= beta_m, tag.str() << " Mi1 > beta_M");
        EXPECT(fb.mi2 <= beta_m, tag.str() << " Mi2 > beta_M");
        EXPECT(mhsp.status == SolveStatus::optimal && mhsp.cardinality <= beta_e,
               tag.str() << " MHSP > beta_E");
        EXPECT(beta_e <= beta_m, tag.str() << " beta_E > beta_M");
        EXPECT(whs.status == SolveStatus::optimal && whs.cardinality <= beta_m,
               tag.str() << " mhs_< > beta_M");
        EXPECT(std::max(beta, beta_e) <= beta_m, tag.str() << " max(beta,beta_E) > beta_M");
    }
    return ok;
}

bool crit10_eqdim(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    struct Row {
        int n, k, expected, cap;
    };
    for (auto row : {Row{4, 2, 2, 5}, Row{5, 2, 3, 9}, Row{6, 2, 3, 14}, Row{6, 3, 10, 19}}) {
        const auto& [g, d] = ctx.johnson(row.n, row.k);
        auto r = exact_eqdim(g, d, row.cap, 1700.0);
        EXPECT(r.status == SolveStatus::optimal, "eqdim J(" << row.n << "," << row.k
                                                            << "): " << to_string(r.status));
        EXPECT(r.cardinality == row.expected, "eqdim J(" << row.n << "," << row.k << ") = "
                                                         << r.cardinality << ", expected "
                                                         << row.expected);
        if (r.status == SolveStatus::optimal)
            EXPECT(bool(is_distance_equalizer(r.witness, g, d)),
                   "eqdim witness J(" << row.n << "," << row.k << ")");
    }
    return ok;
}

bool crit11_prop5(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    for (int n : {6, 7}) {
        const auto& r = ctx.dim(n, 2, ResolveKind::vertex, 280.0);
        std::int64_t expected = *johnson_closed_forms(n, 2).beta;
        EXPECT(r.status == SolveStatus::optimal, "beta J(" << n << ",2) not optimal");
        EXPECT(r.cardinality == expected, "beta J(" << n << ",2) = " << r.cardinality
                                                    << ", expected " << expected);
    }
    return ok;
}

bool crit12_vns(Ctx& ctx, std::ostream& log) {
    bool ok = true;
    struct Row {
        int n, k, optimum;
    };
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    for (auto row : {Row{6, 3, 8}, Row{7, 3, 10}}) {
        const auto& [g, d] = ctx.johnson(row.n, row.k);
        VnsConfig cfg;
        cfg.time_budget_s = 120.0;
        cfg.target_cardinality = row.optimum;
        auto r = vns_multi_seed(g, d, ResolveKind::mixed, cfg, seeds, 1);
        EXPECT(r.cardinality == row.optimum, "VNS mixed on J(" << row.n << "," << row.k << ") = "
                                                 << r.cardinality << ", expected " << row.optimum);
        EXPECT(bool(is_resolving(r.witness, ResolveKind::mixed, g, d)),
               "VNS witness J(" << row.n << "," << row.k << ")");
    }
    return ok;
}

bool stretch_observation2(Ctx&, std::ostream& log) {
    auto rep = verify_observation2(7200.0, 3600.0, 5, 1);
    log << "      " << rep.summary << "\n";
    return rep.pass;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<bool(Ctx&, std::ostream&)> run;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    bool stretch = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            selected.push_back(std::atoi(argv[++i]));
        else if (std::strcmp(argv[i], "--stretch") == 0)
            stretch = true;
        else {
            std::cerr << "usage: acceptance [--criterion N]... [--stretch]\n";
            return 2;
        }
    }

    const Criterion criteria[] = {
        {1, "Johnson structure: |V|, regularity, diameter, closed-form distances", 30,
         crit1_johnson_structure},
        {2, "Theorem 1 constructive: mixed resolving sets of size C(n,2)-floor(n/2)", 60,
         crit2_theorem1_constructive},
        {3, "Theorem 1 optimality: exact beta_E = beta_M on J(5..7,2)", 600, crit3_theorem1_optimal},
        {4, "Observation 1: J(4,2) dimensions and listed basis", 10, crit4_observation1},
        {5, "Table bound columns: Ed, Mi1, Mi2, MHSP, mhs_< on all six rows", 300,
         crit5_table_bounds},
        {6, "Table exact columns: J(6,3) and J(7,3)", 1800, crit6_table_exact_small},
        {7, "Lemma 1 property suite: 500 randomized draws", 120, crit7_lemma1_suite},
        {8, "Oracle equivalence: solver vs enumeration on five graphs", 300,
         crit8_oracle_equivalence},
        {9, "Bound chain on every instance with exact values", 3600, crit9_bound_chain},
        {10, "Equidistant dimension: J(4,2), J(5,2), J(6,2), J(6,3)", 1800, crit10_eqdim},
        {11, "Proposition 5 cross-check: beta(J(6,2)), beta(J(7,2))", 300, crit11_prop5},
        {12, "VNS reaches the optimum on J(6,3) and J(7,3) mixed", 1200, crit12_vns},
    };

    Ctx ctx;
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        std::ostringstream log;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(ctx, log);
        } catch (const std::exception& e) {
            log << "      exception: " << e.what() << "\n";
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_time = elapsed <= c.limit_s;
        all_ok = all_ok && ok && in_time;
        std::cout << "[" << (c.id < 10 ? " " : "") << c.id << "] "
                  << ((ok && in_time) ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << std::fixed << std::setprecision(2) << elapsed << "s"
                  << (in_time ? "" : ", over limit") << ", limit " << int(c.limit_s) << "s)\n";
        if (!ok) std::cout << log.str();
        std::cout.flush();
    }

    if (stretch) {
        std::ostringstream log;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = stretch_observation2(ctx, log);
        } catch (const std::exception& e) {
            log << "      exception: " << e.what() << "\n";
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << "[ S] " << (ok ? "PASS" : "MISS") << "  stretch: Observation 2 on J(11,5)"
                  << "  (" << std::fixed << elapsed << "s, non-gating)\n"
                  << log.str();
    }

    return all_ok ? 0 : 1;
}
