#include "metdim/vns.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "metdim/parallel.hpp"

namespace metdim {

namespace {

using Clock = std::chrono::steady_clock;

// Items with precomputed distance rows; grouping refinement is the only
// objective evaluator (two items are unresolved iff they end in one group).
struct VnsContext {
    const Graph& g;
    const DistanceMatrix& dist;
    ResolveKind kind;
    std::vector<Item> items;
    int nitems = 0;
    int nverts = 0;
    int dspan = 0; // distinct distance values = diameter + 1
    std::vector<std::uint16_t> rows; // item * nverts + w

    VnsContext(const Graph& gg, const DistanceMatrix& dd, ResolveKind kk)
        : g(gg), dist(dd), kind(kk), items(item_list(gg, kk)) {
        nitems = int(items.size());
        nverts = g.vertex_count;
        int maxd = 0;
        rows.resize(std::size_t(nitems) * nverts);
        for (int i = 0; i < nitems; ++i)
            for (int w = 0; w < nverts; ++w) {
                int d = item_distance(items[i], w, dist);
                rows[std::size_t(i) * nverts + w] = std::uint16_t(d);
                maxd = std::max(maxd, d);
            }
        dspan = maxd + 1;
    }

    std::uint16_t row(int item, int w) const { return rows[std::size_t(item) * nverts + w]; }
};

// Partition of items by coordinate vectors, built one landmark at a time.
struct Grouping {
    const VnsContext& ctx;
    std::vector<int> gid;
    int ngroups = 1;
    std::vector<int> table, stamp;
    int epoch = 0;

    explicit Grouping(const VnsContext& c)
        : ctx(c),
          gid(c.nitems, 0),
          table(std::size_t(c.nitems) * c.dspan, 0),
          stamp(std::size_t(c.nitems) * c.dspan, 0) {}

    void reset() {
        std::fill(gid.begin(), gid.end(), 0);
        ngroups = 1;
    }

    void refine(int w) {
        ++epoch;
        int next = 0;
        for (int i = 0; i < ctx.nitems; ++i) {
            std::size_t key = std::size_t(gid[i]) * ctx.dspan + ctx.row(i, w);
            if (stamp[key] != epoch) {
                stamp[key] = epoch;
                table[key] = next++;
            }
            gid[i] = table[key];
        }
        ngroups = next;
    }

    long long unresolved_pairs(std::vector<int>& cnt_scratch) const {
        cnt_scratch.assign(ngroups, 0);
        for (int i = 0; i < ctx.nitems; ++i) ++cnt_scratch[gid[i]];
        long long total = 0;
        for (int c : cnt_scratch) total += (long long)c * (c - 1) / 2;
        return total;
    }
};

struct Vns {
    const VnsContext& ctx;
    const VnsConfig& cfg;
    Clock::time_point deadline;
    std::mt19937_64 rng;
    std::uint64_t evals = 0;

    Grouping grouping;
    std::vector<int> cnt_scratch;
    // candidate-evaluation scratch: epoch-stamped counts over (group, dist)
    std::vector<int> kc, kstamp;
    std::vector<std::size_t> touched;
    int kepoch = 0;
    // punctured-grouping state reused across candidates of one w_out
    std::vector<int> active_items, active_gid;

    Vns(const VnsContext& c, const VnsConfig& f, Clock::time_point dl)
        : ctx(c),
          cfg(f),
          deadline(dl),
          rng(f.seed),
          grouping(c),
          kc(std::size_t(c.nitems) * c.dspan, 0),
          kstamp(std::size_t(c.nitems) * c.dspan, 0) {}

    bool out_of_time() const { return Clock::now() > deadline; }

    long long objective(const std::vector<int>& sel) {
        ++evals;
        grouping.reset();
        for (int w : sel) grouping.refine(w);
        return grouping.unresolved_pairs(cnt_scratch);
    }

    // Unresolved pairs of (punctured grouping) + landmark w, evaluated over
    // the items of non-singleton punctured groups only.
    long long eval_replacement(int w) {
        ++evals;
        ++kepoch;
        touched.clear();
        for (std::size_t a = 0; a < active_items.size(); ++a) {
            std::size_t key = std::size_t(active_gid[a]) * ctx.dspan + ctx.row(active_items[a], w);
            if (kstamp[key] != kepoch) {
                kstamp[key] = kepoch;
                kc[key] = 0;
                touched.push_back(key);
            }
            ++kc[key];
        }
        long long total = 0;
        for (auto key : touched) total += (long long)kc[key] * (kc[key] - 1) / 2;
        return total;
    }

    // Prepares active_items/active_gid for the grouping missing sel[skip].
    void build_punctured(const std::vector<int>& sel, int skip) {
        grouping.reset();
        for (std::size_t j = 0; j < sel.size(); ++j)
            if (int(j) != skip) grouping.refine(sel[j]);
        cnt_scratch.assign(grouping.ngroups, 0);
        for (int i = 0; i < ctx.nitems; ++i) ++cnt_scratch[grouping.gid[i]];
        active_items.clear();
        active_gid.clear();
        for (int i = 0; i < ctx.nitems; ++i)
            if (cnt_scratch[grouping.gid[i]] >= 2) {
                active_items.push_back(i);
                active_gid.push_back(grouping.gid[i]);
            }
    }

    // First-improvement 1-swaps until local optimum, objective 0, or time out.
    long long local_search(std::vector<int>& sel) {
        long long cur = objective(sel);
        std::vector<char> member(ctx.nverts, 0);
        for (int w : sel) member[w] = 1;
        bool improved = true;
        while (improved && cur > 0 && !out_of_time()) {
            improved = false;
            for (std::size_t j = 0; j < sel.size() && !improved; ++j) {
                build_punctured(sel, int(j));
                for (int w = 0; w < ctx.nverts; ++w) {
                    if (member[w]) continue;
                    long long obj = eval_replacement(w);
                    if (obj < cur) {
                        member[sel[j]] = 0;
                        member[w] = 1;
                        sel[j] = w;
                        cur = obj;
                        improved = true;
                        break;
                    }
                }
                if ((j & 7) == 0 && out_of_time()) break;
            }
        }
        return cur;
    }

    std::vector<int> shake(const std::vector<int>& sel, int r) {
        std::vector<int> out = sel;
        std::vector<char> member(ctx.nverts, 0);
        for (int w : out) member[w] = 1;
        r = std::min<int>(r, int(out.size()));
        for (int t = 0; t < r; ++t) {
            int pos = int(rng() % out.size());
            std::vector<int> nonmembers;
            nonmembers.reserve(ctx.nverts - out.size());
            for (int w = 0; w < ctx.nverts; ++w)
                if (!member[w]) nonmembers.push_back(w);
            if (nonmembers.empty()) break;
            int w = nonmembers[rng() % nonmembers.size()];
            member[out[pos]] = 0;
            member[w] = 1;
            out[pos] = w;
        }
        return out;
    }

    // Greedy: repeatedly add the vertex resolving the most unresolved pairs
    // (equivalently, max-coverage greedy on the implicit pair family).
    std::optional<std::vector<int>> greedy() {
        std::vector<int> sel;
        grouping.reset();
        long long cur = grouping.unresolved_pairs(cnt_scratch);
        std::vector<char> member(ctx.nverts, 0);
        while (cur > 0) {
            if (out_of_time()) return std::nullopt; // caller falls back to S = V
            active_items.clear();
            active_gid.clear();
            cnt_scratch.assign(grouping.ngroups, 0);
            for (int i = 0; i < ctx.nitems; ++i) ++cnt_scratch[grouping.gid[i]];
            for (int i = 0; i < ctx.nitems; ++i)
                if (cnt_scratch[grouping.gid[i]] >= 2) {
                    active_items.push_back(i);
                    active_gid.push_back(grouping.gid[i]);
                }
            int best_w = -1;
            long long best_obj = cur + 1;
            for (int w = 0; w < ctx.nverts; ++w) {
                if (member[w]) continue;
                long long obj = eval_replacement(w);
                if (obj < best_obj) {
                    best_obj = obj;
                    best_w = w;
                }
            }
            sel.push_back(best_w);
            member[best_w] = 1;
            grouping.refine(best_w);
            cur = best_obj;
        }
        std::sort(sel.begin(), sel.end());
        return sel;
    }

    // Remove the member whose loss leaves the fewest unresolved pairs.
    std::vector<int> best_drop(const std::vector<int>& sel) {
        int best_j = 0;
        long long best_obj = -1;
        for (std::size_t j = 0; j < sel.size(); ++j) {
            build_punctured(sel, int(j));
            long long obj = 0;
            for (int c : cnt_scratch) obj += (long long)c * (c - 1) / 2;
            if (best_obj < 0 || obj < best_obj) {
                best_obj = obj;
                best_j = int(j);
            }
        }
        std::vector<int> out = sel;
        out.erase(out.begin() + best_j);
        return out;
    }
};

} // namespace

SolveResult vns_upper_bound(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                            const VnsConfig& cfg) {
    if (cfg.max_shake < 1) throw std::invalid_argument("vns: max_shake must be >= 1");
    if (cfg.time_budget_s <= 0) throw std::invalid_argument("vns: time budget must be positive");

    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget_s));

    VnsContext ctx(g, dist, kind);
    Vns vns(ctx, cfg, deadline);

    SolveResult res;
    res.status = SolveStatus::upper_bound_only;

    auto finish = [&](std::vector<int> witness) {
        std::sort(witness.begin(), witness.end());
        if (!is_resolving(witness, kind, g, dist))
            throw std::runtime_error("vns: candidate failed the resolving re-check");
        res.witness = std::move(witness);
        res.cardinality = int(res.witness.size());
        res.nodes_explored = vns.evals;
        res.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    };

    auto seed_set = vns.greedy();
    if (!seed_set) {
        // Budget died inside the greedy: the full vertex set always resolves.
        std::vector<int> all(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v) all[v] = v;
        return finish(std::move(all));
    }
    std::vector<int> best = std::move(*seed_set);
    if (cfg.target_cardinality && int(best.size()) <= *cfg.target_cardinality)
        return finish(std::move(best));

    while (int(best.size()) > 1 && !vns.out_of_time()) {
        // Try to find a resolving set one smaller than the incumbent.
        std::vector<int> cur = vns.best_drop(best);
        long long cur_obj = vns.local_search(cur);
        int r = 1;
        while (cur_obj > 0 && !vns.out_of_time()) {
            std::vector<int> trial = vns.shake(cur, r);
            long long obj = vns.local_search(trial);
            if (obj < cur_obj) {
                cur = std::move(trial);
                cur_obj = obj;
                r = 1;
            } else {
                r = (r >= cfg.max_shake) ? 1 : r + 1;
            }
        }
        if (cur_obj != 0) break; // budget exhausted at this cardinality
        std::sort(cur.begin(), cur.end());
        best = std::move(cur);
        if (cfg.target_cardinality && int(best.size()) <= *cfg.target_cardinality) break;
    }
    return finish(std::move(best));
}

SolveResult vns_multi_seed(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                           const VnsConfig& base, std::span<const std::uint64_t> seeds,
                           int threads) {
    if (seeds.empty()) throw std::invalid_argument("vns_multi_seed: need at least one seed");
    std::vector<SolveResult> results(seeds.size());
    parallel_for(0, int(seeds.size()), threads, [&](int i) {
        VnsConfig cfg = base;
        cfg.seed = seeds[i];
        results[i] = vns_upper_bound(g, dist, kind, cfg);
    });
    int best = 0;
    for (int i = 1; i < int(results.size()); ++i)
        if (results[i].cardinality < results[best].cardinality) best = i;
    return results[best];
}

} // namespace metdim
