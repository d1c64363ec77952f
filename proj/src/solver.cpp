#include "metdim/solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <unordered_map>

namespace metdim {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::upper_bound_only: return "upper_bound_only";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::timeout: return "timeout";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Deduplicated, superset-free family in ascending popcount order.
struct Reduced {
    int ground = 0;
    std::vector<Bitset> sets;
    std::vector<int> group; // parallel to sets; empty when the family has no hints
    bool element_transitive = false;
    bool infeasible = false;
};

Reduced reduce_family(const SetFamily& fam) {
    Reduced out;
    out.ground = fam.ground_size;
    out.element_transitive = fam.element_transitive;
    for (const auto& s : fam.sets)
        if (s.none()) {
            out.infeasible = true;
            return out;
        }

    std::vector<int> order(fam.sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::vector<int> pc(fam.sets.size());
    for (std::size_t i = 0; i < fam.sets.size(); ++i) pc[i] = fam.sets[i].count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pc[a] < pc[b]; });

    bool grouped = !fam.group.empty();
    // A kept subset of candidate S must contain S's elements only, so its
    // first element lies in S: bucket kept sets by first element.
    std::vector<std::vector<int>> by_first(fam.ground_size);
    for (int idx : order) {
        const Bitset& s = fam.sets[idx];
        bool dominated = false;
        s.for_each([&](int e) {
            if (dominated) return;
            for (int kid : by_first[e])
                if (out.sets[kid].subset_of(s)) {
                    dominated = true;
                    return;
                }
        });
        if (dominated) continue;
        int kid = int(out.sets.size());
        out.sets.push_back(s);
        if (grouped) out.group.push_back(fam.group[idx]);
        by_first[s.first()].push_back(kid);
    }
    return out;
}

std::optional<std::vector<int>> greedy_on(const std::vector<Bitset>& sets, int ground) {
    for (const auto& s : sets)
        if (s.none()) return std::nullopt;

    std::vector<char> covered(sets.size(), 0);
    std::size_t left = sets.size();
    std::vector<int> chosen;
    while (left > 0) {
        std::vector<int> cov(ground, 0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!covered[i]) sets[i].for_each([&](int e) { ++cov[e]; });
        int best = 0;
        for (int e = 1; e < ground; ++e)
            if (cov[e] > cov[best]) best = e;
        chosen.push_back(best);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!covered[i] && sets[i].test(best)) {
                covered[i] = 1;
                --left;
            }
    }

    // Drop redundant picks (later elements can cover earlier ones).
    std::vector<int> cnt(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int e : chosen)
            if (sets[i].test(e)) ++cnt[i];
    for (std::size_t ci = chosen.size(); ci-- > 0;) {
        int e = chosen[ci];
        bool removable = true;
        for (std::size_t i = 0; i < sets.size() && removable; ++i)
            if (sets[i].test(e) && cnt[i] <= 1) removable = false;
        if (removable) {
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (sets[i].test(e)) --cnt[i];
            chosen.erase(chosen.begin() + ci);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Depth-first branch and bound over a reduced family.
class HittingSearch {
public:
    HittingSearch(const Reduced& fam, int limit, std::optional<Clock::time_point> deadline,
                  std::vector<int> root_group_optimum = {})
        : fam_(fam),
          ground_(fam.ground),
          nsets_(int(fam.sets.size())),
          limit_(limit),
          deadline_(deadline),
          banned_(fam.ground),
          cover_count_(fam.sets.size(), 0),
          occ_(fam.ground),
          root_tg_(std::move(root_group_optimum)) {
        for (int i = 0; i < nsets_; ++i)
            fam_.sets[i].for_each([&](int e) { occ_[e].push_back(i); });
        uncovered_ = nsets_;
        if (!fam.group.empty()) {
            ngroups_ = 1 + *std::max_element(fam.group.begin(), fam.group.end());
            if (ngroups_ > 4096) ngroups_ = 0; // hint unusable, skip the group bound
        }
        if (ngroups_ > 0) {
            gm_.assign(ngroups_, 0);
            gm_stamp_.assign(ngroups_, 0);
            gcov_.assign(std::size_t(ngroups_) * ground_, 0);
            gcov_stamp_.assign(std::size_t(ngroups_) * ground_, 0);
            gelems_.assign(ngroups_, {});
            gpe_.assign(ground_, 0);
            gpe_stamp_.assign(ground_, 0);
            root_tg_.resize(ngroups_, 0);
            chosen_touch_.assign(ngroups_, 0);
            // static element -> touched groups, for the decay rule below
            elem_groups_.assign(ground_, {});
            for (int e = 0; e < ground_; ++e) {
                std::vector<char> seen(ngroups_, 0);
                for (int id : occ_[e]) {
                    int g = fam_.group[id];
                    if (!seen[g]) {
                        seen[g] = 1;
                        elem_groups_[e].push_back(g);
                    }
                }
            }
        }
        cov_.assign(ground_, 0);
        asize_.assign(nsets_, 0);
    }

    void run(std::vector<int>& best, int& best_size) {
        best_ = &best;
        best_size_ = &best_size;
        if (fam_.element_transitive && nsets_ > 0) {
            // Transitive ground: some optimum contains the max-coverage
            // element, so the widest branching level collapses to one child.
            std::vector<int> cover(ground_, 0);
            for (int i = 0; i < nsets_; ++i)
                fam_.sets[i].for_each([&](int e) { ++cover[e]; });
            int e0 = 0;
            for (int e = 1; e < ground_; ++e)
                if (cover[e] > cover[e0]) e0 = e;
            include(e0);
            dfs();
            undo(e0);
            return;
        }
        dfs();
    }

    std::uint64_t nodes() const { return nodes_; }
    bool timed_out() const { return timed_out_; }
    int frontier_lb() const { return frontier_lb_; }

private:
    void record_incumbent() {
        std::vector<int> h = chosen_;
        // cover_count_ currently equals coverage by h; copy and prune.
        std::vector<int> cnt = cover_count_;
        for (std::size_t ci = h.size(); ci-- > 0;) {
            int e = h[ci];
            bool removable = true;
            for (int id : occ_[e])
                if (cnt[id] <= 1) {
                    removable = false;
                    break;
                }
            if (removable) {
                for (int id : occ_[e]) --cnt[id];
                h.erase(h.begin() + ci);
            }
        }
        if (int(h.size()) < *best_size_) {
            std::sort(h.begin(), h.end());
            *best_ = h;
            *best_size_ = int(h.size());
        }
    }

    // max of: greedy disjoint packing, counting bound, group counting bound.
    // Returns INT_MAX when some uncovered set has no allowed element.
    int residual_bound() {
        int m_uncovered = 0;
        std::fill(cov_.begin(), cov_.end(), 0);
        ++epoch_;
        touched_groups_.clear();
        sorted_ids_.clear();

        for (int id = 0; id < nsets_; ++id) {
            if (cover_count_[id] != 0) continue;
            int asz = fam_.sets[id].count_and_not(banned_);
            if (asz == 0) return INT_MAX;
            asize_[id] = asz;
            sorted_ids_.push_back(id);
            ++m_uncovered;
            fam_.sets[id].for_each([&](int e) {
                if (!banned_.test(e)) ++cov_[e];
            });
            if (ngroups_ > 0) {
                int gidx = fam_.group[id];
                if (gm_stamp_[gidx] != epoch_) {
                    gm_stamp_[gidx] = epoch_;
                    gm_[gidx] = 0;
                    gelems_[gidx].clear();
                    touched_groups_.push_back(gidx);
                }
                ++gm_[gidx];
                fam_.sets[id].for_each([&](int e) {
                    if (banned_.test(e)) return;
                    std::size_t c = std::size_t(gidx) * ground_ + e;
                    if (gcov_stamp_[c] != epoch_) {
                        gcov_stamp_[c] = epoch_;
                        gcov_[c] = 0;
                        gelems_[gidx].push_back(e);
                        if (gpe_stamp_[e] != epoch_) {
                            gpe_stamp_[e] = epoch_;
                            gpe_[e] = 0;
                        }
                        ++gpe_[e];
                    }
                    ++gcov_[c];
                });
            }
        }
        if (m_uncovered == 0) return 0;

        // Packing: ascending allowed size, pairwise disjoint allowed parts.
        std::sort(sorted_ids_.begin(), sorted_ids_.end(), [&](int a, int b) {
            return asize_[a] != asize_[b] ? asize_[a] < asize_[b] : a < b;
        });
        Bitset used(ground_);
        int packing = 0;
        for (int id : sorted_ids_) {
            const Bitset& s = fam_.sets[id];
            bool disjoint = true;
            s.for_each([&](int e) {
                if (disjoint && !banned_.test(e) && used.test(e)) disjoint = false;
            });
            if (!disjoint) continue;
            ++packing;
            s.for_each([&](int e) {
                if (!banned_.test(e)) used.set(e);
            });
        }

        // Counting: fewest elements whose coverages sum to the uncovered count.
        scratch_.clear();
        for (int e = 0; e < ground_; ++e)
            if (cov_[e] > 0) scratch_.push_back(cov_[e]);
        std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
        int counting = 0, acc = 0;
        for (int c : scratch_) {
            ++counting;
            acc += c;
            if (acc >= m_uncovered) break;
        }

        int bound = std::max(packing, counting);

        if (ngroups_ > 0 && !touched_groups_.empty()) {
            // Per group still carrying uncovered sets, a future element count:
            // a counting bound on the residual, or the root-exact optimum of
            // the group decayed by one per chosen element touching the group
            // (covering c sets can lower a group's optimum by at most the
            // number of elements doing the covering).
            long long total_t = 0;
            int max_gpe = 1;
            for (int g : touched_groups_) {
                scratch_.clear();
                for (int e : gelems_[g]) {
                    scratch_.push_back(gcov_[std::size_t(g) * ground_ + e]);
                    max_gpe = std::max(max_gpe, gpe_[e]);
                }
                std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
                int need = gm_[g], t = 0, a = 0;
                for (int c : scratch_) {
                    ++t;
                    a += c;
                    if (a >= need) break;
                }
                t = std::max(t, root_tg_[g] - chosen_touch_[g]);
                total_t += t;
            }
            bound = std::max(bound, int((total_t + max_gpe - 1) / max_gpe));
        }
        return bound;
    }

    void include(int e) {
        chosen_.push_back(e);
        for (int id : occ_[e])
            if (cover_count_[id]++ == 0) --uncovered_;
        if (ngroups_ > 0)
            for (int g : elem_groups_[e]) ++chosen_touch_[g];
    }
    void undo(int e) {
        for (int id : occ_[e])
            if (--cover_count_[id] == 0) ++uncovered_;
        chosen_.pop_back();
        if (ngroups_ > 0)
            for (int g : elem_groups_[e]) --chosen_touch_[g];
    }

    void dfs() {
        ++nodes_;
        if (deadline_ && (nodes_ & 255) == 0 && Clock::now() > *deadline_) timed_out_ = true;
        if (timed_out_) {
            frontier_lb_ = std::min(frontier_lb_, int(chosen_.size()));
            return;
        }
        if (uncovered_ == 0) {
            record_incumbent();
            return;
        }

        int bound = residual_bound();
        if (bound == INT_MAX) return; // some set lost all its elements
        int depth = int(chosen_.size());
        int lim = std::min(*best_size_, limit_);
        if (depth + std::max(bound, 1) >= lim) return;

        // Fail-first: smallest uncovered set by allowed size (ties: lowest id).
        int sel = -1, sel_size = INT_MAX;
        for (int id = 0; id < nsets_; ++id)
            if (cover_count_[id] == 0 && asize_[id] < sel_size) {
                sel = id;
                sel_size = asize_[id];
            }

        branch_elems_.clear();
        fam_.sets[sel].for_each([&](int e) {
            if (!banned_.test(e)) branch_elems_.push_back(e);
        });
        std::sort(branch_elems_.begin(), branch_elems_.end(), [&](int a, int b) {
            return cov_[a] != cov_[b] ? cov_[a] > cov_[b] : a < b;
        });

        auto elems = branch_elems_; // dfs() below reuses the scratch vector
        std::size_t banned_here = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            int e = elems[i];
            include(e);
            dfs();
            undo(e);
            if (timed_out_) {
                frontier_lb_ = std::min(frontier_lb_, depth + bound);
                break;
            }
            if (depth + std::max(bound, 1) >= std::min(*best_size_, limit_)) break;
            if (i + 1 < elems.size()) {
                banned_.set(e);
                ++banned_here;
            }
        }
        for (std::size_t i = 0; i < banned_here; ++i) banned_.reset(elems[i]);
    }

    const Reduced& fam_;
    int ground_, nsets_, limit_;
    std::optional<Clock::time_point> deadline_;

    Bitset banned_;
    std::vector<int> cover_count_;
    std::vector<std::vector<int>> occ_;
    std::vector<int> chosen_;
    int uncovered_ = 0;

    std::vector<int>* best_ = nullptr;
    int* best_size_ = nullptr;

    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    int frontier_lb_ = INT_MAX;

    // group-bound scratch (epoch-stamped, allocated once)
    int ngroups_ = 0;
    int epoch_ = 0;
    std::vector<int> gm_, gm_stamp_;
    std::vector<int> gcov_, gcov_stamp_;
    std::vector<std::vector<int>> gelems_;
    std::vector<int> gpe_, gpe_stamp_;
    std::vector<int> touched_groups_;
    std::vector<int> root_tg_;
    std::vector<int> chosen_touch_;
    std::vector<std::vector<int>> elem_groups_;

    // per-node scratch
    std::vector<int> cov_, asize_, sorted_ids_, scratch_, branch_elems_;
};

} // namespace

std::optional<std::vector<int>> greedy_hitting_set(const SetFamily& fam) {
    return greedy_on(fam.sets, fam.ground_size);
}

SolveResult min_hitting_set(const HittingInstance& instance) {
    auto t0 = Clock::now();
    SolveResult res;

    const auto& fam = instance.family;
    if (fam.sets.empty()) {
        res.status = SolveStatus::optimal;
        res.cardinality = 0;
        res.lower_bound = 0;
        res.elapsed_s = seconds_since(t0);
        return res;
    }

    Reduced reduced = reduce_family(fam);
    if (reduced.infeasible) {
        res.status = SolveStatus::infeasible;
        res.elapsed_s = seconds_since(t0);
        return res;
    }

    auto greedy = greedy_on(reduced.sets, reduced.ground);
    std::vector<int> best = *greedy;
    int best_size = int(best.size());

    int cap = instance.max_cardinality ? *instance.max_cardinality : INT_MAX - 1;
    std::optional<Clock::time_point> deadline;
    if (instance.time_budget_s)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*instance.time_budget_s));

    // Root strengthening for grouped families: solve each group's subfamily
    // exactly (they are tiny), giving the group bound its per-group optima.
    std::vector<int> root_tg;
    if (!reduced.group.empty()) {
        int ngroups = 1 + *std::max_element(reduced.group.begin(), reduced.group.end());
        if (ngroups <= 4096) {
            root_tg.assign(ngroups, 0);
            for (int g = 0; g < ngroups; ++g) {
                SetFamily sub;
                sub.ground_size = reduced.ground;
                for (std::size_t i = 0; i < reduced.sets.size(); ++i)
                    if (reduced.group[i] == g) sub.sets.push_back(reduced.sets[i]);
                if (sub.sets.empty()) continue;
                if (sub.sets.size() == 1) {
                    root_tg[g] = 1;
                    continue;
                }
                double remaining = 5.0;
                if (deadline)
                    remaining = std::min(
                        5.0, std::chrono::duration<double>(*deadline - Clock::now()).count() /
                                 (2.0 * (ngroups - g)));
                if (remaining <= 0) {
                    root_tg[g] = 1;
                    continue;
                }
                HittingInstance sub_inst;
                sub_inst.family = std::move(sub); // group hints stripped: no recursion below
                sub_inst.time_budget_s = remaining;
                SolveResult r = min_hitting_set(sub_inst);
                root_tg[g] = r.status == SolveStatus::optimal ? r.cardinality
                                                              : std::max(1, r.lower_bound);
            }
        }
    }

    HittingSearch search(reduced, cap + 1, deadline, std::move(root_tg));
    // The search improves `best` in place; it looks for solutions strictly
    // smaller than best_size and no larger than cap.
    search.run(best, best_size);

    res.nodes_explored = search.nodes();
    res.witness = best;
    res.cardinality = best_size;
    if (search.timed_out()) {
        res.status = SolveStatus::upper_bound_only;
        res.lower_bound = std::max(1, std::min(search.frontier_lb(), best_size));
    } else if (best_size <= cap) {
        res.status = SolveStatus::optimal;
        res.lower_bound = best_size;
    } else {
        // Exhausted: every hitting set of size <= cap was excluded.
        res.status = SolveStatus::upper_bound_only;
        res.lower_bound = cap + 1;
    }

    for (const auto& s : fam.sets)
        if (!std::any_of(res.witness.begin(), res.witness.end(),
                         [&](int e) { return s.test(e); }))
            throw std::runtime_error("min_hitting_set: witness misses a set");

    res.elapsed_s = seconds_since(t0);
    return res;
}

SetFamily resolving_family(const Graph& g, const DistanceMatrix& dist, ResolveKind kind) {
    auto items = item_list(g, kind);
    const int n = g.vertex_count;
    const std::size_t m = items.size();

    // Full distance row per item, then rows are compared pairwise.
    std::vector<std::uint16_t> rows(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (int w = 0; w < n; ++w)
            rows[i * n + w] = std::uint16_t(item_distance(items[i], w, dist));

    SetFamily fam;
    fam.ground_size = n;
    std::unordered_map<std::uint64_t, std::vector<int>> dedup;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::uint16_t* ri = &rows[i * n];
            const std::uint16_t* rj = &rows[j * n];
            Bitset r(n);
            int c = 0;
            for (int w = 0; w < n; ++w)
                if (ri[w] != rj[w]) {
                    r.set(w);
                    ++c;
                }
            if (c == n) continue; // hit by any non-empty landmark set
            if (c == 0) {
                // Unresolvable twin pair: surfaces as infeasible downstream.
                fam.sets.clear();
                fam.sets.push_back(Bitset(n));
                fam.provenance = {items[i].to_string() + "~" + items[j].to_string()};
                return fam;
            }
            auto& bucket = dedup[r.hash()];
            bool dup = false;
            for (int id : bucket)
                if (fam.sets[id] == r) {
                    dup = true;
                    break;
                }
            if (!dup) {
                bucket.push_back(int(fam.sets.size()));
                fam.sets.push_back(std::move(r));
            }
        }
    return fam;
}

SolveResult exact_dimension(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                            std::optional<double> time_budget_s) {
    if (g.vertex_count < 2)
        throw std::invalid_argument("exact_dimension: needs at least two vertices");

    HittingInstance inst;
    inst.family = resolving_family(g, dist, kind);
    inst.time_budget_s = time_budget_s;
    SolveResult res = min_hitting_set(inst);
    if (res.status == SolveStatus::infeasible) return res;

    if (res.cardinality == 0) {
        // Every pair is resolved by every vertex; dimension is still >= 1.
        res.cardinality = 1;
        res.witness = {0};
        res.lower_bound = std::max(res.lower_bound, 1);
    }

    auto verdict = is_resolving(res.witness, kind, g, dist);
    if (!verdict)
        throw std::runtime_error("exact_dimension: witness failed the resolving re-check");

    if (res.status == SolveStatus::optimal && res.cardinality > 1) {
        for (std::size_t i = 0; i < res.witness.size(); ++i) {
            std::vector<int> sub = res.witness;
            sub.erase(sub.begin() + i);
            if (is_resolving(sub, kind, g, dist))
                throw std::runtime_error("exact_dimension: basis is not minimal");
        }
    }
    return res;
}

std::optional<int> brute_force_dimension(const Graph& g, const DistanceMatrix& dist,
                                         ResolveKind kind, int max_cardinality) {
    if (g.vertex_count > 25)
        throw std::invalid_argument("brute_force_dimension: exceeds enumeration budget (|V| > 25)");
    int n = g.vertex_count;
    max_cardinality = std::min(max_cardinality, n);
    std::vector<int> pick;
    for (int c = 1; c <= max_cardinality; ++c) {
        pick.resize(c);
        for (int i = 0; i < c; ++i) pick[i] = i;
        while (true) {
            if (is_resolving(pick, kind, g, dist)) return c;
            int i = c - 1;
            while (i >= 0 && pick[i] == n - c + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

SolveResult exact_eqdim(const Graph& g, const DistanceMatrix& dist, int max_cardinality,
                        std::optional<double> time_budget_s) {
    auto t0 = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (time_budget_s)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*time_budget_s));

    const int n = g.vertex_count;
    max_cardinality = std::min(max_cardinality, n);

    // Q[x][y]: vertices equidistant from x and y.
    std::vector<Bitset> eq(std::size_t(n) * n, Bitset(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Bitset q(n);
            for (int w = 0; w < n; ++w)
                if (dist(x, w) == dist(y, w)) q.set(w);
            eq[std::size_t(x) * n + y] = q;
        }

    SolveResult res;
    std::uint64_t tested = 0;
    std::vector<int> pick, outside;
    for (int c = 1; c <= max_cardinality; ++c) {
        pick.resize(c);
        for (int i = 0; i < c; ++i) pick[i] = i;
        while (true) {
            if (deadline && (++tested & 2047) == 0 && Clock::now() > *deadline) {
                res.status = SolveStatus::timeout;
                res.cardinality = c; // sizes below c are exhausted
                res.lower_bound = c;
                res.nodes_explored = tested;
                res.elapsed_s = seconds_since(t0);
                return res;
            }
            Bitset s(n);
            for (int v : pick) s.set(v);
            outside.clear();
            for (int v = 0; v < n; ++v)
                if (!s.test(v)) outside.push_back(v);
            bool ok = true;
            for (std::size_t i = 0; i < outside.size() && ok; ++i)
                for (std::size_t j = i + 1; j < outside.size(); ++j)
                    if (!eq[std::size_t(outside[i]) * n + outside[j]].intersects(s)) {
                        ok = false;
                        break;
                    }
            if (ok) {
                res.status = SolveStatus::optimal;
                res.cardinality = c;
                res.witness = pick;
                res.lower_bound = c;
                res.nodes_explored = tested;
                res.elapsed_s = seconds_since(t0);
                return res;
            }
            int i = c - 1;
            while (i >= 0 && pick[i] == n - c + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    res.status = SolveStatus::timeout;
    res.lower_bound = max_cardinality + 1; // exhausted every size up to the cap
    res.cardinality = res.lower_bound;
    res.nodes_explored = tested;
    res.elapsed_s = seconds_since(t0);
    return res;
}

} // namespace metdim
