// Variable neighbourhood search upper bounds for the dimensions, for
// instances out of reach of the exact solver. Candidates are fixed-size
// vertex subsets, the objective is the number of unresolved item pairs, and
// every reported set is re-verified before it leaves the module.
#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "metdim/solver.hpp"

namespace metdim {

struct VnsConfig {
    std::uint64_t seed = 1;
    int max_shake = 3;             // shaking swaps cycle r = 1..max_shake
    double time_budget_s = 120.0;
    std::optional<int> target_cardinality; // stop once a verified set this small is found
};

// Greedy start, then descend in cardinality: at each size, shake +
// first-improvement 1-swap local search until a resolving set is found or the
// budget runs out. Status is always upper_bound_only; the witness always
// passes is_resolving (falls back to S = V under an exhausted budget).
// Same seed, single thread: identical output.
SolveResult vns_upper_bound(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                            const VnsConfig& cfg = {});

// Independent restarts, one per seed (parallel when threads > 1); returns the
// smallest verified set, ties broken by seed order. Result does not depend on
// the thread count.
SolveResult vns_multi_seed(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                           const VnsConfig& base, std::span<const std::uint64_t> seeds,
                           int threads = 1);

} // namespace metdim
