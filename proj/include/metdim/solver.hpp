// Exact minimum hitting set by branch and bound, the reduction of all three
// dimension problems to it, tiny-instance enumeration oracles, and the exact
// equidistant-dimension search.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metdim/bounds.hpp"
#include "metdim/resolve.hpp"

namespace metdim {

struct HittingInstance {
    SetFamily family;
    std::optional<int> max_cardinality;   // search only for hitting sets this small
    std::optional<double> time_budget_s;
};

enum class SolveStatus {
    optimal,          // witness is a minimum hitting set / basis
    upper_bound_only, // witness is valid; optimality not proven
    infeasible,       // some set is empty (or an item pair is unresolvable)
    timeout,          // budget exhausted with no certified witness;
                      // cardinality then mirrors lower_bound
};
const char* to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::timeout;
    int cardinality = 0;
    std::vector<int> witness; // sorted
    int lower_bound = 0;      // best proven lower bound on the optimum
    std::uint64_t nodes_explored = 0;
    double elapsed_s = 0.0;
};

// Max-coverage greedy, redundant elements pruned; the initial incumbent for
// the branch and bound. nullopt when a set is empty (infeasible).
std::optional<std::vector<int>> greedy_hitting_set(const SetFamily& fam);

// Branch and bound: dedup + dominated-superset removal, branching on an
// element of the smallest uncovered set (fail-first, elements by descending
// coverage), bounding by the best of greedy disjoint packing, a top-coverage
// counting bound, and a group counting bound when the family carries group
// hints. Deterministic: identical inputs give identical witnesses.
SolveResult min_hitting_set(const HittingInstance& instance);

// One set per unordered item pair: the vertices telling the pair apart.
// Sets equal to the full ground set are dropped (any non-empty landmark set
// hits them); an empty set marks an unresolvable pair and makes the instance
// infeasible. vertex_transitive is a caller assertion about the graph's
// automorphism group (true for Johnson graphs) and marks the family
// element-transitive for the solver's symmetry shortcut.
SetFamily resolving_family(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                           bool vertex_transitive = false);

// The dimension of the requested kind with a basis, via the hitting-set
// reduction. The basis is re-checked with is_resolving, and on optimal
// results single-element removals are verified to break resolving.
SolveResult exact_dimension(const Graph& g, const DistanceMatrix& dist, ResolveKind kind,
                            std::optional<double> time_budget_s = {},
                            bool vertex_transitive = false);

// Subset enumeration in increasing cardinality; the oracle for tiny graphs.
// Returns nullopt when no resolving set of size <= max_cardinality exists.
// Rejects |V| > 25.
std::optional<int> brute_force_dimension(const Graph& g, const DistanceMatrix& dist,
                                         ResolveKind kind, int max_cardinality);

// Minimum distance-equalizer set by enumeration in increasing cardinality
// with first-violated-pair pruning. The constraints depend on V\S, so no
// hitting-set reduction applies.
SolveResult exact_eqdim(const Graph& g, const DistanceMatrix& dist, int max_cardinality,
                        std::optional<double> time_budget_s = {});

} // namespace metdim
