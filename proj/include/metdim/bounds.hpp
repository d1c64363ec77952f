// The lower-bound ladder: degree/diameter formula bounds, the W_uv strict-side
// sets and their hitting-set family (mhs_<), and the punctured-set complement
// family whose minimum hitting set lower-bounds the edge metric dimension of
// Johnson graphs (MHSP).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metdim/bitset.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// An indexed family of vertex subsets over ground 0..ground_size-1.
// provenance (optional) carries one human-readable tag per set, merged on
// dedup; group (optional) is a bound hint: sets sharing structure (e.g. the
// same middle element z) get the same group id.
struct SetFamily {
    int ground_size = 0;
    std::vector<Bitset> sets;
    std::vector<std::string> provenance; // empty, or parallel to sets
    std::vector<int> group;              // empty, or parallel to sets

    // Caller-asserted: the instance's automorphism group is transitive on
    // ground elements, so some optimal hitting set contains any fixed
    // element. The solver uses it as a sound forced first choice.
    bool element_transitive = false;

    std::size_t size() const { return sets.size(); }
};

// Strict-side sets of an edge uv: W_uv = {w : d(u,w) < d(v,w)} and the
// mirror W_vu. Equidistant vertices fall in neither. Rejects non-edges.
std::pair<Bitset, Bitset> w_sets(int u, int v, const Graph& g, const DistanceMatrix& dist);

// {W_uv, W_vu : uv ∈ E}, deduplicated; its minimum hitting set is mhs_<(G),
// a lower bound on the mixed metric dimension.
SetFamily mixed_w_family(const Graph& g, const DistanceMatrix& dist);

// {complement of S'_{x,y,z}} over all triples, indexed by (unordered {x,y}, z).
// Every edge resolving set of J(n,k) hits every member; the family's minimum
// hitting set is the MHSP lower bound on the edge metric dimension.
SetFamily mhsp_family(int n, int k);

struct BoundsReport {
    int ed_prop1 = 0;              // beta_E >= ceil(log2 Delta)
    int ed_thm2 = 0;               // beta_E >= 1 + ceil(log2 delta)   (Table "Ed")
    int mi1 = 0;                   // beta_M >= 1 + ceil(log2 (1+delta))
    bool mi1_regular = false;      // true when delta = Delta (the stated r-regular form);
                                   // otherwise mi1 is the safe minimum over vertices
    int mi2 = 0;                   // smallest b with |V|+|E| <= Diam^b + b(Delta+1)
    std::optional<int> mhsp;       // filled by the solver, Johnson graphs only
    std::optional<int> mhs_less;   // filled by the solver

    // The chain every computed instance must satisfy.
    static constexpr const char* chain =
        "ed_prop1<=beta_E, ed_thm2<=beta_E, mi1<=beta_M, mi2<=beta_M, "
        "mhsp<=beta_E<=beta_M, mhs_less<=beta_M, max(beta,beta_E)<=beta_M";
};

// The formula part only (mhsp/mhs_less stay empty). Rejects diameter 0.
BoundsReport formula_bounds(const GraphStats& stats);

// Known closed forms for J(n,k); fields are set only inside each statement's
// domain, never extrapolated.
struct JohnsonClosedForms {
    std::optional<std::int64_t> beta;       // = ceil(2n/3), k = 2, n >= 6
    std::optional<std::int64_t> beta_upper; // <= floor(k(n+1)/(k+1)), k >= 3, n >= 2k
    std::optional<std::int64_t> eqdim;      // k = 2 (n >= 4); n = 2k with odd k >= 3
};
JohnsonClosedForms johnson_closed_forms(int n, int k);

} // namespace metdim
