// Johnson-graph generation J(n,k), the closed-form subset distance, and the
// explicit constructions used by the hitting-set bound and the J(n,2)
// dimension formula: the punctured sets S'_{x,y,z}, their witness edge pairs,
// and the constructive mixed basis for J(n,2).
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "metdim/graph.hpp"
#include "metdim/ksubset.hpp"

namespace metdim {

struct JohnsonParams {
    int n = 0;
    int k = 0;
    bool remapped = false; // true when the input (n,k) was folded onto (n, n-k)
};

// Folds k > n-k onto the isomorphic J(n, n-k). Throws when n <= k or k < 1.
JohnsonParams normalize_johnson(int n, int k);

std::int64_t binom(int n, int k);

// d(A,B) = k - |A∩B| = |A\B|; the graph distance in J(n,k) for n >= 2k.
int subset_distance(const KSubset& a, const KSubset& b);

// Canonical vertex order is colexicographic on bitmasks (= numeric mask
// order), giving a stable index<->subset bijection.
std::int64_t colex_rank(const KSubset& s);
KSubset subset_at_rank(int n, int k, std::int64_t rank);

// Vertices: all C(n,k) k-subsets in colex order, labels attached.
// Edges: AB with |A∩B| = k-1.
Graph johnson_graph(int n, int k);

// S'_{x,y,z}: all vertices except {x,z}∪T and {y,z}∪T over T ⊆ [n]\{x,y,z},
// |T| = k-2. Returned as sorted vertex indices of johnson_graph(n,k).
// Requires k >= 2 and mutually distinct x,y,z in [n].
std::vector<int> sprime(int n, int k, int x, int y, int z);

// The edge pair that S'_{x,y,z} cannot tell apart: e1 = (A,B), e2 = (A,C)
// with A = {x,y}∪T*, B = {x,z}∪T*, C = {y,z}∪T*.
struct Lemma1Witness {
    std::pair<int, int> e1, e2; // vertex-index pairs, smaller index first
    KSubset a, b, c;
};
Lemma1Witness lemma1_witness(int n, int k, int x, int y, int z, std::span<const int> t_star);

// The constructive mixed resolving set for J(n,2), n >= 5: all vertices except
// the matching {2i-1,2i}, i = 1..floor(n/2). Sorted vertex indices.
std::vector<int> theorem2_set(int n);

// C(n,2) - floor(n/2), the exact edge and mixed metric dimension of J(n,2).
std::int64_t theorem2_value(int n);

} // namespace metdim
