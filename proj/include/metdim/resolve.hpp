// Items (vertices and edges), their landmark coordinates, and the predicates
// behind all three dimensions: vertex/edge/mixed resolving sets and
// distance-equalizer sets.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

enum class ResolveKind { vertex, edge, mixed };

const char* to_string(ResolveKind k);
ResolveKind resolve_kind_from_string(const std::string& s);

// A vertex index or an edge (unordered pair of adjacent indices, u < v).
struct Item {
    enum class Kind : std::uint8_t { vertex, edge };
    Kind kind = Kind::vertex;
    int u = 0;
    int v = -1;

    static Item vertex(int x) { return Item{Kind::vertex, x, -1}; }
    static Item edge(int a, int b) {
        if (a > b) std::swap(a, b);
        return Item{Kind::edge, a, b};
    }
    bool is_vertex() const { return kind == Kind::vertex; }
    friend bool operator==(const Item&, const Item&) = default;
    std::string to_string() const;
};

// Items of the requested kind in canonical order: vertices by index first,
// then edges in the graph's canonical edge order.
std::vector<Item> item_list(const Graph& g, ResolveKind kind);

// d(a,w): the vertex distance, or min over edge endpoints.
inline int item_distance(const Item& a, int w, const DistanceMatrix& dist) {
    if (a.is_vertex()) return dist(a.u, w);
    return std::min<int>(dist(a.u, w), dist(a.v, w));
}

// Per-landmark distances in the order given. Rejects an empty landmark set.
std::vector<std::uint16_t> coordinate_vector(const Item& a, std::span<const int> landmarks,
                                             const DistanceMatrix& dist);

struct ResolveVerdict {
    bool resolving = false;
    // On failure: the first violating pair under canonical item order, and the
    // coordinate vector the two items share.
    std::optional<std::pair<Item, Item>> witness;
    std::vector<std::uint16_t> shared_coordinates;
    explicit operator bool() const { return resolving; }
};

// True iff all item pairs of the kind get distinct coordinate vectors w.r.t.
// S. Grouping is by vector hash with exact confirmation, never a pairwise
// scan.
ResolveVerdict is_resolving(std::span<const int> landmarks, ResolveKind kind, const Graph& g,
                            const DistanceMatrix& dist);

// ZE(a,S): the landmarks at distance zero from a.
struct ZeResult {
    int count = 0;
    std::vector<int> members;
};
ZeResult ze(const Item& a, std::span<const int> landmarks, const DistanceMatrix& dist);

struct EqualizerVerdict {
    bool equalizing = false;
    std::optional<std::pair<int, int>> witness; // pair outside S with no equidistant landmark
    explicit operator bool() const { return equalizing; }
};

// True iff every pair of distinct vertices outside S has some landmark
// equidistant from both.
EqualizerVerdict is_distance_equalizer(std::span<const int> landmarks, const Graph& g,
                                       const DistanceMatrix& dist);

} // namespace metdim
