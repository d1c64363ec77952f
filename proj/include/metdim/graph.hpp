// Undirected-graph core: validated construction, BFS all-pairs distances and
// the degree/diameter statistics every bound formula consumes.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "metdim/ksubset.hpp"

namespace metdim {

// Simple connected undirected graph with dense 0-based vertex indices.
// Immutable after build_graph; labels, when present, are one KSubset per
// vertex (all distinct, equal cardinality).
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;   // canonical: u < v, sorted lexicographically
    std::vector<std::vector<int>> adj;        // sorted neighbor lists
    std::vector<KSubset> labels;              // empty, or one per vertex

    bool has_labels() const { return !labels.empty(); }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return int(adj[v].size()); }
};

// All-pairs shortest-path distances. Entries fit 16 bits (diameters here are
// tiny); dense storage since |V| stays in the hundreds.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * n, 0) {}

    int size() const { return n_; }
    std::uint16_t operator()(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }
    std::uint16_t& at(int u, int v) { return d_[std::size_t(u) * n_ + v]; }
    const std::uint16_t* row(int u) const { return d_.data() + std::size_t(u) * n_; }

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

struct GraphStats {
    int min_degree = 0;   // delta
    int max_degree = 0;   // Delta
    int diameter = 0;
    int vertex_count = 0;
    std::int64_t edge_count = 0;
};

// Validates and canonicalizes: deduplicates the edge list, rejects self-loops,
// out-of-range indices and disconnected input (the rejection names one vertex
// from each of two components).
Graph build_graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
                  std::vector<KSubset> labels = {});

// BFS from every source; sources are processed in parallel when threads > 1,
// with identical output regardless of thread count.
DistanceMatrix all_pairs_distances(const Graph& g, int threads = 1);

GraphStats graph_stats(const Graph& g, const DistanceMatrix& dist);

} // namespace metdim
