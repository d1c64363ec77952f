#include "metdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "metdim/parallel.hpp"

namespace metdim {

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
                  std::vector<KSubset> labels) {
    if (vertex_count <= 0)
        throw std::invalid_argument("build_graph: vertex_count must be positive");

    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("build_graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

    if (!labels.empty()) {
        if (int(labels.size()) != vertex_count)
            throw std::invalid_argument("build_graph: label count != vertex count");
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].k != labels[0].k || labels[i].n != labels[0].n)
                throw std::invalid_argument("build_graph: labels must share n and cardinality");
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw std::invalid_argument("build_graph: duplicate vertex labels");
        }
    }

    Graph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edge_list);
    g.labels = std::move(labels);
    g.adj.assign(vertex_count, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());

    // Connectivity: every formula downstream assumes it.
    std::vector<char> seen(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != vertex_count) {
        int other = 0;
        while (seen[other]) ++other;
        throw std::invalid_argument(
            "build_graph: graph is disconnected; vertices 0 and " + std::to_string(other) +
            " lie in different components");
    }
    return g;
}

namespace {

void bfs_row(const Graph& g, int src, std::uint16_t* out) {
    const std::uint16_t unseen = 0xffff;
    std::fill(out, out + g.vertex_count, unseen);
    std::vector<int> frontier{src}, next;
    out[src] = 0;
    std::uint16_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier)
            for (int w : g.adj[u])
                if (out[w] == unseen) {
                    out[w] = d;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
}

} // namespace

DistanceMatrix all_pairs_distances(const Graph& g, int threads) {
    DistanceMatrix dist(g.vertex_count);
    parallel_for(0, g.vertex_count, threads,
                 [&](int src) { bfs_row(g, src, &dist.at(src, 0)); });
    return dist;
}

GraphStats graph_stats(const Graph& g, const DistanceMatrix& dist) {
    GraphStats s;
    s.vertex_count = g.vertex_count;
    s.edge_count = std::int64_t(g.edges.size());
    s.min_degree = g.vertex_count;
    s.max_degree = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
    }
    int diam = 0;
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
            diam = std::max(diam, int(dist(u, v)));
    s.diameter = diam;
    return s;
}

} // namespace metdim
