#include "metdim/json_io.hpp"

#include <stdexcept>

namespace metdim {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    if (g.has_labels()) {
        j["n"] = g.labels[0].n;
        j["k"] = g.labels[0].k;
        json verts = json::array();
        for (const auto& s : g.labels) verts.push_back(s.elements());
        j["vertices"] = std::move(verts);
    } else {
        j["n"] = g.vertex_count;
        j["k"] = nullptr;
        j["vertices"] = nullptr;
    }
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer field 'n'");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph json: missing array field 'edges'");

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edges must be index pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    int n = j["n"].get<int>();
    bool labeled = j.contains("k") && !j["k"].is_null();
    if (!labeled) return build_graph(n, std::move(edges));

    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph json: labeled graph needs a 'vertices' array");
    std::vector<KSubset> labels;
    for (const auto& v : j["vertices"]) {
        std::vector<int> elems = v.get<std::vector<int>>();
        labels.push_back(KSubset::from_elements(elems, n));
    }
    int k = j["k"].get<int>();
    for (const auto& s : labels)
        if (s.k != k) throw std::invalid_argument("graph json: vertex label cardinality != k");
    int vertex_count = int(labels.size());
    return build_graph(vertex_count, std::move(edges), std::move(labels));
}

json solve_result_to_json(const SolveResult& r, const std::string& kind,
                          const Graph* label_source) {
    json j;
    j["kind"] = kind;
    j["value"] = r.cardinality;
    j["status"] = to_string(r.status);
    json basis = json::array();
    for (int v : r.witness) {
        if (label_source && label_source->has_labels())
            basis.push_back(label_source->labels[v].elements());
        else
            basis.push_back(v);
    }
    j["basis"] = std::move(basis);
    j["lower_bound"] = r.lower_bound;
    j["nodes"] = r.nodes_explored;
    j["elapsed_ms"] = r.elapsed_s * 1000.0;
    return j;
}

} // namespace metdim
