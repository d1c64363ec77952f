// Graph and solver-result JSON formats shared by the CLI and the tests.
#pragma once

#include <string>

#include "json.hpp"
#include "metdim/graph.hpp"
#include "metdim/solver.hpp"

namespace metdim {

// {"n": <ground or vertex count>, "k": <int|null>, "vertices": [[1,2],...]|null,
//  "edges": [[u,v],...]}
// With k present, "n" is the label ground size and "vertices" lists each
// vertex's elements in canonical order; without labels, "n" is the vertex
// count and "vertices" is null.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"kind":..., "value":..., "status":..., "basis":[[...],...], "lower_bound":...,
//  "nodes":..., "elapsed_ms":...}; basis entries are element lists when the
// graph carries labels, vertex indices otherwise.
nlohmann::json solve_result_to_json(const SolveResult& r, const std::string& kind,
                                    const Graph* label_source = nullptr);

} // namespace metdim
