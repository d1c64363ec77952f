#include "doctest.h"
#include "metdim/johnson.hpp"
#include "metdim/json_io.hpp"
#include "metdim/solver.hpp"

using namespace metdim;
using nlohmann::json;

TEST_CASE("johnson graph JSON round trip") {
    Graph g = johnson_graph(4, 2);
    json j = graph_to_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    REQUIRE(j["vertices"].is_array());
    CHECK(j["vertices"].size() == 6);
    CHECK(j["vertices"][0] == json::array({1, 2})); // canonical order, sorted elements
    CHECK(j["edges"][0][0].get<int>() < j["edges"][0][1].get<int>());

    Graph back = graph_from_json(j);
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.edges == g.edges);
    REQUIRE(back.has_labels());
    for (int v = 0; v < g.vertex_count; ++v) CHECK(back.labels[v] == g.labels[v]);
}

TEST_CASE("unlabeled graph JSON round trip") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    json j = graph_to_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["k"].is_null());
    CHECK(j["vertices"].is_null());
    Graph back = graph_from_json(j);
    CHECK(back.vertex_count == 4);
    CHECK(back.edges == g.edges);
    CHECK_FALSE(back.has_labels());
}

TEST_CASE("graph JSON validation errors") {
    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
    json bad = {{"n", 3}, {"k", 2}, {"edges", json::array()}};
    CHECK_THROWS_AS(graph_from_json(bad), std::invalid_argument); // labeled but no vertices
    // disconnected input is rejected by construction
    json disc = {{"n", 4}, {"k", nullptr}, {"edges", {{0, 1}, {2, 3}}}};
    CHECK_THROWS_WITH_AS(graph_from_json(disc), doctest::Contains("disconnected"),
                         std::invalid_argument);
}

TEST_CASE("solver result JSON shape") {
    Graph g = johnson_graph(4, 2);
    auto d = all_pairs_distances(g);
    auto r = exact_dimension(g, d, ResolveKind::edge);
    json j = solve_result_to_json(r, "edge", &g);
    CHECK(j["kind"] == "edge");
    CHECK(j["value"] == 5);
    CHECK(j["status"] == "optimal");
    REQUIRE(j["basis"].is_array());
    CHECK(j["basis"].size() == 5);
    CHECK(j["basis"][0].is_array()); // element lists when labels exist
    CHECK(j.contains("nodes"));
    CHECK(j.contains("elapsed_ms"));
    CHECK(j["lower_bound"] == 5);

    json j2 = solve_result_to_json(r, "edge", nullptr);
    CHECK(j2["basis"][0].is_number_integer()); // plain indices otherwise
}
