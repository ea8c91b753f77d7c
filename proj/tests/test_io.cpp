#include <doctest.h>

#include <sstream>

#include "tpc/colorers.hpp"
#include "tpc/io.hpp"

using namespace tpc;
using nlohmann::json;

TEST_CASE("graph JSON round trip with normalized edges") {
    Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
    auto j = graph_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["edges"] == json::parse("[[0,2],[1,2],[1,3]]"));
    CHECK(graph_from_json(j) == g);
}

TEST_CASE("coloring JSON round trip") {
    auto g = make_path(3);
    TotalColoring c(3, 3);
    c.vertex_color = {1, 3, 2};
    c.set_edge_color(0, 1, 2);
    c.set_edge_color(1, 2, 1);
    auto j = coloring_json(g, c);
    CHECK(j["k"] == 3);
    CHECK(j["edge_colors"]["0-1"] == 2);
    auto back = coloring_from_json(j);
    CHECK(back == c);
}

TEST_CASE("product JSON keeps factors, permutation and edge kinds") {
    auto p = permutation_graph(make_star(3), Permutation({1, 0, 2, 3}));
    auto j = product_json(p);
    auto back = product_from_json(j);
    CHECK(back.graph == p.graph);
    CHECK(back.left == p.left);
    CHECK(back.alpha == p.alpha);
    CHECK(back.edge_kinds == p.edge_kinds);
    CHECK(j["map"]["forward"].size() == 8);

    auto s = strong(make_path(3), make_path(2));
    auto sj = product_json(s);
    CHECK(product_from_json(sj).edge_kinds == s.edge_kinds);
}

TEST_CASE("dot export carries palette colors") {
    auto g = make_path(3);
    auto out = color_traceable(g);
    std::ostringstream os;
    write_dot(os, g, &out.coloring);
    auto text = os.str();
    CHECK(text.find("graph g {") == 0);
    CHECK(text.find("0 -- 1") != std::string::npos);
    CHECK(text.find("[color=") != std::string::npos);

    std::ostringstream plain;
    write_dot(plain, g);
    CHECK(plain.str().find("color=") == std::string::npos);
}

TEST_CASE("tpc result JSON omits timing") {
    auto g = make_path(3);
    TpcResult r;
    r.value = 3;
    r.witness = color_traceable(g).coloring;
    r.colorings_tried = 7;
    auto j = tpc_result_json(g, r);
    CHECK(!j.contains("elapsed"));
    CHECK(j["value"] == 3);
    CHECK(j["flavor"] == "total");
}
