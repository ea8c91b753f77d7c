#include <doctest.h>

#include <algorithm>
#include <set>

#include "tpc/graph.hpp"

using namespace tpc;

TEST_CASE("generators produce the stated edge counts") {
    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_path(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(make_star(1).edge_count() == 1);  // K_2
    CHECK(make_star(3).edge_count() == 3);
    CHECK(max_degree(make_star(3)) == 3);
    CHECK(make_complete(3).edge_count() == 3);
    CHECK(make_complete_bipartite(2, 2).edge_count() == 4);
    CHECK(canonical_code(make_complete_bipartite(2, 2)) == canonical_code(make_cycle(4)));
    CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("graph construction normalizes and validates") {
    Graph g(3, {{2, 0}, {0, 2}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 1));
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("is_complete") {
    CHECK(is_complete(make_complete(4)));
    CHECK(!is_complete(make_path(3)));
    CHECK(is_complete(make_complete(1)));
}

TEST_CASE("hamiltonian path search") {
    auto p5 = find_hamiltonian_path(make_path(5));
    REQUIRE(p5.has_value());
    CHECK(*p5 == std::vector<int>{0, 1, 2, 3, 4});

    CHECK(!find_hamiltonian_path(make_star(3)).has_value());

    auto c5 = find_hamiltonian_path(make_cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->size() == 5);
    std::set<int> seen(c5->begin(), c5->end());
    CHECK(seen.size() == 5);
    for (size_t i = 0; i + 1 < c5->size(); ++i) CHECK(make_cycle(5).has_edge((*c5)[i], (*c5)[i + 1]));

    // deterministic
    CHECK(*find_hamiltonian_path(make_cycle(5)) == *c5);
}

TEST_CASE("bfs layers") {
    auto l1 = bfs_layers(make_path(3), 0);
    CHECK(l1.layers == std::vector<std::vector<int>>{{0}, {1}, {2}});
    auto l2 = bfs_layers(make_star(3), 0);
    CHECK(l2.layers == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
    auto l3 = bfs_layers(make_path(4), 1);
    CHECK(l3.layers == std::vector<std::vector<int>>{{1}, {0, 2}, {3}});
    CHECK_THROWS_AS(bfs_layers(Graph(2, {}), 0), std::invalid_argument);
}

TEST_CASE("bfs layer structure holds on every small connected graph") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            auto layers = bfs_layers(g, 0);
            int covered = 0;
            for (size_t i = 0; i < layers.layers.size(); ++i) {
                covered += static_cast<int>(layers.layers[i].size());
                if (i == 0) continue;
                for (int v : layers.layers[i]) {
                    bool linked = false;
                    for (int w : g.neighbors(v)) {
                        for (int j = 0; j + 2 <= static_cast<int>(i); ++j)
                            CHECK(std::count(layers.layers[j].begin(), layers.layers[j].end(), w) == 0);
                        if (std::count(layers.layers[i - 1].begin(), layers.layers[i - 1].end(), w))
                            linked = true;
                    }
                    CHECK(linked);
                }
            }
            CHECK(covered == g.vertex_count());
        }
}

TEST_CASE("spanning trees") {
    // a tree is its own spanning tree
    auto t = spanning_tree(make_star(3), TreeStrategy::Bfs);
    CHECK(t.tree == make_star(3));
    CHECK(t.parent[0] == -1);
    CHECK(t.parent[3] == 0);

    // any spanning tree of a cycle is a hamiltonian path
    auto c6 = spanning_tree(make_cycle(6), TreeStrategy::MinMaxDegreeHeuristic);
    CHECK(c6.tree.edge_count() == 5);
    CHECK(max_degree(c6.tree) == 2);

    auto k4 = spanning_tree(make_complete(4), TreeStrategy::MinMaxDegreeHeuristic);
    CHECK(is_tree(k4.tree));
    CHECK(max_degree(k4.tree) <= 3);
    auto k4bfs = spanning_tree(make_complete(4), TreeStrategy::Bfs);
    CHECK(max_degree(k4.tree) <= max_degree(k4bfs.tree));
}

TEST_CASE("spanning tree parent maps form an arborescence") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            for (auto strat : {TreeStrategy::Bfs, TreeStrategy::MinMaxDegreeHeuristic}) {
                auto info = spanning_tree(g, strat);
                CHECK(is_tree(info.tree));
                for (auto [u, v] : info.tree.edges()) CHECK(g.has_edge(u, v));
                for (int v = 0; v < g.vertex_count(); ++v) {
                    int steps = 0, x = v;
                    while (x != info.root && steps <= n) {
                        x = info.parent[x];
                        ++steps;
                    }
                    CHECK(x == info.root);
                }
            }
}

TEST_CASE("connected graph enumeration") {
    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 2);
    CHECK(enumerate_connected_graphs(4).size() == 6);
    CHECK(enumerate_connected_graphs(5).size() == 21);
    CHECK(enumerate_connected_graphs(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected_graphs(7), CapExceeded);

    // labeled count for n=4: known to be 38
    CHECK(enumerate_connected_graphs(4, false).size() == 38);

    // dedup representatives really are pairwise non-isomorphic
    auto reps = enumerate_connected_graphs(5);
    std::set<std::uint64_t> codes;
    for (const auto& g : reps) codes.insert(canonical_code(g));
    CHECK(codes.size() == reps.size());
}
