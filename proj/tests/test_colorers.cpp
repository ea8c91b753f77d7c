#include <doctest.h>

#include <numeric>

#include "tpc/checker.hpp"
#include "tpc/colorers.hpp"
#include "tpc/oracle.hpp"

using namespace tpc;

namespace {

Graph spider5() {
    // x=0 adjacent to y=1 and two extra leaves; z=4 hangs off y
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("traceable colorer") {
    auto k4 = color_traceable(make_complete(4));
    CHECK(k4.coloring.k == 1);

    auto p4 = color_traceable(make_path(4));
    CHECK(p4.coloring.k == 3);
    CHECK(colors_used(make_path(4), p4.coloring).size() == 3);

    auto c6 = color_traceable(make_cycle(6));
    CHECK(c6.coloring.k == 3);
    CHECK(brute_force_tpc(make_cycle(6)).value == 3);

    CHECK_THROWS_AS(color_traceable(make_star(3)), std::invalid_argument);
}

TEST_CASE("join apex colorer reproduces the layer scheme on a path") {
    // g = P_3 rooted at 0: layers {0},{1},{2}
    auto out = color_join_with_k1(make_path(3));
    const auto& c = out.coloring;
    CHECK(out.coloring.k == 3);
    CHECK(!out.repaired);
    int apex = 3;
    CHECK(c.vertex_color[0] == 1);
    CHECK(c.vertex_color[1] == 2);
    CHECK(c.vertex_color[2] == 1);
    CHECK(c.vertex_color[apex] == 3);
    CHECK(c.edge_color(apex, 1) == 1);
    CHECK(c.edge_color(apex, 0) == 2);
    CHECK(c.edge_color(apex, 2) == 2);
    CHECK(c.edge_color(0, 1) == 3);
    CHECK(c.edge_color(1, 2) == 3);
}

TEST_CASE("join apex colorer verifies on assorted graphs") {
    for (const Graph& g : {make_star(3), make_cycle(5), paw()}) {
        auto out = color_join_with_k1(g);
        CHECK(out.coloring.k == 3);
    }
    CHECK_THROWS_AS(color_join_with_k1(make_complete(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_join_with_k1(make_path(2)), std::invalid_argument);
}

TEST_CASE("general join colorer") {
    auto complete = color_join_general(make_path(2), make_path(2));  // K_4
    CHECK(complete.coloring.k == 1);

    auto delegated = color_join_general(make_path(3), make_complete(1));
    CHECK(delegated.construction == "join-apex");

    auto mirrored = color_join_general(make_complete(1), make_path(3));
    CHECK(mirrored.coloring.k == 3);

    auto both = color_join_general(make_path(3), make_path(2));
    CHECK(both.coloring.k == 3);
    auto product = join(make_path(3), make_path(2));
    CHECK(brute_force_tpc(product.graph, OracleConfig{.element_cap = 40}).value == 3);
}

TEST_CASE("complete bipartite colorer") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 4}}) {
        auto out = color_complete_bipartite(m, n);
        CHECK(out.coloring.k == 3);
        CHECK(colors_used(make_complete_bipartite(m, n), out.coloring).size() == 3);
    }
    CHECK_THROWS_AS(color_complete_bipartite(1, 5), std::invalid_argument);
}

TEST_CASE("cartesian traceable colorer") {
    auto c4 = color_cartesian_traceable(make_path(2), make_path(2));
    CHECK(c4.coloring.k == 3);
    CHECK(brute_force_tpc(cartesian(make_path(2), make_path(2)).graph).value == 3);

    auto p33 = color_cartesian_traceable(make_path(3), make_path(3));
    CHECK(p33.coloring.k == 3);

    auto mixed = color_cartesian_traceable(make_cycle(4), make_path(2));
    CHECK(mixed.coloring.k == 3);

    CHECK_THROWS_AS(color_cartesian_traceable(make_star(3), make_path(2)),
                    std::invalid_argument);
}

TEST_CASE("cartesian star colorer matches the worked two-layer table") {
    auto product = cartesian(make_path(2), make_star(3));
    auto out = color_cartesian_star(make_path(2), make_star(3));
    CHECK(!out.repaired);
    const auto& c = out.coloring;
    auto at = [&](int i, int j) { return product.map.flat(i - 1, j); };  // star center is 0
    // vertices
    CHECK(c.vertex_color[at(1, 0)] == 1);
    CHECK(c.vertex_color[at(1, 1)] == 3);
    CHECK(c.vertex_color[at(1, 2)] == 2);
    CHECK(c.vertex_color[at(1, 3)] == 2);
    CHECK(c.vertex_color[at(2, 0)] == 1);
    CHECK(c.vertex_color[at(2, 1)] == 2);
    CHECK(c.vertex_color[at(2, 2)] == 3);
    CHECK(c.vertex_color[at(2, 3)] == 3);
    // rungs
    CHECK(c.edge_color(at(1, 0), at(2, 0)) == 2);
    for (int j = 1; j <= 3; ++j) CHECK(c.edge_color(at(1, j), at(2, j)) == 1);
    // spokes
    CHECK(c.edge_color(at(1, 0), at(1, 1)) == 2);
    CHECK(c.edge_color(at(1, 0), at(1, 2)) == 3);
    CHECK(c.edge_color(at(1, 0), at(1, 3)) == 3);
    CHECK(c.edge_color(at(2, 0), at(2, 1)) == 3);
    CHECK(c.edge_color(at(2, 0), at(2, 2)) == 2);
    CHECK(c.edge_color(at(2, 0), at(2, 3)) == 2);
}

TEST_CASE("cartesian star colorer sweeps and delegations") {
    auto bigger = color_cartesian_star(make_path(3), make_star(4));
    CHECK(bigger.coloring.k == 3);
    CHECK(!bigger.repaired);

    // star plus one extra leaf-leaf edge still has a dominating vertex
    Graph near_star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto spanning = color_cartesian_star(make_path(4), near_star);
    CHECK(spanning.coloring.k == 3);

    auto small = color_cartesian_star(make_path(2), make_path(3));  // delegates
    CHECK(small.coloring.k == 3);
}

TEST_CASE("cartesian near-star colorer covers the explicit and modular cases") {
    auto h = spider5();
    REQUIRE(max_degree(h) == h.vertex_count() - 2);
    for (int n = 2; n <= 7; ++n) {
        auto out = color_cartesian_near_star(make_path(n), h);
        CHECK(out.coloring.k == 3);
    }
    // explicit two-layer colors: x=0, y=1
    auto product = cartesian(make_path(2), h);
    auto out2 = color_cartesian_near_star(make_path(2), h);
    auto at = [&](int i, int hv) { return product.map.flat(i - 1, hv); };
    CHECK(out2.coloring.vertex_color[at(1, 0)] == 3);   // x
    CHECK(out2.coloring.vertex_color[at(1, 1)] == 1);   // y
    CHECK(out2.coloring.edge_color(at(1, 0), at(1, 1)) == 2);

    auto delegated = color_cartesian_near_star(make_path(3), make_path(4));
    CHECK(delegated.coloring.k == 3);
    CHECK_THROWS_AS(color_cartesian_near_star(make_path(3), make_star(3)),
                    std::invalid_argument);
}

TEST_CASE("permutation traceable colorer") {
    // identity: the permutation graph is traceable
    auto idp = color_permutation_traceable(make_path(3), Permutation::identity(3));
    CHECK(idp.coloring.k == 3);

    // reversal on P_4
    auto rev = color_permutation_traceable(make_path(4), Permutation({3, 2, 1, 0}));
    CHECK(rev.coloring.k == 3);

    // every permutation of P_3 and P_4
    for (int n : {3, 4}) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        do {
            auto out = color_permutation_traceable(make_path(n), Permutation(img));
            CHECK(out.coloring.k == 3);
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

TEST_CASE("permutation star colorer classes at m=3") {
    auto out = color_permutation_star(3, StarPermutationVariant::Transposition01);
    CHECK(!out.repaired);
    auto product = permutation_graph(make_star(3), Permutation({1, 0, 2, 3}));
    auto v = [&](int i) { return product.map.flat(0, i); };
    auto vp = [&](int i) { return product.map.flat(1, i); };
    const auto& c = out.coloring;
    CHECK(c.vertex_color[v(0)] == 1);
    CHECK(c.vertex_color[vp(0)] == 1);
    CHECK(c.edge_color(v(2), vp(2)) == 1);
    CHECK(c.edge_color(v(3), vp(3)) == 1);
    CHECK(c.vertex_color[vp(2)] == 2);
    CHECK(c.vertex_color[v(1)] == 2);
    CHECK(c.vertex_color[v(3)] == 2);
    CHECK(c.edge_color(v(0), vp(1)) == 2);
    CHECK(c.edge_color(v(0), v(2)) == 2);
    CHECK(c.edge_color(vp(0), vp(1)) == 2);
    CHECK(c.edge_color(vp(0), vp(3)) == 2);
    // a few class-3 leftovers
    CHECK(c.vertex_color[v(2)] == 3);
    CHECK(c.vertex_color[vp(1)] == 3);
    CHECK(c.edge_color(v(0), v(1)) == 3);
    CHECK(c.edge_color(vp(0), vp(2)) == 3);
    CHECK(c.edge_color(v(1), vp(0)) == 3);
}

TEST_CASE("permutation star colorer both variants across sizes") {
    for (int m : {3, 4, 5})
        for (auto variant :
             {StarPermutationVariant::Identity, StarPermutationVariant::Transposition01}) {
            auto out = color_permutation_star(m, variant);
            CHECK(out.coloring.k == 3);
            CHECK(!out.repaired);
        }
    CHECK_THROWS_AS(color_permutation_star(2, StarPermutationVariant::Identity),
                    std::invalid_argument);
}

TEST_CASE("lexicographic colorer") {
    auto bip = color_lexicographic(make_path(2), make_empty(2));  // K_{2,2}
    CHECK(bip.construction == "lexicographic-bipartite");
    CHECK(bip.coloring.k == 3);

    auto p3k2 = color_lexicographic(make_path(3), make_complete(2));
    CHECK(p3k2.coloring.k == 3);
    OracleConfig cfg{.element_cap = 40};
    CHECK(brute_force_tpc(lexicographic(make_path(3), make_complete(2)).graph, cfg).value == 3);

    auto star_empty = color_lexicographic(make_star(2), make_empty(3));
    CHECK(star_empty.coloring.k == 3);

    CHECK_THROWS_AS(color_lexicographic(make_complete(2), make_complete(2)),
                    std::invalid_argument);  // complete product
}

TEST_CASE("strong colorer") {
    auto complete = color_strong(make_path(2), make_path(2));  // K_4
    CHECK(complete.coloring.k == 1);

    auto p3k2 = color_strong(make_path(3), make_path(2));
    CHECK(p3k2.coloring.k == 3);
    OracleConfig cfg{.element_cap = 40};
    CHECK(brute_force_tpc(strong(make_path(3), make_path(2)).graph, cfg).value == 3);

    auto star_path = color_strong(make_star(3), make_path(3));
    CHECK(star_path.coloring.k == 3);
}

TEST_CASE("tree colorer uses maxdegree plus one colors") {
    auto p4 = color_tree(make_path(4));
    CHECK(p4.coloring.k == 3);
    auto star = color_tree(make_star(3));
    CHECK(star.coloring.k == 4);
    Graph spider(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    auto sp = color_tree(spider);
    CHECK(sp.coloring.k == 4);
    CHECK_THROWS_AS(color_tree(make_cycle(4)), std::invalid_argument);
}

TEST_CASE("search coloring") {
    auto k3 = search_coloring(make_complete(3), 1);
    REQUIRE(k3.has_value());
    CHECK(is_total_proper_connected(make_complete(3), *k3).connected);

    CHECK(!search_coloring(make_path(3), 2).has_value());  // noncomplete needs 3

    auto c5 = search_coloring(make_cycle(5), 3);
    REQUIRE(c5.has_value());
    CHECK(is_total_proper_connected(make_cycle(5), *c5).connected);

    // determinism
    CHECK(*search_coloring(make_cycle(5), 3) == *c5);

    // seeded repair: corrupt one element of a valid coloring
    auto seedc = *c5;
    seedc.set_edge_color(0, 1, seedc.edge_color(1, 2));
    auto fixed = search_coloring(make_cycle(5), 3, seedc);
    REQUIRE(fixed.has_value());
    CHECK(is_total_proper_connected(make_cycle(5), *fixed).connected);
}

TEST_CASE("colorings restricted to their spanning scaffold already verify") {
    // join apex scheme restricted to T v K_1
    auto g = paw();
    auto out = color_join_with_k1(g);
    auto tree = spanning_tree(g, TreeStrategy::Bfs);
    std::vector<std::pair<int, int>> edges = tree.tree.edges();
    int apex = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, apex);
    Graph scaffold(g.vertex_count() + 1, std::move(edges));
    TotalColoring restricted(scaffold.vertex_count(), 3);
    restricted.vertex_color = out.coloring.vertex_color;
    for (auto [u, v] : scaffold.edges()) restricted.set_edge_color(u, v, out.coloring.edge_color(u, v));
    CHECK(is_total_proper_connected(scaffold, restricted).connected);

    // cartesian star scheme restricted to P_n x K_{1,s}
    Graph near_star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto out2 = color_cartesian_star(make_path(3), near_star);
    auto grid = cartesian(make_path(3), make_star(3));
    TotalColoring r2(grid.graph.vertex_count(), 3);
    auto full = cartesian(make_path(3), near_star);
    // same flat layout: vertex (i, h) with the star spanning near_star
    r2.vertex_color = out2.coloring.vertex_color;
    for (auto [u, v] : grid.graph.edges()) r2.set_edge_color(u, v, out2.coloring.edge_color(u, v));
    CHECK(grid.graph.vertex_count() == full.graph.vertex_count());
    CHECK(is_total_proper_connected(grid.graph, r2).connected);
}

TEST_CASE("color renaming keeps every colorer verdict") {
    auto out = color_cartesian_star(make_path(2), make_star(3));
    auto product = cartesian(make_path(2), make_star(3));
    std::vector<int> sigma{0, 3, 1, 2};
    TotalColoring renamed(out.coloring.n(), 3);
    for (int v = 0; v < renamed.n(); ++v)
        renamed.vertex_color[v] = sigma[out.coloring.vertex_color[v]];
    for (auto [u, v] : product.graph.edges())
        renamed.set_edge_color(u, v, sigma[out.coloring.edge_color(u, v)]);
    CHECK(is_total_proper_connected(product.graph, renamed).connected);
}
