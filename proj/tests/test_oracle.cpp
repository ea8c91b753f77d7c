#include <doctest.h>

#include "tpc/checker.hpp"
#include "tpc/oracle.hpp"

using namespace tpc;

TEST_CASE("exact total proper connection values") {
    CHECK(brute_force_tpc(make_complete(4)).value == 1);
    CHECK(brute_force_tpc(make_star(3)).value == 4);
    CHECK(brute_force_tpc(make_path(4)).value == 3);
    CHECK(brute_force_tpc(make_complete_bipartite(2, 2)).value == 3);
    CHECK(brute_force_tpc(make_star(2)).value == 3);
    CHECK(brute_force_tpc(make_cycle(6)).value == 3);
}

TEST_CASE("oracle witnesses verify and are minimal") {
    for (const Graph& g : {make_path(4), make_star(3), make_cycle(5), make_complete(4)}) {
        auto res = brute_force_tpc(g);
        auto report = is_total_proper_connected(g, res.witness);
        CHECK(report.connected);
        CHECK(static_cast<int>(colors_used(g, res.witness).size()) == res.value);
        CHECK(res.witness.k == res.value);
    }
}

TEST_CASE("edge and vertex flavors") {
    CHECK(brute_force_pc(make_complete(3)).value == 1);
    CHECK(brute_force_pvc(make_complete(4)).value == 0);
    CHECK(brute_force_pvc(make_path(4)).value > 0);  // noncomplete
    auto pc_p4 = brute_force_pc(make_path(4));
    CHECK(pc_p4.value == 2);  // unique paths force alternation
    auto rep = check_connected(make_path(4), pc_p4.witness, PathFlavor::EdgeProper);
    CHECK(rep.connected);
}

TEST_CASE("star inequality holds on all connected graphs up to 4 vertices") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) CHECK(verify_inequality_star(g));
}

TEST_CASE("bridge bound") {
    CHECK(max_bridges_at_vertex(make_star(3)) == 3);
    CHECK(verify_bridge_bound(make_star(3)));
    CHECK(verify_bridge_bound(make_path(4)));
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(max_bridges_at_vertex(paw) == 1);
    CHECK(verify_bridge_bound(paw));
    CHECK(verify_bridge_bound(make_cycle(4)));  // no bridge: vacuous
}

TEST_CASE("monotonicity under spanning subgraphs") {
    CHECK(verify_monotonicity(make_cycle(4), make_path(4)));
    CHECK(verify_monotonicity(make_complete(4), make_star(3)));
    CHECK(verify_monotonicity(make_path(4), make_path(4)));
    CHECK_THROWS_AS(verify_monotonicity(make_path(4), make_star(3)), std::invalid_argument);
}

TEST_CASE("caps are enforced") {
    OracleConfig small;
    small.element_cap = 5;
    CHECK_THROWS_AS(brute_force_tpc(make_complete(4), small), CapExceeded);
    Graph two(2, {});
    CHECK_THROWS_AS(brute_force_tpc(two), std::invalid_argument);  // disconnected
}

TEST_CASE("pruning does not change results on tiny graphs") {
    OracleConfig pruned, unpruned;
    unpruned.prune = false;
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (g.vertex_count() + g.edge_count() > 8) continue;
            for (auto flavor :
                 {PathFlavor::TotalProper, PathFlavor::EdgeProper, PathFlavor::VertexProper}) {
                auto a = brute_force(g, flavor, pruned);
                auto b = brute_force(g, flavor, unpruned);
                CHECK(a.value == b.value);
            }
        }
}

TEST_CASE("tpc equals one exactly for complete graphs") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            CHECK((brute_force_tpc(g).value == 1) == is_complete(g));
}

TEST_CASE("noncomplete graphs need three total colors and at least one vertex color") {
    for (int n = 3; n <= 4; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (is_complete(g)) continue;
            CHECK(brute_force_tpc(g).value >= 3);
            CHECK(brute_force_pvc(g).value >= 1);
        }
}

TEST_CASE("permutation hunt at tiny scale comes back empty") {
    auto res = hunt_permutation_tpc4(2);
    CHECK(res.completed);
    CHECK(res.candidates.empty());
    CHECK(res.instances_examined == 2);  // K_2 with both permutations
}
