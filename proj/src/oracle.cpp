#include "tpc/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "search_detail.hpp"

namespace tpc {

TpcResult brute_force(const Graph& g, PathFlavor flavor, const OracleConfig& cfg) {
    if (!is_connected(g)) throw std::invalid_argument("brute force requires a connected graph");
    if (g.vertex_count() + g.edge_count() > cfg.element_cap)
        throw CapExceeded("graph exceeds the oracle element cap");
    auto start = std::chrono::steady_clock::now();

    TpcResult out;
    out.flavor = flavor;
    if (flavor == PathFlavor::VertexProper && is_complete(g)) {
        // Defined to be zero for complete graphs; no search happens.
        out.value = 0;
        out.witness = TotalColoring(g.vertex_count(), 0);
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }

    detail::SlotSpace slots(g, flavor);
    detail::PathConstraintIndex index(g, slots);
    for (int k = 1; k <= std::max(1, slots.count()); ++k) {
        auto res = detail::search_canonical(index, slots.count(), k, cfg.node_budget, cfg.prune);
        out.colorings_tried += res.leaves_tried;
        if (res.status == detail::SearchStatus::BudgetOut)
            throw BudgetExhausted("oracle node budget exhausted");
        if (res.status == detail::SearchStatus::Found) {
            out.value = k;
            out.witness = slots.to_coloring(res.colors, k);
            out.elapsed = std::chrono::steady_clock::now() - start;
            return out;
        }
    }
    // Unreachable: coloring every element with its own color always passes.
    throw std::logic_error("palette sweep found no coloring");
}

TpcResult brute_force_tpc(const Graph& g, const OracleConfig& cfg) {
    return brute_force(g, PathFlavor::TotalProper, cfg);
}
TpcResult brute_force_pc(const Graph& g, const OracleConfig& cfg) {
    return brute_force(g, PathFlavor::EdgeProper, cfg);
}
TpcResult brute_force_pvc(const Graph& g, const OracleConfig& cfg) {
    return brute_force(g, PathFlavor::VertexProper, cfg);
}

bool verify_inequality_star(const Graph& g, const OracleConfig& cfg) {
    int tpc = brute_force_tpc(g, cfg).value;
    int pc = brute_force_pc(g, cfg).value;
    int pvc = brute_force_pvc(g, cfg).value;
    return tpc >= std::max(pc, pvc);
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        auto edges = g.edges();
        std::erase(edges, std::pair<int, int>(u, v));
        if (!is_connected(Graph(g.vertex_count(), std::move(edges)))) out.emplace_back(u, v);
    }
    return out;
}

int max_bridges_at_vertex(const Graph& g) {
    std::vector<int> count(g.vertex_count(), 0);
    for (auto [u, v] : bridges(g)) {
        ++count[u];
        ++count[v];
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

bool verify_bridge_bound(const Graph& g, const OracleConfig& cfg) {
    if (!is_connected(g)) throw std::invalid_argument("bridge bound requires a connected graph");
    if (g.vertex_count() < 3) return true;  // vacuous below order 3
    int b = max_bridges_at_vertex(g);
    if (b == 0) return true;  // vacuous without a bridge
    return brute_force_tpc(g, cfg).value >= b + 1;
}

bool verify_monotonicity(const Graph& g, const Graph& h_spanning, const OracleConfig& cfg) {
    if (h_spanning.vertex_count() != g.vertex_count())
        throw std::invalid_argument("subgraph must span all vertices");
    for (auto [u, v] : h_spanning.edges())
        if (!g.has_edge(u, v)) throw std::invalid_argument("not a subgraph");
    if (!is_connected(h_spanning))
        throw std::invalid_argument("spanning subgraph must be connected");
    return brute_force_tpc(g, cfg).value <= brute_force_tpc(h_spanning, cfg).value;
}

HuntResult hunt_permutation_tpc4(int n_max, std::optional<double> budget_seconds,
                                 const OracleConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    HuntResult out;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& g : enumerate_connected_graphs(n, true, std::max(n_max, 6))) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            do {
                if (budget_seconds) {
                    std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
                    if (used.count() > *budget_seconds) {
                        out.completed = false;
                        return out;
                    }
                }
                Permutation alpha{std::vector<int>(img)};
                auto product = permutation_graph(g, alpha);
                auto res = brute_force_tpc(product.graph, cfg);
                ++out.instances_examined;
                if (res.value == 4) out.candidates.push_back({g, alpha, res.value});
            } while (std::next_permutation(img.begin(), img.end()));
        }
    }
    return out;
}

}  // namespace tpc
