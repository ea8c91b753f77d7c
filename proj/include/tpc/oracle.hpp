#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"
#include "tpc/ops.hpp"

namespace tpc {

struct OracleConfig {
    // Brute force refuses graphs with more than this many vertices + edges.
    int element_cap = 14;
    long long node_budget = 2'000'000'000;
    // Disables symmetry/death pruning; only for cross-checking tiny cases.
    bool prune = true;
};

// Exact invariant value with a verified witness coloring. Minimality is
// certified by exhausting every smaller palette.
struct TpcResult {
    PathFlavor flavor = PathFlavor::TotalProper;
    int value = 0;
    TotalColoring witness;
    long long colorings_tried = 0;
    std::chrono::duration<double> elapsed{0};
};

TpcResult brute_force(const Graph& g, PathFlavor flavor, const OracleConfig& cfg = {});
TpcResult brute_force_tpc(const Graph& g, const OracleConfig& cfg = {});
TpcResult brute_force_pc(const Graph& g, const OracleConfig& cfg = {});
TpcResult brute_force_pvc(const Graph& g, const OracleConfig& cfg = {});

// tpc(G) >= max{pc(G), pvc(G)}.
bool verify_inequality_star(const Graph& g, const OracleConfig& cfg = {});

// tpc(G) >= b + 1 where b is the maximum number of bridges at one vertex;
// vacuously true when the graph has no bridge or fewer than 3 vertices.
bool verify_bridge_bound(const Graph& g, const OracleConfig& cfg = {});

// tpc(G) <= tpc(H) for a connected spanning subgraph H of G.
bool verify_monotonicity(const Graph& g, const Graph& h_spanning, const OracleConfig& cfg = {});

std::vector<std::pair<int, int>> bridges(const Graph& g);
int max_bridges_at_vertex(const Graph& g);

// Exhaustive hunt for permutation graphs with total proper connection
// number 4 over all connected nontrivial base graphs up to n_max vertices
// (one per isomorphism class) and all permutations. An empty candidate list
// is a valid outcome. A wall-clock budget, when given, may cut the sweep
// short; partial results are flagged via completed = false.
struct HuntResult {
    struct Candidate {
        Graph graph;
        Permutation alpha;
        int tpc_value = 0;
    };
    std::vector<Candidate> candidates;
    long long instances_examined = 0;
    bool completed = true;
};

HuntResult hunt_permutation_tpc4(int n_max, std::optional<double> budget_seconds = {},
                                 const OracleConfig& cfg = {});

}  // namespace tpc
