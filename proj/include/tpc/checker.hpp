#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"

namespace tpc {

struct CheckConfig {
    // Search nodes allowed per vertex pair before the check aborts with
    // BudgetExhausted. Exceeding the budget is never turned into a verdict.
    long long node_budget_per_pair = 10'000'000;
};

struct CheckReport {
    bool connected = false;
    // Pairs (u < v) with no path of the requested flavor.
    std::vector<std::pair<int, int>> failures;
    // A witness path per pair when connected; witnesses are minimal-length
    // among the paths the search discovers.
    std::map<std::pair<int, int>, std::vector<VertexId>> witnesses;
    long long nodes_explored = 0;
};

// Path predicate for a given flavor. The input must be a simple path of the
// graph (distinct vertices, consecutive pairs adjacent); anything else is
// rejected with std::invalid_argument. Endpoint vertex colors are free.
bool path_satisfies(const Graph& g, const TotalColoring& c,
                    const std::vector<VertexId>& path, PathFlavor flavor);
bool is_total_proper_path(const Graph& g, const TotalColoring& c,
                          const std::vector<VertexId>& path);

// Deterministic iterative-deepening search for a simple path of the given
// flavor between two distinct vertices. Returns a shortest discovered
// witness, or nullopt when none exists.
std::optional<std::vector<VertexId>> exists_path(const Graph& g, const TotalColoring& c,
                                                 VertexId u, VertexId v,
                                                 PathFlavor flavor = PathFlavor::TotalProper,
                                                 const CheckConfig& cfg = {},
                                                 long long* nodes_out = nullptr);

// All-pairs connectivity check for a flavor. Requires a connected graph.
CheckReport check_connected(const Graph& g, const TotalColoring& c, PathFlavor flavor,
                            const CheckConfig& cfg = {});
CheckReport is_total_proper_connected(const Graph& g, const TotalColoring& c,
                                      const CheckConfig& cfg = {});

// Polynomial negative filter: true when a total proper WALK from u to v
// exists (state space: vertex x entering-edge color x previous-vertex color).
// false guarantees no total proper path; true promises nothing about paths.
bool walk_feasibility(const Graph& g, const TotalColoring& c, VertexId u, VertexId v);

// Every simple u-v path, found by exhaustive DFS in ascending neighbor
// order. Independent of exists_path; serves as its oracle and feeds the
// brute-force search. Throws CapExceeded beyond max_paths.
std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& g, VertexId u, VertexId v,
                                                          long long max_paths = 2'000'000);

}  // namespace tpc
