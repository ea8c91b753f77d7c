#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tpc {

using VertexId = int;

// Thrown when a configured search budget runs out. Exhaustion is an error,
// never a verdict.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input exceeds a configured size cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Edges are normalized (u < v), sorted and deduplicated; loops are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    // Position of {u,v} in edges(), or -1 when absent.
    int edge_index(VertexId u, VertexId v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<int> edge_index_;  // n*n lookup, -1 when absent
};

// Generators.
Graph make_path(int n);
Graph make_star(int leaves);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_empty(int n);

// Structure queries.
bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
int max_degree(const Graph& g);
// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

// BFS layers V_0, V_1, ..., V_ecc from a source, defined on connected graphs.
// V_0 = {source}; layer index equals BFS distance.
struct BfsLayers {
    VertexId source = 0;
    std::vector<std::vector<VertexId>> layers;
};
BfsLayers bfs_layers(const Graph& g, VertexId source);

enum class TreeStrategy { Bfs, MinMaxDegreeHeuristic };

// Spanning tree plus a rooted parent map (parent[root] = -1).
struct TreeInfo {
    Graph tree;
    VertexId root = 0;
    std::vector<VertexId> parent;
};

TreeInfo spanning_tree(const Graph& g, TreeStrategy strategy = TreeStrategy::Bfs);
// Recompute the parent map of a tree for a chosen root.
TreeInfo root_tree(const Graph& tree, VertexId root);

// Deterministic backtracking search for a Hamiltonian path. Neighbors are
// tried in ascending order, so the result is reproducible. Throws
// BudgetExhausted if the node budget runs out before the search finishes.
std::optional<std::vector<VertexId>> find_hamiltonian_path(const Graph& g,
                                                           long long node_budget = 20'000'000);

// Every connected graph on n vertices, optionally deduplicated up to
// isomorphism (canonical form: minimal adjacency string over all vertex
// permutations). Deterministic ascending order. n above the cap is rejected.
std::vector<Graph> enumerate_connected_graphs(int n, bool dedup_isomorphic = true, int cap = 6);

// Canonical code of a graph (n <= 8): the minimal upper-triangle adjacency
// bitstring over all vertex permutations, bit (0,1) most significant.
std::uint64_t canonical_code(const Graph& g);

}  // namespace tpc
