#pragma once

#include <optional>
#include <vector>

#include "tpc/checker.hpp"
#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"

namespace tpc::detail {

// Colorable slots of a graph for one flavor, in the canonical enumeration
// order: vertices by index, then edges in edges() order.
struct SlotSpace {
    const Graph* g = nullptr;
    PathFlavor flavor = PathFlavor::TotalProper;
    int vertex_slots = 0;
    int edge_slots = 0;

    SlotSpace() = default;
    SlotSpace(const Graph& graph, PathFlavor f);

    int count() const { return vertex_slots + edge_slots; }
    bool slot_is_vertex(int s) const { return s < vertex_slots; }
    // slot -> vertex id or edge index
    int slot_vertex(int s) const { return s; }
    int slot_edge(int s) const { return s - vertex_slots; }

    TotalColoring to_coloring(const std::vector<int>& colors, int k) const;
    std::vector<int> from_coloring(const TotalColoring& c) const;
};

// Precomputed simple paths per non-adjacent pair, with each path reduced to
// the pairwise difference constraints its flavor imposes and a clique lower
// bound on the colors it needs. During the search a path dies as soon as a
// fully-assigned constraint is violated; a branch is pruned when some pair
// has no live path left. At a leaf every live path is a passing path, so
// "all pairs have a live path" is exactly the connectivity verdict.
class PathConstraintIndex {
public:
    PathConstraintIndex(const Graph& g, const SlotSpace& slots,
                        long long max_paths_per_pair = 2'000'000);

    int pair_count() const { return pair_count_; }

    struct Constraint {
        int path;
        int partner_slot;
    };
    const std::vector<Constraint>& constraints_at(int slot) const { return per_slot_[slot]; }
    int path_pair(int path) const { return path_pair_[path]; }
    int path_min_colors(int path) const { return path_min_colors_[path]; }
    int path_total() const { return static_cast<int>(path_pair_.size()); }

private:
    int pair_count_ = 0;
    std::vector<int> path_pair_;
    std::vector<int> path_min_colors_;
    std::vector<std::vector<Constraint>> per_slot_;
};

enum class SearchStatus { Found, Exhausted, BudgetOut };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<int> colors;     // per slot, when found
    long long leaves_tried = 0;  // complete colorings evaluated
    long long nodes = 0;
};

// Exhaustive enumeration of k-colorings with canonical color introduction
// (slot i may use at most 1 + max color used before it); stops at the first
// coloring whose every pair keeps a live path. `prune` disables both the
// death pruning and the min-color path filter (used to cross-check that
// pruning never changes results).
SearchResult search_canonical(const PathConstraintIndex& idx, int slot_count, int k,
                              long long node_budget, bool prune = true);

// Seeded search: iterative deepening on the number of slots that differ from
// the seed, so the first hit is a minimal perturbation.
SearchResult search_seeded(const PathConstraintIndex& idx, const std::vector<int>& seed, int k,
                           long long node_budget);

}  // namespace tpc::detail
