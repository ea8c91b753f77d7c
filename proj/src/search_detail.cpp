#include "search_detail.hpp"

#include <algorithm>

namespace tpc::detail {

SlotSpace::SlotSpace(const Graph& graph, PathFlavor f) : g(&graph), flavor(f) {
    vertex_slots = f == PathFlavor::EdgeProper ? 0 : graph.vertex_count();
    edge_slots = f == PathFlavor::VertexProper ? 0 : graph.edge_count();
}

TotalColoring SlotSpace::to_coloring(const std::vector<int>& colors, int k) const {
    TotalColoring c(g->vertex_count(), k);
    for (int s = 0; s < count(); ++s) {
        if (slot_is_vertex(s)) {
            c.vertex_color[slot_vertex(s)] = colors[s];
        } else {
            auto [u, v] = g->edges()[slot_edge(s)];
            c.set_edge_color(u, v, colors[s]);
        }
    }
    return c;
}

std::vector<int> SlotSpace::from_coloring(const TotalColoring& c) const {
    std::vector<int> colors(count(), 0);
    for (int s = 0; s < count(); ++s) {
        if (slot_is_vertex(s)) {
            colors[s] = c.vertex_color.at(slot_vertex(s));
        } else {
            auto [u, v] = g->edges()[slot_edge(s)];
            colors[s] = c.edge_color(u, v);
        }
    }
    return colors;
}

namespace {

// Slot holding a graph element, given the flavor's slot layout; -1 when the
// element is not colorable under this flavor.
int vertex_slot(const SlotSpace& sp, int v) {
    return sp.flavor == PathFlavor::EdgeProper ? -1 : v;
}
int edge_slot(const SlotSpace& sp, int e) {
    return sp.flavor == PathFlavor::VertexProper ? -1 : sp.vertex_slots + e;
}

}  // namespace

PathConstraintIndex::PathConstraintIndex(const Graph& g, const SlotSpace& slots,
                                         long long max_paths_per_pair) {
    per_slot_.assign(slots.count(), {});
    int n = g.vertex_count();
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) continue;  // a single edge always works
            int pair_id = pair_count_++;
            for (const auto& path : enumerate_simple_paths(g, u, v, max_paths_per_pair)) {
                int path_id = static_cast<int>(path_pair_.size());
                path_pair_.push_back(pair_id);
                int m = static_cast<int>(path.size()) - 1;
                int min_colors = 1;
                std::vector<std::pair<int, int>> neq;
                auto e = [&](int i) { return edge_slot(slots, g.edge_index(path[i - 1], path[i])); };
                auto vx = [&](int i) { return vertex_slot(slots, path[i]); };
                if (slots.flavor != PathFlavor::VertexProper)
                    for (int i = 1; i < m; ++i) neq.emplace_back(e(i), e(i + 1));
                if (slots.flavor != PathFlavor::EdgeProper)
                    for (int i = 1; i + 1 <= m - 1; ++i) neq.emplace_back(vx(i), vx(i + 1));
                if (slots.flavor == PathFlavor::TotalProper)
                    for (int i = 1; i <= m - 1; ++i) {
                        neq.emplace_back(vx(i), e(i));
                        neq.emplace_back(vx(i), e(i + 1));
                    }
                switch (slots.flavor) {
                    case PathFlavor::TotalProper:
                        min_colors = m >= 2 ? 3 : 1;  // first window is a triangle
                        break;
                    case PathFlavor::EdgeProper:
                        min_colors = m >= 2 ? 2 : 1;
                        break;
                    case PathFlavor::VertexProper:
                        min_colors = m >= 3 ? 2 : 1;
                        break;
                }
                path_min_colors_.push_back(min_colors);
                for (auto [a, b] : neq) {
                    per_slot_[a].push_back({path_id, b});
                    per_slot_[b].push_back({path_id, a});
                }
            }
        }
}

namespace {

struct Engine {
    const PathConstraintIndex& idx;
    int k;
    long long budget;
    bool prune;
    std::vector<int> colors;
    std::vector<char> path_alive;
    std::vector<int> pair_live;
    std::vector<int> undo;  // paths killed, with per-assignment markers
    SearchResult result;

    Engine(const PathConstraintIndex& i, int slot_count, int palette, long long node_budget,
           bool do_prune)
        : idx(i), k(palette), budget(node_budget), prune(do_prune) {
        colors.assign(slot_count, 0);
        path_alive.assign(idx.path_total(), 1);
        pair_live.assign(idx.pair_count(), 0);
        for (int p = 0; p < idx.path_total(); ++p) {
            if (prune && idx.path_min_colors(p) > k) {
                path_alive[p] = 0;
            } else {
                ++pair_live[idx.path_pair(p)];
            }
        }
    }

    // A pair with no path that could ever pass makes the palette infeasible.
    bool feasible_at_root() const {
        if (!prune) return true;
        for (int c : pair_live)
            if (c == 0) return false;
        return true;
    }

    // Kill paths whose constraints the new assignment violates; false when a
    // pair loses its last live path (the branch cannot succeed).
    bool assign(int slot, int c) {
        colors[slot] = c;
        undo.push_back(-1);  // marker
        bool ok = true;
        for (const auto& [p, partner] : idx.constraints_at(slot)) {
            if (!path_alive[p] || colors[partner] != c) continue;
            path_alive[p] = 0;
            undo.push_back(p);
            if (--pair_live[idx.path_pair(p)] == 0) ok = false;
        }
        return ok || !prune;
    }

    void unassign(int slot) {
        colors[slot] = 0;
        while (undo.back() != -1) {
            int p = undo.back();
            undo.pop_back();
            path_alive[p] = 1;
            ++pair_live[idx.path_pair(p)];
        }
        undo.pop_back();
    }

    bool leaf_ok() const {
        // At a leaf every live path is fully colored and violation-free.
        for (int c : pair_live)
            if (c == 0) return false;
        return true;
    }

    bool dfs_canonical(int slot, int max_used) {
        if (slot == static_cast<int>(colors.size())) {
            ++result.leaves_tried;
            return leaf_ok();
        }
        int cmax = std::min(k, max_used + 1);
        for (int c = 1; c <= cmax; ++c) {
            if (++result.nodes > budget) throw BudgetExhausted("coloring search budget");
            bool viable = assign(slot, c);
            if (viable && dfs_canonical(slot + 1, std::max(max_used, c))) return true;
            unassign(slot);
        }
        return false;
    }

    bool dfs_seeded(int slot, const std::vector<int>& seed, int diffs_left) {
        if (slot == static_cast<int>(colors.size())) {
            ++result.leaves_tried;
            return diffs_left == 0 && leaf_ok();
        }
        for (int c0 = 0; c0 <= k; ++c0) {
            int c = c0 == 0 ? seed[slot] : c0;  // seed color first
            if (c < 1 || c > k) continue;
            if (c0 != 0 && c == seed[slot]) continue;
            int cost = c == seed[slot] ? 0 : 1;
            if (cost > diffs_left) continue;
            if (++result.nodes > budget) throw BudgetExhausted("coloring search budget");
            bool viable = assign(slot, c);
            if (viable && dfs_seeded(slot + 1, seed, diffs_left - cost)) return true;
            unassign(slot);
        }
        return false;
    }
};

}  // namespace

SearchResult search_canonical(const PathConstraintIndex& idx, int slot_count, int k,
                              long long node_budget, bool prune) {
    Engine eng(idx, slot_count, k, node_budget, prune);
    try {
        if (eng.feasible_at_root() && eng.dfs_canonical(0, 0)) {
            eng.result.status = SearchStatus::Found;
            eng.result.colors = eng.colors;
        } else {
            eng.result.status = SearchStatus::Exhausted;
        }
    } catch (const BudgetExhausted&) {
        eng.result.status = SearchStatus::BudgetOut;
    }
    return eng.result;
}

SearchResult search_seeded(const PathConstraintIndex& idx, const std::vector<int>& seed, int k,
                           long long node_budget) {
    Engine eng(idx, static_cast<int>(seed.size()), k, node_budget, true);
    if (!eng.feasible_at_root()) return eng.result;
    try {
        for (int d = 0; d <= static_cast<int>(seed.size()); ++d) {
            if (eng.dfs_seeded(0, seed, d)) {
                eng.result.status = SearchStatus::Found;
                eng.result.colors = eng.colors;
                return eng.result;
            }
        }
        eng.result.status = SearchStatus::Exhausted;
    } catch (const BudgetExhausted&) {
        eng.result.status = SearchStatus::BudgetOut;
    }
    return eng.result;
}

}  // namespace tpc::detail
