#include "tpc/checker.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace tpc {

namespace {

// Constraints that apply when a walk standing at vertex `w` (entered via an
// edge colored `ce`, previous vertex colored `pc`, 0 = previous vertex is the
// start) extends along an edge colored `cf`, turning `w` into an internal
// vertex: adjacent edges differ (i), `w` differs from both its path edges
// (iii), and adjacent internal vertices differ (ii).
bool transition_ok(PathFlavor flavor, int ce, int pc, int cw, int cf) {
    switch (flavor) {
        case PathFlavor::TotalProper:
            return cf != ce && cw != ce && cw != cf && (pc == 0 || pc != cw);
        case PathFlavor::EdgeProper:
            return cf != ce;
        case PathFlavor::VertexProper:
            return pc == 0 || pc != cw;
    }
    return false;
}

// feas[(w, ce, pc)] = a walk obeying the flavor's transition rule can reach
// the target from this state. Computed by reverse BFS over the state graph.
struct SuffixTable {
    int n = 0, kk = 0;  // kk = k + 1, states use colors 0..k
    std::vector<char> feas;

    size_t idx(int w, int ce, int pc) const {
        return (static_cast<size_t>(w) * kk + ce) * kk + pc;
    }
    bool at(int w, int ce, int pc) const { return feas[idx(w, ce, pc)] != 0; }
};

SuffixTable suffix_table(const Graph& g, const TotalColoring& c, VertexId target,
                         PathFlavor flavor) {
    SuffixTable t;
    t.n = g.vertex_count();
    t.kk = c.k + 1;
    t.feas.assign(static_cast<size_t>(t.n) * t.kk * t.kk, 0);
    std::queue<std::array<int, 3>> q;
    for (int ce = 0; ce <= c.k; ++ce)
        for (int pc = 0; pc <= c.k; ++pc) {
            t.feas[t.idx(target, ce, pc)] = 1;
            q.push({target, ce, pc});
        }
    while (!q.empty()) {
        auto [w2, cf, cw] = q.front();
        q.pop();
        // Predecessor states: stand at a neighbor w colored cw, step to w2.
        for (int w : g.neighbors(w2)) {
            if (c.vertex_color[w] != cw) continue;
            if (c.edge_color(w, w2) != cf) continue;
            for (int ce = 0; ce <= c.k; ++ce)
                for (int pc = 0; pc <= c.k; ++pc) {
                    if (t.feas[t.idx(w, ce, pc)]) continue;
                    if (!transition_ok(flavor, ce, pc, c.vertex_color[w], c.edge_color(w, w2)))
                        continue;
                    t.feas[t.idx(w, ce, pc)] = 1;
                    q.push({w, ce, pc});
                }
        }
    }
    return t;
}

void validate_path(const Graph& g, const std::vector<VertexId>& path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("path vertex out of range");
        if (seen[v]) throw std::invalid_argument("path repeats a vertex");
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("path uses a non-edge");
}

struct PairSearch {
    const Graph& g;
    const TotalColoring& c;
    PathFlavor flavor;
    VertexId target;
    const SuffixTable& feas;
    const std::vector<int>& dist_to_target;
    long long budget;
    long long nodes = 0;
    int limit = 0;
    std::vector<VertexId> path;
    std::vector<char> visited;

    bool dfs(int last, int ce, int pc) {
        if (++nodes > budget) throw BudgetExhausted("path search budget exhausted");
        bool at_start = path.size() == 1;
        int cw = c.vertex_color[last];
        for (int w : g.neighbors(last)) {
            if (visited[w]) continue;
            int cf = c.edge_color(last, w);
            if (!at_start && !transition_ok(flavor, ce, pc, cw, cf)) continue;
            if (w == target) {
                path.push_back(w);
                return true;
            }
            int depth = static_cast<int>(path.size());  // edges used after this step
            if (depth + dist_to_target[w] > limit) continue;
            int next_pc = at_start ? 0 : cw;
            if (!feas.at(w, cf, next_pc)) continue;
            visited[w] = 1;
            path.push_back(w);
            if (dfs(w, cf, next_pc)) return true;
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool path_satisfies(const Graph& g, const TotalColoring& c, const std::vector<VertexId>& path,
                    PathFlavor flavor) {
    validate_path(g, path);
    int m = static_cast<int>(path.size()) - 1;
    auto ec = [&](int i) { return c.edge_color(path[i - 1], path[i]); };  // edge i, 1-based
    if (flavor != PathFlavor::VertexProper)
        for (int i = 1; i < m; ++i)
            if (ec(i) == ec(i + 1)) return false;
    if (flavor != PathFlavor::EdgeProper)
        for (int i = 1; i + 1 <= m - 1; ++i)
            if (c.vertex_color[path[i]] == c.vertex_color[path[i + 1]]) return false;
    if (flavor == PathFlavor::TotalProper)
        for (int i = 1; i <= m - 1; ++i) {
            int cv = c.vertex_color[path[i]];
            if (cv == ec(i) || cv == ec(i + 1)) return false;
        }
    return true;
}

bool is_total_proper_path(const Graph& g, const TotalColoring& c,
                          const std::vector<VertexId>& path) {
    return path_satisfies(g, c, path, PathFlavor::TotalProper);
}

std::optional<std::vector<VertexId>> exists_path(const Graph& g, const TotalColoring& c,
                                                 VertexId u, VertexId v, PathFlavor flavor,
                                                 const CheckConfig& cfg, long long* nodes_out) {
    if (u == v) throw std::invalid_argument("exists_path needs two distinct vertices");
    validate_coloring(g, c, flavor);
    if (g.has_edge(u, v)) return std::vector<VertexId>{u, v};  // single edge, no constraints

    auto dist = bfs_distances(g, v);
    if (dist.at(u) < 0) return std::nullopt;
    auto feas = suffix_table(g, c, v, flavor);
    bool reachable = false;
    for (int w : g.neighbors(u))
        if (feas.at(w, c.edge_color(u, w), 0)) reachable = true;
    if (!reachable) return std::nullopt;

    PairSearch search{g, c, flavor, v, feas, dist, cfg.node_budget_per_pair, 0, 0, {}, {}};
    search.visited.assign(g.vertex_count(), 0);
    for (int limit = dist[u]; limit <= g.vertex_count() - 1; ++limit) {
        search.limit = limit;
        search.path = {u};
        std::fill(search.visited.begin(), search.visited.end(), 0);
        search.visited[u] = 1;
        if (search.dfs(u, 0, 0)) {
            if (nodes_out) *nodes_out += search.nodes;
            return search.path;
        }
    }
    if (nodes_out) *nodes_out += search.nodes;
    return std::nullopt;
}

CheckReport check_connected(const Graph& g, const TotalColoring& c, PathFlavor flavor,
                            const CheckConfig& cfg) {
    if (!is_connected(g)) throw std::invalid_argument("check requires a connected graph");
    validate_coloring(g, c, flavor);
    CheckReport report;
    for (int v = 1; v < g.vertex_count(); ++v)
        for (int u = 0; u < v; ++u) {
            auto witness = exists_path(g, c, u, v, flavor, cfg, &report.nodes_explored);
            if (witness)
                report.witnesses[{u, v}] = std::move(*witness);
            else
                report.failures.emplace_back(u, v);
        }
    report.connected = report.failures.empty();
    return report;
}

CheckReport is_total_proper_connected(const Graph& g, const TotalColoring& c,
                                      const CheckConfig& cfg) {
    return check_connected(g, c, PathFlavor::TotalProper, cfg);
}

bool walk_feasibility(const Graph& g, const TotalColoring& c, VertexId u, VertexId v) {
    if (u == v) return true;  // the empty walk
    if (g.has_edge(u, v)) return true;
    auto feas = suffix_table(g, c, v, PathFlavor::TotalProper);
    for (int w : g.neighbors(u))
        if (feas.at(w, c.edge_color(u, w), 0)) return true;
    return false;
}

namespace {

void all_paths_dfs(const Graph& g, VertexId target, std::vector<VertexId>& path,
                   std::vector<char>& visited, std::vector<std::vector<VertexId>>& out,
                   long long max_paths) {
    int last = path.back();
    if (last == target) {
        if (static_cast<long long>(out.size()) >= max_paths)
            throw CapExceeded("too many simple paths");
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(last)) {
        if (visited[w]) continue;
        visited[w] = 1;
        path.push_back(w);
        all_paths_dfs(g, target, path, visited, out, max_paths);
        path.pop_back();
        visited[w] = 0;
    }
}

}  // namespace

std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& g, VertexId u, VertexId v,
                                                          long long max_paths) {
    if (u == v) throw std::invalid_argument("enumerate_simple_paths needs distinct vertices");
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path{u};
    std::vector<char> visited(g.vertex_count(), 0);
    visited[u] = 1;
    all_paths_dfs(g, v, path, visited, out, max_paths);
    return out;
}

}  // namespace tpc
