#include "tpc/colorers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "search_detail.hpp"

namespace tpc {

namespace {

// color at position p of the 1,2,3 cycle (p may be negative)
int cyc123(long long p) {
    return static_cast<int>(((p % 3) + 3) % 3) + 1;
}

// edge pattern of the period-three trails: 1,3,2 repeating
int edge_cycle(long long p) {
    static const int kCycle[3] = {1, 3, 2};
    return kCycle[((p % 3) + 3) % 3];
}

int third_color(int a, int b) {
    for (int c = 1; c <= 3; ++c)
        if (c != a && c != b) return c;
    return 1;
}

void fill_remaining(const Graph& g, TotalColoring& c) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.vertex_color[v] == 0) c.vertex_color[v] = 1;
    for (auto [u, v] : g.edges())
        if (c.edge_color(u, v) == 0) c.set_edge_color(u, v, 1);
}

// smallest color in 1..3 different from both endpoint vertex colors
void color_edge_avoiding_endpoints(TotalColoring& c, int u, int v) {
    for (int col = 1; col <= 3; ++col)
        if (col != c.vertex_color[u] && col != c.vertex_color[v]) {
            c.set_edge_color(u, v, col);
            return;
        }
}

// Assign the cyclic 1,2,3 pattern along a simple path: vertex j gets
// cyc123(2j), edge j gets cyc123(2j-1). The path itself and all of its
// subpaths come out total proper.
void color_path_cyclic(TotalColoring& c, const std::vector<VertexId>& path) {
    for (size_t j = 0; j < path.size(); ++j) c.vertex_color[path[j]] = cyc123(2 * j);
    for (size_t j = 1; j < path.size(); ++j)
        c.set_edge_color(path[j - 1], path[j], cyc123(2 * j - 1));
}

TotalColoring all_one_coloring(const Graph& g) {
    TotalColoring c(g.vertex_count(), 1);
    fill_remaining(g, c);
    return c;
}

// Transfer a coloring through a vertex bijection into a host graph that
// contains the image of every source edge.
TotalColoring transfer_coloring(const Graph& src_g, const TotalColoring& src, const Graph& dst_g,
                                const std::vector<int>& to_dst, int k) {
    TotalColoring out(dst_g.vertex_count(), k);
    for (int v = 0; v < src_g.vertex_count(); ++v)
        out.vertex_color[to_dst[v]] = src.vertex_color[v];
    for (auto [u, v] : src_g.edges()) out.set_edge_color(to_dst[u], to_dst[v], src.edge_color(u, v));
    return out;
}

// ---------------------------------------------------------------------------
// Trail machinery. A trail is a vertex sequence with distinct consecutive
// edges; vertices may repeat. The theorem constructions pin trails to the
// period-three edge pattern 1,3,2 (up to a cyclic shift), which forces each
// interior vertex to the third color its two trail edges leave free.

struct TrailFit {
    bool ok = false;
    int shift = 0;
};

// Try to stamp the shifted pattern onto the trail without contradicting
// already-assigned colors; commit on the first shift that fits.
TrailFit try_trail_pattern(TotalColoring& c, const std::vector<VertexId>& trail) {
    int m = static_cast<int>(trail.size()) - 1;
    for (int shift = 0; shift < 3; ++shift) {
        bool ok = true;
        std::vector<int> edge_colors(m), vertex_colors(trail.size(), 0);
        for (int j = 0; j < m && ok; ++j) {
            edge_colors[j] = edge_cycle(j + shift);
            int existing = c.edge_color(trail[j], trail[j + 1]);
            if (existing != 0 && existing != edge_colors[j]) ok = false;
        }
        for (int j = 1; j < m && ok; ++j) {
            vertex_colors[j] = third_color(edge_colors[j - 1], edge_colors[j]);
            int existing = c.vertex_color[trail[j]];
            if (existing != 0 && existing != vertex_colors[j]) ok = false;
            // A vertex revisited by the trail must get one consistent color.
            for (int j2 = 1; j2 < j; ++j2)
                if (trail[j2] == trail[j] && vertex_colors[j2] != vertex_colors[j]) ok = false;
        }
        if (!ok) continue;
        for (int j = 0; j < m; ++j) c.set_edge_color(trail[j], trail[j + 1], edge_colors[j]);
        for (int j = 1; j < m; ++j) c.vertex_color[trail[j]] = vertex_colors[j];
        return {true, shift};
    }
    return {false, 0};
}

// Difference constraints a trail imposes: adjacent edges differ, each
// interior vertex differs from its two trail edges, and adjacent interior
// vertices differ. Element ids: vertex v -> v, edge e -> n + edge index.
class WindowCsp {
public:
    explicit WindowCsp(const Graph& g)
        : g_(&g), parent_(g.vertex_count() + g.edge_count()) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int vertex_elem(int v) const { return v; }
    int edge_elem(int u, int v) const { return g_->vertex_count() + g_->edge_index(u, v); }

    void add_trail(const std::vector<VertexId>& trail) {
        int m = static_cast<int>(trail.size()) - 1;
        auto e = [&](int j) { return edge_elem(trail[j - 1], trail[j]); };  // edge j, 1-based
        for (int j = 1; j < m; ++j) add_neq(e(j), e(j + 1));
        for (int j = 1; j < m; ++j) {
            add_neq(vertex_elem(trail[j]), e(j));
            add_neq(vertex_elem(trail[j]), e(j + 1));
        }
        for (int j = 1; j + 1 < m; ++j) add_neq(vertex_elem(trail[j]), vertex_elem(trail[j + 1]));
    }

    void add_neq(int a, int b) { neq_.emplace_back(a, b); }
    void add_eq(int a, int b) { eq_.emplace_back(a, b); }

    // Solve with three colors from scratch (ignoring whatever is in `c`) and
    // write the solution into `c` for every element the constraints touch.
    bool solve(TotalColoring& c, long long node_cap = 2'000'000) {
        for (auto [a, b] : eq_)
            if (!unite(a, b)) return false;
        std::vector<int> vars;
        std::vector<std::vector<int>> adj(parent_.size());
        for (auto [a, b] : neq_) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return false;
            adj[ra].push_back(rb);
            adj[rb].push_back(ra);
            for (int r : {ra, rb})
                if (std::find(vars.begin(), vars.end(), r) == vars.end()) vars.push_back(r);
        }
        std::vector<int> assign(parent_.size(), 0);
        long long nodes = 0;
        if (!dfs(0, vars, adj, assign, nodes, node_cap)) return false;
        for (int elem = 0; elem < static_cast<int>(parent_.size()); ++elem) {
            int val = assign[find(elem)];
            if (val == 0) continue;
            if (elem < g_->vertex_count()) {
                c.vertex_color[elem] = val;
            } else {
                auto [u, v] = g_->edges()[elem - g_->vertex_count()];
                c.set_edge_color(u, v, val);
            }
        }
        return true;
    }

private:
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }
    bool dfs(size_t idx, const std::vector<int>& vars, const std::vector<std::vector<int>>& adj,
             std::vector<int>& assign, long long& nodes, long long cap) {
        if (idx == vars.size()) return true;
        int var = vars[idx];
        for (int col = 1; col <= 3; ++col) {
            if (++nodes > cap) return false;
            bool ok = true;
            for (int other : adj[var])
                if (assign[other] == col) ok = false;
            if (!ok) continue;
            assign[var] = col;
            if (dfs(idx + 1, vars, adj, assign, nodes, cap)) return true;
            assign[var] = 0;
        }
        return false;
    }

    const Graph* g_;
    std::vector<int> parent_;
    std::vector<std::pair<int, int>> neq_;
    std::vector<std::pair<int, int>> eq_;
};

// Verify-then-repair funnel every colorer returns through.
ColorerOutcome finish(const Graph& g, TotalColoring c, const std::string& name) {
    fill_remaining(g, c);
    try {
        return ColorerOutcome(g, c, name, false);
    } catch (const ColoringRejected&) {
        auto fixed = search_coloring(g, c.k, c);
        if (!fixed) throw;
        return ColorerOutcome(g, std::move(*fixed), name, true);
    }
}

std::vector<VertexId> require_hamiltonian_path(const Graph& g, const char* who) {
    auto path = find_hamiltonian_path(g);
    if (!path) throw std::invalid_argument(std::string(who) + " requires a traceable graph");
    return *path;
}

}  // namespace

ColorerOutcome::ColorerOutcome(const Graph& g, TotalColoring c, std::string name,
                               bool repaired_flag, const CheckConfig& cfg)
    : coloring(std::move(c)), construction(std::move(name)), repaired(repaired_flag) {
    auto report = check_connected(g, coloring, PathFlavor::TotalProper, cfg);
    if (!report.connected)
        throw ColoringRejected(construction + ": coloring fails on " +
                               std::to_string(report.failures.size()) + " pair(s)");
}

ColorerOutcome color_traceable(const Graph& g) {
    if (is_complete(g)) return ColorerOutcome(g, all_one_coloring(g), "traceable", false);
    auto path = require_hamiltonian_path(g, "color_traceable");
    TotalColoring c(g.vertex_count(), 3);
    color_path_cyclic(c, path);
    return finish(g, std::move(c), "traceable");
}

ColorerOutcome color_join_with_k1(const Graph& g) {
    if (!is_connected(g) || g.vertex_count() < 3 || is_complete(g))
        throw std::invalid_argument(
            "color_join_with_k1 needs a connected noncomplete graph of order >= 3");
    auto product = join(g, make_complete(1));
    int apex = product.map.flat(1, 0);

    auto tree = spanning_tree(g, TreeStrategy::Bfs);
    auto layers = bfs_layers(tree.tree, 0);
    TotalColoring c(product.graph.vertex_count(), 3);
    for (size_t i = 0; i < layers.layers.size(); ++i)
        for (int v : layers.layers[i]) {
            c.vertex_color[v] = i % 2 == 0 ? 1 : 2;
            c.set_edge_color(v, apex, i % 2 == 0 ? 2 : 1);
        }
    c.vertex_color[apex] = 3;
    for (auto [u, v] : tree.tree.edges()) c.set_edge_color(u, v, 3);
    return finish(product.graph, std::move(c), "join-apex");
}

ColorerOutcome color_complete_bipartite(int m, int n) {
    if (m < 2 || n < m) throw std::invalid_argument("color_complete_bipartite needs 2 <= m <= n");
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, TotalColoring> cache;
    Graph g = make_complete_bipartite(m, n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({m, n});
        if (it != cache.end())
            return ColorerOutcome(g, it->second, "complete-bipartite-search", false);
    }
    auto c = search_coloring(g, 3);
    if (!c) throw std::runtime_error("no 3-coloring found for the complete bipartite graph");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache[{m, n}] = *c;
    }
    return ColorerOutcome(g, std::move(*c), "complete-bipartite-search", false);
}

ColorerOutcome color_join_general(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument("color_join_general needs connected factors");
    auto product = join(g, h);
    if (is_complete(product.graph))
        return ColorerOutcome(product.graph, all_one_coloring(product.graph), "join-complete",
                              false);
    int a = g.vertex_count(), b = h.vertex_count();
    if (b == 1) return color_join_with_k1(g);
    if (a == 1) {
        // Color join(h, K_1) and relabel onto the join(K_1, h) layout.
        auto out = color_join_with_k1(h);
        auto mirror = join(h, make_complete(1));
        std::vector<int> to_dst(mirror.graph.vertex_count());
        for (int v = 0; v < b; ++v) to_dst[v] = 1 + v;
        to_dst[b] = 0;
        auto c = transfer_coloring(mirror.graph, out.coloring, product.graph, to_dst, 3);
        return ColorerOutcome(product.graph, std::move(c), out.construction, out.repaired);
    }
    // Both factors nontrivial: color the spanning complete bipartite graph
    // and extend over the internal factor edges.
    auto bip = color_complete_bipartite(std::min(a, b), std::max(a, b));
    Graph bip_graph = make_complete_bipartite(std::min(a, b), std::max(a, b));
    std::vector<int> to_dst(a + b);
    if (a <= b) {
        std::iota(to_dst.begin(), to_dst.end(), 0);
    } else {
        for (int i = 0; i < b; ++i) to_dst[i] = a + i;       // small part = right block
        for (int j = 0; j < a; ++j) to_dst[b + j] = j;       // large part = left block
    }
    auto c = transfer_coloring(bip_graph, bip.coloring, product.graph, to_dst, 3);
    return finish(product.graph, std::move(c), "join-bipartite");
}

ColorerOutcome color_cartesian_traceable(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2 || h.vertex_count() < 2)
        throw std::invalid_argument("color_cartesian_traceable needs nontrivial factors");
    auto gpath = require_hamiltonian_path(g, "color_cartesian_traceable");
    auto hpath = require_hamiltonian_path(h, "color_cartesian_traceable");
    auto product = cartesian(g, h);
    // Boustrophedon Hamiltonian path of the spanning grid.
    std::vector<VertexId> snake;
    for (size_t i = 0; i < gpath.size(); ++i)
        for (size_t j = 0; j < hpath.size(); ++j) {
            size_t jj = i % 2 == 0 ? j : hpath.size() - 1 - j;
            snake.push_back(product.map.flat(gpath[i], hpath[jj]));
        }
    TotalColoring c(product.graph.vertex_count(), 3);
    color_path_cyclic(c, snake);
    return finish(product.graph, std::move(c), "cartesian-grid");
}

namespace {

// Spanning star of a graph with a dominating vertex: center plus the other
// vertices in ascending order.
std::pair<int, std::vector<int>> spanning_star(const Graph& h) {
    int center = 0;
    for (int v = 1; v < h.vertex_count(); ++v)
        if (h.degree(v) > h.degree(center)) center = v;
    std::vector<int> leaves;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != center) leaves.push_back(v);
    return {center, leaves};
}

}  // namespace

ColorerOutcome color_cartesian_star(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2) throw std::invalid_argument("left factor must be nontrivial");
    if (!is_connected(h) || max_degree(h) != h.vertex_count() - 1)
        throw std::invalid_argument("right factor needs a dominating vertex");
    if (h.vertex_count() <= 3) return color_cartesian_traceable(g, h);

    auto gpath = require_hamiltonian_path(g, "color_cartesian_star");
    auto [center, leaves] = spanning_star(h);
    int n = static_cast<int>(gpath.size());
    int s = static_cast<int>(leaves.size());
    auto product = cartesian(g, h);
    // one-based coordinates: i in 1..n along the path, j in 0..s over the star
    auto at = [&](int i, int j) {
        return product.map.flat(gpath[i - 1], j == 0 ? center : leaves[j - 1]);
    };

    TotalColoring c(product.graph.vertex_count(), 3);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= s; ++j) {
            bool odd = i % 2 == 1;
            if (j == 0)
                c.vertex_color[at(i, j)] = 1;
            else if ((odd && j >= 2) || (!odd && j == 1))
                c.vertex_color[at(i, j)] = 2;
            else
                c.vertex_color[at(i, j)] = 3;
        }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 0; j <= s; ++j)
            c.set_edge_color(at(i, j), at(i + 1, j), j >= 1 ? 1 : 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= s; ++j) {
            bool odd = i % 2 == 1;
            int color = (odd && j == 1) || (!odd && j >= 2) ? 2 : 3;
            c.set_edge_color(at(i, 0), at(i, j), color);
        }
    return finish(product.graph, std::move(c), "cartesian-star");
}

namespace {

// The double-broom spanning tree behind the near-star case: x dominates all
// but z, which hangs off a common neighbor y.
struct NearStarFrame {
    int x, y, z;
    std::vector<int> w_set;  // everything except x, y, z
};

NearStarFrame near_star_frame(const Graph& h) {
    NearStarFrame f{};
    f.x = 0;
    for (int v = 1; v < h.vertex_count(); ++v)
        if (h.degree(v) > h.degree(f.x)) f.x = v;
    f.z = -1;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != f.x && !h.has_edge(f.x, v)) {
            f.z = v;
            break;
        }
    f.y = -1;
    for (int v : h.neighbors(f.z))
        if (h.has_edge(f.x, v)) {
            f.y = v;
            break;
        }
    if (f.z < 0 || f.y < 0) throw std::invalid_argument("no near-star frame in this graph");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != f.x && v != f.y && v != f.z) f.w_set.push_back(v);
    return f;
}

}  // namespace

ColorerOutcome color_cartesian_near_star(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2) throw std::invalid_argument("left factor must be nontrivial");
    if (!is_connected(h) || max_degree(h) != h.vertex_count() - 2)
        throw std::invalid_argument("right factor needs maximum degree |H|-2");
    if (h.vertex_count() == 4) return color_cartesian_traceable(g, h);  // traceable then
    if (h.vertex_count() < 5) throw std::invalid_argument("right factor too small");

    auto gpath = require_hamiltonian_path(g, "color_cartesian_near_star");
    auto frame = near_star_frame(h);
    int n = static_cast<int>(gpath.size());
    auto product = cartesian(g, h);
    auto at = [&](int i, int hv) { return product.map.flat(gpath[i - 1], hv); };

    TotalColoring c(product.graph.vertex_count(), 3);
    auto make_trail = [&](int i, int w) {
        std::vector<VertexId> t;
        t.push_back(at(i, w));
        t.push_back(at(i, frame.x));
        t.push_back(at(i, frame.y));
        t.push_back(at(i, frame.z));
        for (int j = i - 1; j >= 1; --j) t.push_back(at(j, frame.z));
        t.push_back(at(1, frame.y));
        t.push_back(at(1, frame.x));
        t.push_back(at(1, w));
        for (int j = 2; j <= n; ++j) t.push_back(at(j, w));
        return t;
    };

    std::vector<std::vector<VertexId>> trails;
    bool pattern_ok = true;
    if (n == 2 || n == 3) {
        // explicit two-layer table
        for (int w : frame.w_set) {
            c.vertex_color[at(1, frame.y)] = 1;
            c.set_edge_color(at(1, frame.x), at(1, w), 1);
            c.vertex_color[at(2, w)] = 1;
            c.set_edge_color(at(2, frame.x), at(2, frame.y), 1);
            c.set_edge_color(at(1, frame.x), at(1, frame.y), 2);
            c.vertex_color[at(1, w)] = 2;
            c.set_edge_color(at(2, frame.x), at(2, w), 2);
            c.vertex_color[at(2, frame.y)] = 2;
            c.vertex_color[at(1, frame.x)] = 3;
            c.set_edge_color(at(1, w), at(2, w), 3);
            c.vertex_color[at(2, frame.x)] = 3;
            c.set_edge_color(at(1, frame.y), at(2, frame.y), 3);
            c.set_edge_color(at(1, frame.z), at(1, frame.y), 3);
            c.set_edge_color(at(2, frame.z), at(2, frame.y), 3);
        }
        if (n == 3)
            for (int w : frame.w_set) trails.push_back(make_trail(3, w));
    } else {
        for (int i = 2; i <= n; ++i)
            for (int w : frame.w_set) trails.push_back(make_trail(i, w));
    }
    // The residue-one case additionally keeps each straight column-plus-corner
    // path on the pattern, which pins the far corner vertices.
    std::vector<std::vector<VertexId>> extra_paths;
    if (n >= 4 && n % 3 == 1)
        for (int w : frame.w_set) {
            std::vector<VertexId> p;
            for (int j = 1; j <= n; ++j) p.push_back(at(j, w));
            p.push_back(at(n, frame.x));
            p.push_back(at(n, frame.y));
            p.push_back(at(n, frame.z));
            extra_paths.push_back(std::move(p));
        }
    for (const auto& t : trails)
        if (!try_trail_pattern(c, t).ok) pattern_ok = false;
    for (const auto& p : extra_paths)
        if (!try_trail_pattern(c, p).ok) pattern_ok = false;

    if (!pattern_ok && !trails.empty()) {
        // Joint constraint solve over every trail when the greedy stamping
        // ran into a contradiction.
        WindowCsp csp(product.graph);
        for (const auto& t : trails) csp.add_trail(t);
        for (const auto& p : extra_paths) csp.add_trail(p);
        TotalColoring fresh(product.graph.vertex_count(), 3);
        if (csp.solve(fresh)) c = fresh;
    }

    // The residue-zero case echoes two layer edges into the last columns.
    if (n >= 4 && n % 3 == 0) {
        c.set_edge_color(at(n - 1, frame.x), at(n - 2, frame.x),
                         c.edge_color(at(n - 2, frame.x), at(n - 2, frame.y)));
        c.set_edge_color(at(n - 1, frame.y), at(n - 2, frame.y),
                         c.edge_color(at(n - 2, frame.y), at(n - 2, frame.z)));
    }

    // Remaining column edges take a color away from both endpoints.
    for (int hv : {frame.x, frame.y, frame.z})
        for (int i = 1; i < n; ++i)
            if (c.edge_color(at(i, hv), at(i + 1, hv)) == 0)
                color_edge_avoiding_endpoints(c, at(i, hv), at(i + 1, hv));
    return finish(product.graph, std::move(c), "cartesian-near-star");
}

ColorerOutcome color_permutation_traceable(const Graph& g, const Permutation& alpha) {
    if (g.vertex_count() < 2) throw std::invalid_argument("base graph must be nontrivial");
    if (alpha.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
    auto gpath = require_hamiltonian_path(g, "color_permutation_traceable");
    auto product = permutation_graph(g, alpha);
    int n = g.vertex_count();

    // position of each vertex along the path, 1-based
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[gpath[i]] = i + 1;
    auto beta = [&](int i) { return pos[alpha(gpath[i - 1])]; };  // path-coordinate matching
    auto vfl = [&](int i) { return product.map.flat(0, gpath[i - 1]); };
    auto ufl = [&](int i) { return product.map.flat(1, gpath[i - 1]); };

    int i_last = beta(n);
    if (i_last == 1 || i_last == n) {
        auto out = color_traceable(product.graph);
        return ColorerOutcome(product.graph, out.coloring, "permutation-traceable", out.repaired);
    }

    TotalColoring c(product.graph.vertex_count(), 3);
    // first copy: positions 0,1,2,... of the cycle
    for (int j = 1; j <= n; ++j) c.vertex_color[vfl(j)] = cyc123(2 * (j - 1));
    for (int j = 1; j < n; ++j) c.set_edge_color(vfl(j), vfl(j + 1), cyc123(2 * j - 1));
    // continue through the matching edge at the far end and both arms of the
    // second copy, keeping the cyclic sequence
    c.set_edge_color(vfl(n), ufl(i_last), cyc123(2 * n - 1));
    for (int j = i_last; j >= 1; --j) {
        c.vertex_color[ufl(j)] = cyc123(2 * n + 2 * (i_last - j));
        if (j > 1) c.set_edge_color(ufl(j), ufl(j - 1), cyc123(2 * n + 2 * (i_last - j) + 1));
    }
    for (int j = i_last + 1; j <= n; ++j) {
        c.vertex_color[ufl(j)] = cyc123(2 * n + 2 * (j - i_last));
        c.set_edge_color(ufl(j - 1), ufl(j), cyc123(2 * n + 2 * (j - i_last) - 1));
    }
    // matching edges: the first one avoids its two path elements, the middle
    // ones copy the path edge arriving at their left endpoint
    c.set_edge_color(vfl(1), ufl(beta(1)),
                     third_color(c.vertex_color[vfl(1)], c.edge_color(vfl(1), vfl(2))));
    for (int j = 2; j <= n - 1; ++j)
        c.set_edge_color(vfl(j), ufl(beta(j)), c.edge_color(vfl(j - 1), vfl(j)));
    return finish(product.graph, std::move(c), "permutation-traceable");
}

ColorerOutcome color_permutation_star(int leaves, StarPermutationVariant variant) {
    if (leaves < 3) throw std::invalid_argument("color_permutation_star needs at least 3 leaves");
    Graph star = make_star(leaves);
    int n = leaves + 1;
    if (variant == StarPermutationVariant::Identity) {
        auto product = permutation_graph(star, Permutation::identity(n));
        // P_id(star) and K_2 x star share the flat layout (copy, vertex).
        auto grid = cartesian(make_path(2), star);
        auto out = color_cartesian_star(make_path(2), star);
        if (!(grid.graph == product.graph))
            throw std::logic_error("layout mismatch between the identity permutation and K_2 product");
        return ColorerOutcome(product.graph, out.coloring, "permutation-star-identity",
                              out.repaired);
    }

    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[0], img[1]);
    auto product = permutation_graph(star, Permutation(img));
    auto v = [&](int i) { return product.map.flat(0, i); };
    auto vp = [&](int i) { return product.map.flat(1, i); };

    // three explicit color classes; class 3 is everything left over
    TotalColoring c(product.graph.vertex_count(), 3);
    c.vertex_color[v(0)] = 1;
    c.vertex_color[vp(0)] = 1;
    for (int i = 2; i <= leaves; ++i) c.set_edge_color(v(i), vp(i), 1);
    c.vertex_color[vp(2)] = 2;
    for (int i = 1; i <= leaves; ++i)
        if (i != 2) c.vertex_color[v(i)] = 2;
    c.set_edge_color(v(0), vp(1), 2);
    c.set_edge_color(v(0), v(2), 2);
    for (int i = 1; i <= leaves; ++i)
        if (i != 2) c.set_edge_color(vp(0), vp(i), 2);
    for (int w = 0; w < product.graph.vertex_count(); ++w)
        if (c.vertex_color[w] == 0) c.vertex_color[w] = 3;
    for (auto [a, b] : product.graph.edges())
        if (c.edge_color(a, b) == 0) c.set_edge_color(a, b, 3);
    return finish(product.graph, std::move(c), "permutation-star-transposition");
}

ColorerOutcome color_lexicographic(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2 || h.vertex_count() < 2)
        throw std::invalid_argument("color_lexicographic needs nontrivial factors");
    if (!is_connected(g)) throw std::invalid_argument("left factor must be connected");
    auto product = lexicographic(g, h);
    if (is_complete(product.graph)) throw std::invalid_argument("product is complete");

    int hn = h.vertex_count();
    if (g.vertex_count() == 2) {
        // spanning complete bipartite graph between the two blocks
        auto bip = color_complete_bipartite(hn, hn);
        Graph bip_graph = make_complete_bipartite(hn, hn);
        std::vector<int> to_dst(2 * hn);
        std::iota(to_dst.begin(), to_dst.end(), 0);
        auto c = transfer_coloring(bip_graph, bip.coloring, product.graph, to_dst, 3);
        return finish(product.graph, std::move(c), "lexicographic-bipartite");
    }

    // Pendant-rooted spanning tree; the root path phases color two layers.
    auto tinfo = spanning_tree(g, TreeStrategy::Bfs);
    int root = -1;
    for (int vtx = 0; vtx < g.vertex_count(); ++vtx)
        if (tinfo.tree.degree(vtx) == 1) {
            root = vtx;
            break;
        }
    tinfo = root_tree(tinfo.tree, root);
    int t = tinfo.tree.neighbors(root)[0];
    int anchor = -1;
    for (int w : tinfo.tree.neighbors(t))
        if (w != root) {
            anchor = w;
            break;
        }
    auto depth = bfs_distances(tinfo.tree, root);
    auto at = [&](int gv, int hi) { return product.map.flat(gv, hi - 1); };  // hi is 1-based

    TotalColoring c(product.graph.vertex_count(), 3);
    // layer X = copies over h_1: total proper along every root path
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
        c.vertex_color[at(gv, 1)] = cyc123(2 * depth[gv]);
        if (gv != root)
            c.set_edge_color(at(gv, 1), at(tinfo.parent[gv], 1), cyc123(2 * depth[gv] - 1));
    }
    if (hn >= 2) {
        // continue the phase into layer Y = copies over h_2 (root excluded)
        c.set_edge_color(at(root, 1), at(t, 2), cyc123(-1));
        for (int gv = 0; gv < g.vertex_count(); ++gv) {
            if (gv == root) continue;
            c.vertex_color[at(gv, 2)] = cyc123(-2 * depth[gv]);
            if (gv != t)
                c.set_edge_color(at(gv, 2), at(tinfo.parent[gv], 2), cyc123(1 - 2 * depth[gv]));
        }
    }
    // column copies of the two layer edges
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
        if (gv == root || gv == t) continue;
        int p = tinfo.parent[gv];
        for (int hi = 1; hi <= hn; ++hi) {
            c.set_edge_color(at(gv, hi), at(p, 1), c.edge_color(at(gv, 1), at(p, 1)));
            if (hn >= 2)
                c.set_edge_color(at(gv, hi), at(p, 2), c.edge_color(at(gv, 2), at(p, 2)));
        }
    }
    // special edges between the root and t columns, then around the anchor
    for (int hi = 2; hi <= hn; ++hi)
        c.set_edge_color(at(t, 1), at(root, hi), c.edge_color(at(t, 1), at(root, 1)));
    for (int hj = 3; hj <= hn; ++hj) {
        c.set_edge_color(at(root, 1), at(t, hj), c.edge_color(at(root, 1), at(t, 2)));
        c.set_edge_color(at(t, 2), at(root, hj), c.edge_color(at(root, 1), at(t, 2)));
    }
    for (int hs = 4; hs <= hn; ++hs)
        c.set_edge_color(at(root, 3), at(t, hs), c.vertex_color[at(t, 2)]);
    if (hn >= 2) c.set_edge_color(at(root, 2), at(t, 2), c.vertex_color[at(root, 1)]);
    if (hn >= 3) {
        for (int hi = 3; hi <= hn; ++hi)
            c.set_edge_color(at(anchor, 2), at(t, hi), c.vertex_color[at(t, 2)]);
        int broom = c.edge_color(at(anchor, 2), at(t, 2));
        c.vertex_color[at(root, 3)] = broom;
        c.vertex_color[at(t, 3)] = broom;
        for (int hj = 3; hj <= hn; ++hj)
            c.set_edge_color(at(t, 3), at(root, hj), c.vertex_color[at(anchor, 2)]);
    }
    return finish(product.graph, std::move(c), "lexicographic-tree");
}

ColorerOutcome color_strong(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2 || h.vertex_count() < 2)
        throw std::invalid_argument("color_strong needs nontrivial factors");
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument("color_strong needs connected factors");
    auto product = strong(g, h);
    if (is_complete(product.graph))
        return ColorerOutcome(product.graph, all_one_coloring(product.graph), "strong-complete",
                              false);

    auto tinfo = spanning_tree(g, TreeStrategy::Bfs);
    auto sinfo = spanning_tree(h, TreeStrategy::Bfs);
    const int t_root = tinfo.root, s_root = sinfo.root;
    auto leaves_of = [](const TreeInfo& info) {
        std::vector<int> out;
        for (int v = 0; v < info.tree.vertex_count(); ++v)
            if (v != info.root && info.tree.degree(v) == 1) out.push_back(v);
        return out;
    };
    auto up_path = [](const TreeInfo& info, int from) {
        std::vector<int> out{from};
        while (out.back() != info.root) out.push_back(info.parent[out.back()]);
        return out;
    };
    std::vector<int> t_leaves = leaves_of(tinfo), s_leaves = leaves_of(sinfo);
    auto at = [&](int gv, int hv) { return product.map.flat(gv, hv); };

    std::vector<std::vector<VertexId>> trails;
    for (int w : t_leaves)
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (v == s_root) continue;
            for (int x : s_leaves) {
                std::vector<VertexId> trail;
                for (int z : up_path(tinfo, w)) trail.push_back(at(z, v));           // climb T
                auto sv = up_path(sinfo, v);
                for (size_t i = 1; i < sv.size(); ++i) trail.push_back(at(t_root, sv[i]));  // climb S
                auto tw = up_path(tinfo, w);
                for (auto it = tw.rbegin() + 1; it != tw.rend(); ++it)
                    trail.push_back(at(*it, s_root));                                 // descend T
                auto sx = up_path(sinfo, x);
                for (auto it = sx.rbegin() + 1; it != sx.rend(); ++it)
                    trail.push_back(at(w, *it));                                      // out to x
                trails.push_back(std::move(trail));
            }
        }

    TotalColoring c(product.graph.vertex_count(), 3);
    bool pattern_ok = true;
    for (const auto& t : trails)
        if (!try_trail_pattern(c, t).ok) pattern_ok = false;
    if (!pattern_ok) {
        WindowCsp csp(product.graph);
        for (const auto& t : trails) csp.add_trail(t);
        TotalColoring fresh(product.graph.vertex_count(), 3);
        if (csp.solve(fresh)) c = fresh;
    }

    // parent-edge copies toward the first neighbor of the S root
    int s_star = sinfo.tree.neighbors(s_root).empty() ? -1 : sinfo.tree.neighbors(s_root)[0];
    if (s_star >= 0)
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (u == t_root) continue;
            int p = tinfo.parent[u];
            if (product.graph.has_edge(at(u, s_root), at(p, s_star)))
                c.set_edge_color(at(u, s_root), at(p, s_star), c.vertex_color[at(p, s_root)]);
        }
    // leaf-corner vertices never sit inside a trail
    for (int w = 0; w < product.graph.vertex_count(); ++w)
        if (c.vertex_color[w] == 0) c.vertex_color[w] = 1;
    // noncartesian edges move away from both endpoints
    for (int e = 0; e < product.graph.edge_count(); ++e)
        if (product.edge_kinds[e] == EdgeKind::Noncartesian) {
            auto [a, b] = product.graph.edges()[e];
            if (c.edge_color(a, b) == 0) color_edge_avoiding_endpoints(c, a, b);
        }
    return finish(product.graph, std::move(c), "strong-trails");
}

ColorerOutcome color_tree(const Graph& t) {
    if (!is_tree(t) || t.vertex_count() < 3)
        throw std::invalid_argument("color_tree needs a tree of order >= 3");
    int k = max_degree(t) + 1;
    auto c = search_coloring(t, k);
    if (!c) throw std::runtime_error("no tree coloring found within budget");
    return ColorerOutcome(t, std::move(*c), "tree-search", false);
}

std::optional<TotalColoring> search_coloring(const Graph& g, int k,
                                             const std::optional<TotalColoring>& seed,
                                             long long budget) {
    if (k < 1) throw std::invalid_argument("palette must have at least one color");
    detail::SlotSpace slots(g, PathFlavor::TotalProper);
    try {
        detail::PathConstraintIndex index(g, slots, 200'000);
        auto res = seed ? detail::search_seeded(index, slots.from_coloring(*seed), k, budget)
                        : detail::search_canonical(index, slots.count(), k, budget);
        if (res.status == detail::SearchStatus::Found) return slots.to_coloring(res.colors, k);
        return std::nullopt;
    } catch (const CapExceeded&) {
        // The graph is too dense to index every simple path. Fall back to
        // checker-validated candidates near the seed.
        if (!seed) return std::nullopt;
        auto passes = [&](const TotalColoring& c) {
            try {
                return check_connected(g, c, PathFlavor::TotalProper).connected;
            } catch (const std::invalid_argument&) {
                return false;
            }
        };
        if (passes(*seed)) return *seed;
        long long tried = 0;
        auto colors = slots.from_coloring(*seed);
        for (int slot = 0; slot < slots.count(); ++slot) {
            int original = colors[slot];
            for (int c2 = 1; c2 <= k; ++c2) {
                if (c2 == original) continue;
                if (++tried > budget) return std::nullopt;
                colors[slot] = c2;
                auto candidate = slots.to_coloring(colors, k);
                if (passes(candidate)) return candidate;
            }
            colors[slot] = original;
        }
        return std::nullopt;
    }
}

}  // namespace tpc
