#include "tpc/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace tpc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    edge_index_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        auto [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edge_index_[static_cast<size_t>(u) * n_ + v] = i;
        edge_index_[static_cast<size_t>(v) * n_ + u] = i;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return edge_index(u, v) >= 0;
}

int Graph::edge_index(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    return edge_index_[static_cast<size_t>(u) * n_ + v];
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("both parts need at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.emplace_back(u, m + v);
    return Graph(m + n, std::move(e));
}

Graph make_empty(int n) {
    if (n < 1) throw std::invalid_argument("empty graph needs at least one vertex");
    return Graph(n, {});
}

bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (g.vertex_count() == 0) return dist;
    std::queue<int> q;
    dist.at(source) = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

BfsLayers bfs_layers(const Graph& g, VertexId source) {
    if (!is_connected(g)) throw std::invalid_argument("bfs_layers requires a connected graph");
    auto dist = bfs_distances(g, source);
    int ecc = *std::max_element(dist.begin(), dist.end());
    BfsLayers out;
    out.source = source;
    out.layers.assign(ecc + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v) out.layers[dist[v]].push_back(v);
    return out;
}

TreeInfo root_tree(const Graph& tree, VertexId root) {
    if (!is_tree(tree)) throw std::invalid_argument("root_tree requires a tree");
    TreeInfo info;
    info.tree = tree;
    info.root = root;
    info.parent.assign(tree.vertex_count(), -1);
    std::vector<char> seen(tree.vertex_count(), 0);
    std::queue<int> q;
    seen.at(root) = 1;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : tree.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                info.parent[w] = u;
                q.push(w);
            }
    }
    return info;
}

namespace {

Graph bfs_tree(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                e.emplace_back(u, w);
                q.push(w);
            }
    }
    return Graph(g.vertex_count(), std::move(e));
}

std::vector<int> tree_path(const Graph& tree, int u, int v) {
    // Unique u-v path in a tree, found by BFS parents.
    std::vector<int> par(tree.vertex_count(), -2);
    std::queue<int> q;
    par[u] = -1;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (int w : tree.neighbors(x))
            if (par[w] == -2) {
                par[w] = x;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

TreeInfo spanning_tree(const Graph& g, TreeStrategy strategy) {
    if (!is_connected(g)) throw std::invalid_argument("spanning_tree requires a connected graph");
    Graph t = bfs_tree(g);
    if (strategy == TreeStrategy::MinMaxDegreeHeuristic) {
        // Local improvement: swap a tree edge at a maximum-degree vertex for a
        // non-tree edge when that strictly lowers (max degree, #vertices at max).
        auto potential = [](const Graph& tr) {
            int dmax = max_degree(tr);
            int cnt = 0;
            for (int v = 0; v < tr.vertex_count(); ++v)
                if (tr.degree(v) == dmax) ++cnt;
            return std::pair<int, int>(dmax, cnt);
        };
        bool improved = true;
        long long guard = static_cast<long long>(g.vertex_count()) * (g.edge_count() + 1);
        while (improved && guard-- > 0) {
            improved = false;
            auto cur = potential(t);
            for (auto [u, v] : g.edges()) {
                if (t.has_edge(u, v)) continue;
                if (t.degree(u) + 1 >= cur.first || t.degree(v) + 1 >= cur.first) continue;
                auto cycle = tree_path(t, u, v);
                for (size_t i = 0; i + 1 < cycle.size() && !improved; ++i) {
                    int a = cycle[i], b = cycle[i + 1];
                    if (t.degree(a) != cur.first && t.degree(b) != cur.first) continue;
                    std::vector<std::pair<int, int>> edges = t.edges();
                    auto key = std::minmax(a, b);
                    std::erase(edges, std::pair<int, int>(key.first, key.second));
                    edges.emplace_back(std::min(u, v), std::max(u, v));
                    Graph cand(g.vertex_count(), std::move(edges));
                    if (potential(cand) < cur) {
                        t = std::move(cand);
                        improved = true;
                    }
                }
                if (improved) break;
            }
        }
    }
    return root_tree(t, 0);
}

namespace {

bool remaining_reachable(const Graph& g, int from, const std::vector<char>& visited) {
    // All unvisited vertices must be reachable from `from` through unvisited ones.
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[from] = 1;
    q.push(from);
    int reached = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[w] && !visited[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    int unvisited = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!visited[v]) ++unvisited;
    return reached == unvisited;
}

bool ham_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& visited,
             long long& nodes, long long budget) {
    if (++nodes > budget) throw BudgetExhausted("hamiltonian path search budget exhausted");
    if (static_cast<int>(path.size()) == g.vertex_count()) return true;
    int last = path.back();
    if (!remaining_reachable(g, last, visited)) return false;
    for (int w : g.neighbors(last)) {
        if (visited[w]) continue;
        visited[w] = 1;
        path.push_back(w);
        if (ham_dfs(g, path, visited, nodes, budget)) return true;
        path.pop_back();
        visited[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexId>> find_hamiltonian_path(const Graph& g, long long node_budget) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<VertexId>{0};
    if (!is_connected(g)) return std::nullopt;
    long long nodes = 0;
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        std::vector<char> visited(n, 0);
        visited[start] = 1;
        if (ham_dfs(g, path, visited, nodes, node_budget)) return path;
    }
    return std::nullopt;
}

namespace {

// Pairs (i,j), i<j, in row-major order; pair 0 maps to the most significant
// bit so that numeric comparison of masks equals lexicographic comparison of
// adjacency strings.
struct PairCoding {
    int n;
    int bits;
    std::vector<std::vector<int>> pair_id;  // pair_id[i][j]

    explicit PairCoding(int n_) : n(n_), bits(n_ * (n_ - 1) / 2) {
        pair_id.assign(n, std::vector<int>(n, -1));
        int id = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pair_id[i][j] = pair_id[j][i] = id++;
    }
    std::uint64_t bit(int i, int j) const { return 1ull << (bits - 1 - pair_id[i][j]); }
};

std::uint64_t permuted_mask(std::uint64_t mask, const std::vector<int>& perm,
                            const PairCoding& pc) {
    std::uint64_t out = 0;
    for (int i = 0; i < pc.n; ++i)
        for (int j = i + 1; j < pc.n; ++j)
            if (mask & pc.bit(i, j)) out |= pc.bit(perm[i], perm[j]);
    return out;
}

bool mask_connected(std::uint64_t mask, const PairCoding& pc) {
    if (pc.n <= 1) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int i = 0; i < pc.n; ++i) {
            if (!(frontier & (1u << i))) continue;
            for (int j = 0; j < pc.n; ++j)
                if (j != i && (mask & pc.bit(std::min(i, j), std::max(i, j))) &&
                    !(seen & (1u << j)))
                    next |= 1u << j;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << pc.n) - 1;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Graph mask_to_graph(std::uint64_t mask, const PairCoding& pc) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < pc.n; ++i)
        for (int j = i + 1; j < pc.n; ++j)
            if (mask & pc.bit(i, j)) e.emplace_back(i, j);
    return Graph(pc.n, std::move(e));
}

// Cheap necessary condition for minimality: the row of vertex 0 must be the
// smallest achievable row string, i.e. vertex 0 has minimum degree and its
// neighbors occupy the highest labels.
bool row0_minimal(std::uint64_t mask, const PairCoding& pc) {
    std::vector<int> deg(pc.n, 0);
    for (int i = 0; i < pc.n; ++i)
        for (int j = i + 1; j < pc.n; ++j)
            if (mask & pc.bit(i, j)) ++deg[i], ++deg[j];
    int dmin = *std::min_element(deg.begin(), deg.end());
    if (deg[0] != dmin) return false;
    for (int j = 1; j < pc.n; ++j) {
        bool adjacent = (mask & pc.bit(0, j)) != 0;
        bool should = j >= pc.n - dmin;
        if (adjacent != should) return false;
    }
    return true;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n, bool dedup_isomorphic, int cap) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (n > cap) throw CapExceeded("enumeration cap exceeded");
    if (n > 7) throw CapExceeded("enumeration supports at most 7 vertices");
    PairCoding pc(n);
    auto perms = dedup_isomorphic ? all_permutations(n) : std::vector<std::vector<int>>{};
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << pc.bits); ++mask) {
        if (!mask_connected(mask, pc)) continue;
        if (dedup_isomorphic) {
            if (!row0_minimal(mask, pc)) continue;
            bool canonical = true;
            for (const auto& p : perms)
                if (permuted_mask(mask, p, pc) < mask) {
                    canonical = false;
                    break;
                }
            if (!canonical) continue;
        }
        out.push_back(mask_to_graph(mask, pc));
    }
    return out;
}

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw CapExceeded("canonical_code supports at most 8 vertices");
    PairCoding pc(n);
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= pc.bit(u, v);
    std::uint64_t best = mask;
    for (const auto& p : all_permutations(n)) best = std::min(best, permuted_mask(mask, p, pc));
    return best;
}

}  // namespace tpc
