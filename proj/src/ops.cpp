#include "tpc/ops.hpp"

#include <algorithm>
#include <numeric>

namespace tpc {

int ProductVertexMap::size() const {
    if (kind == ProductKind::Join) return left_n + right_n;
    if (kind == ProductKind::Permutation) return 2 * left_n;
    return left_n * right_n;
}

VertexId ProductVertexMap::flat(int a, int b) const {
    switch (kind) {
        case ProductKind::Join:
            if (a != 0 && a != 1) throw std::invalid_argument("join side must be 0 or 1");
            if (b < 0 || b >= (a == 0 ? left_n : right_n))
                throw std::invalid_argument("join label out of range");
            return a == 0 ? b : left_n + b;
        case ProductKind::Permutation:
            if (a != 0 && a != 1) throw std::invalid_argument("copy must be 0 or 1");
            if (b < 0 || b >= left_n) throw std::invalid_argument("label out of range");
            return a * left_n + b;
        default:
            if (a < 0 || a >= left_n || b < 0 || b >= right_n)
                throw std::invalid_argument("label out of range");
            return a * right_n + b;
    }
}

std::pair<int, int> ProductVertexMap::label(VertexId v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
    switch (kind) {
        case ProductKind::Join:
            return v < left_n ? std::pair<int, int>(0, v) : std::pair<int, int>(1, v - left_n);
        case ProductKind::Permutation:
            return {v / left_n, v % left_n};
        default:
            return {v / right_n, v % right_n};
    }
}

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    std::vector<char> seen(image.size(), 0);
    for (int x : image) {
        if (x < 0 || x >= static_cast<int>(image.size()) || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(image.size());
    for (int i = 0; i < size(); ++i) img[image[i]] = i;
    return Permutation(std::move(img));
}

EdgeKind ProductResult::kind_of(VertexId u, VertexId v) const {
    int idx = graph.edge_index(u, v);
    if (idx < 0 || idx >= static_cast<int>(edge_kinds.size()))
        throw std::invalid_argument("no kind recorded for this edge");
    return edge_kinds[idx];
}

namespace {

void require_nonempty(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 1 || h.vertex_count() < 1)
        throw std::invalid_argument("factors need at least one vertex");
}

}  // namespace

ProductResult join(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    ProductResult out;
    out.map = {ProductKind::Join, g.vertex_count(), h.vertex_count()};
    out.left = g;
    out.right = h;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(out.map.flat(0, u), out.map.flat(0, v));
    for (auto [u, v] : h.edges()) e.emplace_back(out.map.flat(1, u), out.map.flat(1, v));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v)
            e.emplace_back(out.map.flat(0, u), out.map.flat(1, v));
    out.graph = Graph(out.map.size(), std::move(e));
    return out;
}

ProductResult cartesian(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    ProductResult out;
    out.map = {ProductKind::Cartesian, g.vertex_count(), h.vertex_count()};
    out.left = g;
    out.right = h;
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (auto [u, v] : h.edges()) e.emplace_back(out.map.flat(a, u), out.map.flat(a, v));
    for (auto [u, v] : g.edges())
        for (int b = 0; b < h.vertex_count(); ++b)
            e.emplace_back(out.map.flat(u, b), out.map.flat(v, b));
    out.graph = Graph(out.map.size(), std::move(e));
    return out;
}

ProductResult lexicographic(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    ProductResult out;
    out.map = {ProductKind::Lexicographic, g.vertex_count(), h.vertex_count()};
    out.left = g;
    out.right = h;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        for (int b = 0; b < h.vertex_count(); ++b)
            for (int b2 = 0; b2 < h.vertex_count(); ++b2)
                e.emplace_back(out.map.flat(u, b), out.map.flat(v, b2));
    for (int a = 0; a < g.vertex_count(); ++a)
        for (auto [u, v] : h.edges()) e.emplace_back(out.map.flat(a, u), out.map.flat(a, v));
    out.graph = Graph(out.map.size(), std::move(e));
    return out;
}

ProductResult strong(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    ProductResult out;
    out.map = {ProductKind::Strong, g.vertex_count(), h.vertex_count()};
    out.left = g;
    out.right = h;
    std::vector<std::pair<int, int>> cart, noncart;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (auto [u, v] : h.edges()) cart.emplace_back(out.map.flat(a, u), out.map.flat(a, v));
    for (auto [u, v] : g.edges())
        for (int b = 0; b < h.vertex_count(); ++b)
            cart.emplace_back(out.map.flat(u, b), out.map.flat(v, b));
    for (auto [u, v] : g.edges())
        for (auto [x, y] : h.edges()) {
            noncart.emplace_back(out.map.flat(u, x), out.map.flat(v, y));
            noncart.emplace_back(out.map.flat(u, y), out.map.flat(v, x));
        }
    std::vector<std::pair<int, int>> all = cart;
    all.insert(all.end(), noncart.begin(), noncart.end());
    out.graph = Graph(out.map.size(), std::move(all));
    out.edge_kinds.assign(out.graph.edge_count(), EdgeKind::Cartesian);
    for (auto [u, v] : noncart)
        out.edge_kinds[out.graph.edge_index(u, v)] = EdgeKind::Noncartesian;
    return out;
}

ProductResult permutation_graph(const Graph& g, const Permutation& alpha) {
    if (g.vertex_count() < 1) throw std::invalid_argument("base graph needs a vertex");
    if (alpha.size() != g.vertex_count())
        throw std::invalid_argument("permutation size must match the graph order");
    ProductResult out;
    out.map = {ProductKind::Permutation, g.vertex_count(), g.vertex_count()};
    out.left = g;
    out.right = g;
    out.alpha = alpha;
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> inherited, cross;
    for (auto [u, v] : g.edges()) {
        inherited.emplace_back(out.map.flat(0, u), out.map.flat(0, v));
        inherited.emplace_back(out.map.flat(1, u), out.map.flat(1, v));
    }
    for (int i = 0; i < n; ++i) cross.emplace_back(out.map.flat(0, i), out.map.flat(1, alpha(i)));
    std::vector<std::pair<int, int>> all = inherited;
    all.insert(all.end(), cross.begin(), cross.end());
    out.graph = Graph(out.map.size(), std::move(all));
    out.edge_kinds.assign(out.graph.edge_count(), EdgeKind::Inherited);
    for (auto [u, v] : cross) out.edge_kinds[out.graph.edge_index(u, v)] = EdgeKind::Cross;
    return out;
}

}  // namespace tpc
