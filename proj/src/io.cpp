#include "tpc/io.hpp"

#include <ostream>

namespace tpc {

using nlohmann::json;

namespace {

std::string edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return std::to_string(u) + "-" + std::to_string(v);
}

std::pair<int, int> parse_edge_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge key: " + key);
    return {std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))};
}

std::string kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::Join: return "join";
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Lexicographic: return "lexicographic";
        case ProductKind::Strong: return "strong";
        case ProductKind::Permutation: return "permutation";
    }
    throw std::logic_error("unknown product kind");
}

ProductKind kind_from_name(const std::string& s) {
    if (s == "join") return ProductKind::Join;
    if (s == "cartesian") return ProductKind::Cartesian;
    if (s == "lexicographic") return ProductKind::Lexicographic;
    if (s == "strong") return ProductKind::Strong;
    if (s == "permutation") return ProductKind::Permutation;
    throw std::invalid_argument("unknown product kind: " + s);
}

std::string edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Cartesian: return "cartesian";
        case EdgeKind::Noncartesian: return "noncartesian";
        case EdgeKind::Inherited: return "inherited";
        case EdgeKind::Cross: return "cross";
    }
    throw std::logic_error("unknown edge kind");
}

EdgeKind edge_kind_from_name(const std::string& s) {
    if (s == "cartesian") return EdgeKind::Cartesian;
    if (s == "noncartesian") return EdgeKind::Noncartesian;
    if (s == "inherited") return EdgeKind::Inherited;
    if (s == "cross") return EdgeKind::Cross;
    throw std::invalid_argument("unknown edge kind: " + s);
}

}  // namespace

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), std::move(edges));
}

json coloring_json(const Graph& g, const TotalColoring& c) {
    json edge_colors = json::object();
    for (auto [u, v] : g.edges()) edge_colors[edge_key(u, v)] = c.edge_color(u, v);
    return json{{"k", c.k}, {"vertex_colors", c.vertex_color}, {"edge_colors", edge_colors}};
}

TotalColoring coloring_from_json(const json& j) {
    auto vertex_colors = j.at("vertex_colors").get<std::vector<int>>();
    TotalColoring c(static_cast<int>(vertex_colors.size()), j.at("k").get<int>());
    c.vertex_color = vertex_colors;
    for (const auto& [key, value] : j.at("edge_colors").items()) {
        auto [u, v] = parse_edge_key(key);
        c.set_edge_color(u, v, value.get<int>());
    }
    return c;
}

json label_map_json(const ProductResult& p) {
    json forward = json::array();
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
        auto [a, b] = p.map.label(v);
        forward.push_back(json{{"label", json::array({a, b})}, {"vertex", v}});
    }
    json m{{"kind", kind_name(p.map.kind)},
           {"left", graph_json(p.left)},
           {"right", graph_json(p.right)},
           {"forward", forward}};
    if (p.alpha) m["alpha"] = p.alpha->image;
    if (!p.edge_kinds.empty()) {
        json kinds = json::object();
        for (int i = 0; i < p.graph.edge_count(); ++i) {
            auto [u, v] = p.graph.edges()[i];
            kinds[edge_key(u, v)] = edge_kind_name(p.edge_kinds[i]);
        }
        m["edge_kinds"] = kinds;
    }
    return m;
}

json product_json(const ProductResult& p) {
    return json{{"graph", graph_json(p.graph)}, {"map", label_map_json(p)}};
}

ProductResult product_from_json(const json& j) {
    const auto& m = j.at("map");
    ProductResult p;
    p.left = graph_from_json(m.at("left"));
    p.right = graph_from_json(m.at("right"));
    p.map.kind = kind_from_name(m.at("kind").get<std::string>());
    p.map.left_n = p.left.vertex_count();
    p.map.right_n = p.right.vertex_count();
    p.graph = graph_from_json(j.at("graph"));
    if (m.contains("alpha")) p.alpha = Permutation(m.at("alpha").get<std::vector<int>>());
    if (m.contains("edge_kinds")) {
        p.edge_kinds.assign(p.graph.edge_count(), EdgeKind::Cartesian);
        for (const auto& [key, value] : m.at("edge_kinds").items()) {
            auto [u, v] = parse_edge_key(key);
            p.edge_kinds[p.graph.edge_index(u, v)] = edge_kind_from_name(value.get<std::string>());
        }
    }
    return p;
}

json report_json(const CheckReport& r) {
    json failures = json::array();
    for (auto [u, v] : r.failures) failures.push_back(json::array({u, v}));
    json witnesses = json::object();
    for (const auto& [pair, path] : r.witnesses) witnesses[edge_key(pair.first, pair.second)] = path;
    return json{{"connected", r.connected},
                {"failures", failures},
                {"witnesses", witnesses},
                {"nodes_explored", r.nodes_explored}};
}

json tpc_result_json(const Graph& g, const TpcResult& r) {
    return json{{"flavor", flavor_name(r.flavor)},
                {"value", r.value},
                {"witness", coloring_json(g, r.witness)},
                {"colorings_tried", r.colorings_tried}};
}

json hunt_json(const HuntResult& h) {
    json candidates = json::array();
    for (const auto& c : h.candidates)
        candidates.push_back(json{{"graph", graph_json(c.graph)},
                                  {"alpha", c.alpha.image},
                                  {"tpc", c.tpc_value}});
    return json{{"candidates", candidates},
                {"instances_examined", h.instances_examined},
                {"completed", h.completed}};
}

std::string flavor_name(PathFlavor f) {
    switch (f) {
        case PathFlavor::TotalProper: return "total";
        case PathFlavor::EdgeProper: return "edge";
        case PathFlavor::VertexProper: return "vertex";
    }
    throw std::logic_error("unknown flavor");
}

PathFlavor flavor_from_name(const std::string& name) {
    if (name == "total") return PathFlavor::TotalProper;
    if (name == "edge") return PathFlavor::EdgeProper;
    if (name == "vertex") return PathFlavor::VertexProper;
    throw std::invalid_argument("unknown flavor: " + name);
}

void write_dot(std::ostream& out, const Graph& g, const TotalColoring* coloring) {
    static const char* kPalette[] = {"black",  "red",    "green3", "blue",   "orange",
                                     "purple", "brown",  "cyan3",  "magenta", "gold",
                                     "gray40", "pink",   "navy"};
    auto color_name = [&](int c) {
        return (c >= 1 && c <= 12) ? kPalette[c] : kPalette[0];
    };
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (coloring) out << " [color=" << color_name(coloring->vertex_color[v]) << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (coloring) out << " [color=" << color_name(coloring->edge_color(u, v)) << "]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace tpc
