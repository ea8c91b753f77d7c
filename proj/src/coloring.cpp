#include "tpc/coloring.hpp"

namespace tpc {

std::set<int> colors_used(const Graph& g, const TotalColoring& c, PathFlavor flavor) {
    std::set<int> out;
    if (flavor != PathFlavor::EdgeProper)
        for (int v = 0; v < g.vertex_count(); ++v) out.insert(c.vertex_color.at(v));
    if (flavor != PathFlavor::VertexProper)
        for (auto [u, v] : g.edges()) out.insert(c.edge_color(u, v));
    out.erase(0);
    return out;
}

void validate_coloring(const Graph& g, const TotalColoring& c, PathFlavor flavor) {
    if (c.n() != g.vertex_count())
        throw std::invalid_argument("coloring sized for a different graph");
    auto check = [&](int color, const char* what) {
        if (color < 1 || color > c.k)
            throw std::invalid_argument(std::string("uncolored or out-of-palette ") + what);
    };
    if (flavor != PathFlavor::EdgeProper)
        for (int v = 0; v < g.vertex_count(); ++v) check(c.vertex_color.at(v), "vertex");
    if (flavor != PathFlavor::VertexProper)
        for (auto [u, v] : g.edges()) check(c.edge_color(u, v), "edge");
}

}  // namespace tpc
