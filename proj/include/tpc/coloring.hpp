#pragma once

#include <set>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

// A total coloring: one color per vertex and one per edge, colors in 1..k.
// Color 0 marks an element that has not been assigned yet.
struct TotalColoring {
    int k = 0;
    std::vector<int> vertex_color;

    TotalColoring() = default;
    TotalColoring(int n, int palette)
        : k(palette), vertex_color(n, 0), n_(n), edge_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int edge_color(VertexId u, VertexId v) const {
        return edge_[static_cast<size_t>(u) * n_ + v];
    }
    void set_edge_color(VertexId u, VertexId v, int c) {
        edge_[static_cast<size_t>(u) * n_ + v] = c;
        edge_[static_cast<size_t>(v) * n_ + u] = c;
    }

    bool operator==(const TotalColoring& o) const {
        return k == o.k && n_ == o.n_ && vertex_color == o.vertex_color && edge_ == o.edge_;
    }

private:
    int n_ = 0;
    std::vector<int> edge_;
};

// Which of the three path notions a check uses: all of (i)-(iii), edge
// condition (i) only, or internal-vertex condition (ii) only.
enum class PathFlavor { TotalProper, EdgeProper, VertexProper };

// Colors appearing on the elements the flavor constrains.
std::set<int> colors_used(const Graph& g, const TotalColoring& c,
                          PathFlavor flavor = PathFlavor::TotalProper);

// Rejects colorings that leave a relevant element unset or use a color
// outside 1..k.
void validate_coloring(const Graph& g, const TotalColoring& c,
                       PathFlavor flavor = PathFlavor::TotalProper);

}  // namespace tpc
