#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

enum class ProductKind { Join, Cartesian, Lexicographic, Strong, Permutation };

// Bijection between composite labels (a, b) and flat vertex indices.
// Products: a = left-factor vertex, b = right-factor vertex, flat = a*|H|+b.
// Join: a = side (0 left, 1 right), b = vertex within the side.
// Permutation graphs: a = copy (0 or 1), b = vertex of the base graph.
struct ProductVertexMap {
    ProductKind kind = ProductKind::Cartesian;
    int left_n = 0;
    int right_n = 0;

    int size() const;
    VertexId flat(int a, int b) const;
    std::pair<int, int> label(VertexId v) const;
};

// A permutation of [0, n), stored as its image sequence.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image.at(i); }
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return image == o.image; }
};

enum class EdgeKind { Cartesian, Noncartesian, Inherited, Cross };

// Graph operation result: the composite graph, its label map, the factor
// graphs, and (for strong products and permutation graphs) a per-edge kind
// tag aligned with graph.edges().
struct ProductResult {
    Graph graph;
    ProductVertexMap map;
    Graph left;
    Graph right;
    std::optional<Permutation> alpha;
    std::vector<EdgeKind> edge_kinds;

    EdgeKind kind_of(VertexId u, VertexId v) const;
};

ProductResult join(const Graph& g, const Graph& h);
ProductResult cartesian(const Graph& g, const Graph& h);
ProductResult lexicographic(const Graph& g, const Graph& h);
ProductResult strong(const Graph& g, const Graph& h);
ProductResult permutation_graph(const Graph& g, const Permutation& alpha);

}  // namespace tpc
