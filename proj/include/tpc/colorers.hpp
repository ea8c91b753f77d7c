#pragma once

#include <optional>
#include <string>

#include "tpc/checker.hpp"
#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"
#include "tpc/ops.hpp"

namespace tpc {

struct ColoringRejected : std::runtime_error {
    explicit ColoringRejected(const std::string& what) : std::runtime_error(what) {}
};

// A total coloring that passed the connectivity checker on its target graph.
// The constructor runs the checker and refuses anything that does not
// verify, so an outcome in hand is always a certificate.
struct ColorerOutcome {
    TotalColoring coloring;
    std::string construction;
    // True when the search fallback had to adjust the constructive output.
    bool repaired = false;

    ColorerOutcome(const Graph& g, TotalColoring c, std::string name, bool repaired_flag,
                   const CheckConfig& cfg = {});
};

// Traceable graphs: 1 color if complete, else 3 colors along a Hamiltonian
// path with the cyclic vertex/edge pattern.
ColorerOutcome color_traceable(const Graph& g);

// Colors join(g, K_1) via BFS layers of a spanning tree of g: layer-parity
// vertex colors, apex colored 3, apex edges by opposite parity, tree edges 3.
// Requires g connected, |g| >= 3, g not complete.
ColorerOutcome color_join_with_k1(const Graph& g);

// Colors join(g, h) for connected factors. Complete joins take one color;
// a trivial factor delegates to the apex construction; otherwise the
// spanning complete bipartite graph is colored and extended.
ColorerOutcome color_join_general(const Graph& g, const Graph& h);

// Verified 3-coloring of K_{m,n}, 2 <= m <= n, found by bounded search and
// cached per (m, n).
ColorerOutcome color_complete_bipartite(int m, int n);

// Cartesian products: both factors traceable (grid path scheme); one factor
// traceable and the other dominated by a spanning star (explicit equations);
// or dominated by a near-star/double-broom tree (trail system by n mod 3).
ColorerOutcome color_cartesian_traceable(const Graph& g, const Graph& h);
ColorerOutcome color_cartesian_star(const Graph& g, const Graph& h);
ColorerOutcome color_cartesian_near_star(const Graph& g, const Graph& h);

// Permutation graphs of traceable graphs: cyclic coloring of both copies'
// Hamiltonian paths with copied cross-edge colors.
ColorerOutcome color_permutation_traceable(const Graph& g, const Permutation& alpha);

enum class StarPermutationVariant { Identity, Transposition01 };

// The two nonisomorphic permutation graphs of a star: the identity variant
// delegates to the cartesian star scheme; the transposition variant applies
// three explicit color classes.
ColorerOutcome color_permutation_star(int leaves, StarPermutationVariant variant);

// Lexicographic products with connected nontrivial g: root-path coloring of
// two layers of a pendant-rooted spanning tree plus special edges at the
// root, its neighbor and one further anchor. K_2 factors delegate to the
// spanning complete bipartite graph. Complete products are rejected.
ColorerOutcome color_lexicographic(const Graph& g, const Graph& h);

// Strong products of connected nontrivial factors: period-three trails
// through both spanning trees, parent-edge copies, and noncartesian edges
// colored away from their endpoints. Complete products take one color.
ColorerOutcome color_strong(const Graph& g, const Graph& h);

// Trees of order >= 3: verified coloring with maxdegree + 1 colors, found by
// bounded search.
ColorerOutcome color_tree(const Graph& t);

// Deterministic bounded search for a k-coloring that passes the checker.
// With a seed, candidates are tried in increasing Hamming distance from it.
// Absence within the budget is a value, not an error.
std::optional<TotalColoring> search_coloring(const Graph& g, int k,
                                             const std::optional<TotalColoring>& seed = {},
                                             long long budget = 100'000'000);

}  // namespace tpc
