#pragma once

#include <iosfwd>

#include <json.hpp>

#include "tpc/checker.hpp"
#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"
#include "tpc/ops.hpp"
#include "tpc/oracle.hpp"

namespace tpc {

// Graph JSON: {"n": <int>, "edges": [[u,v], ...]} with u < v normalized.
nlohmann::json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Coloring JSON: {"k": <int>, "vertex_colors": [..], "edge_colors": {"u-v": c}}.
nlohmann::json coloring_json(const Graph& g, const TotalColoring& c);
TotalColoring coloring_from_json(const nlohmann::json& j);

// Composite JSON for graph operations: the product graph plus a label-map
// sidecar that embeds the factors (and the permutation, when relevant).
nlohmann::json product_json(const ProductResult& p);
ProductResult product_from_json(const nlohmann::json& j);
nlohmann::json label_map_json(const ProductResult& p);

nlohmann::json report_json(const CheckReport& r);
// Timing is logged separately; the JSON stays byte-identical across runs.
nlohmann::json tpc_result_json(const Graph& g, const TpcResult& r);
nlohmann::json hunt_json(const HuntResult& h);

std::string flavor_name(PathFlavor f);
PathFlavor flavor_from_name(const std::string& name);

// DOT export; palette colors map to a fixed named-color table.
void write_dot(std::ostream& out, const Graph& g, const TotalColoring* coloring = nullptr);

}  // namespace tpc
