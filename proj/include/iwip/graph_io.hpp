#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "iwip/graphs.hpp"
#include "iwip/subgroups.hpp"

namespace iwip {

// Graph-map files:
//   {"vertices": 1,
//    "edges": [["a", 0, 0], ["b", 0, 0]],
//    "vertex_map": [0],
//    "images": ["a -> b", "b -> a b"]}
// Every edge has exactly one image line; images are tight paths.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json graph_map_to_json(const GraphMap& f);
GraphMap graph_map_from_json(const nlohmann::json& j);

// Canonical two-space-indented text; parse(print(f)) == f.
std::string print_graph_map(const GraphMap& f);
GraphMap parse_graph_map(std::string_view text);

// Core graphs: {"base": <graph>, "vertices": k,
//               "edges": [["e0", from, to, "label"], ...]}
nlohmann::json core_to_json(const CoreGraph& core);
CoreGraph core_from_json(const nlohmann::json& j);

// Throws ParseError with line and column for malformed JSON.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace iwip
