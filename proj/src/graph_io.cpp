#include "iwip/graph_io.hpp"

#include <algorithm>
#include <cctype>

#include "iwip/error.hpp"

namespace iwip {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::string trim_spaces(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    edges.push_back({g.edge_name(k), g.edges()[k].first, g.edges()[k].second});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::size_t vertices = as_index(field(j, "vertices"), "\"vertices\"");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<std::string> names;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() < 3) throw InputError("each edge must be [name, from, to, ...]");
    names.push_back(as_string(e[0], "edge name"));
    ends.emplace_back(as_index(e[1], "edge origin"), as_index(e[2], "edge terminus"));
  }
  return Graph(vertices, std::move(ends), std::move(names));
}

json graph_map_to_json(const GraphMap& f) {
  const Graph& g = f.graph();
  json j = graph_to_json(g);
  j["vertex_map"] = f.vertex_images();
  json images = json::array();
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    images.push_back(g.edge_name(k) + " -> " + path_to_string(g, f.edge_images()[k]));
  j["images"] = images;
  return j;
}

GraphMap graph_map_from_json(const json& j) {
  Graph g = graph_from_json(j);
  const json& vmap = field(j, "vertex_map");
  if (!vmap.is_array() || vmap.size() != g.vertex_count())
    throw InputError("\"vertex_map\" must list one image per vertex");
  std::vector<std::size_t> vertex_images;
  for (const json& v : vmap) vertex_images.push_back(as_index(v, "vertex image"));

  const json& images = field(j, "images");
  if (!images.is_array()) throw InputError("\"images\" must be an array");
  std::vector<std::optional<EdgePath>> slots(g.edge_count());
  for (const json& line : images) {
    std::string text = as_string(line, "image line");
    auto arrow = text.find("->");
    if (arrow == std::string::npos) throw InputError("image line \"" + text + "\" has no \"->\"");
    std::string name = trim_spaces(text.substr(0, arrow));
    auto index = g.find_edge(name);
    if (!index) throw InputError("image given for unknown edge \"" + name + "\"");
    if (slots[*index]) throw InputError("edge \"" + name + "\" has two images");
    slots[*index] = parse_path(g, trim_spaces(text.substr(arrow + 2)));
  }
  std::vector<EdgePath> edge_images;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!slots[k]) throw InputError("edge \"" + g.edge_name(k) + "\" has no image");
    edge_images.push_back(std::move(*slots[k]));
  }
  return GraphMap(std::move(g), std::move(vertex_images), std::move(edge_images));
}

std::string print_graph_map(const GraphMap& f) { return graph_map_to_json(f).dump(2) + "\n"; }

GraphMap parse_graph_map(std::string_view text) { return graph_map_from_json(parse_json_text(text)); }

json core_to_json(const CoreGraph& core) {
  json edges = json::array();
  for (std::size_t i = 0; i < core.edges.size(); ++i) {
    const CoreEdge& e = core.edges[i];
    edges.push_back({"e" + std::to_string(i), e.from, e.to, core.base.name(e.label)});
  }
  return {{"base", graph_to_json(core.base)}, {"vertices", core.vertex_count}, {"edges", edges}};
}

CoreGraph core_from_json(const json& j) {
  CoreGraph core;
  core.base = graph_from_json(field(j, "base"));
  core.vertex_count = as_index(field(j, "vertices"), "\"vertices\"");
  core.projection.assign(core.vertex_count, CoreGraph::npos);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 4) throw InputError("core edges are [name, from, to, label]");
    std::size_t from = as_index(e[1], "edge origin"), to = as_index(e[2], "edge terminus");
    if (from >= core.vertex_count || to >= core.vertex_count)
      throw InputError("core edge endpoint out of range");
    EdgePath label = parse_path(core.base, as_string(e[3], "edge label"));
    if (label.size() != 1) throw InputError("core edge label must be a single base edge");
    OrientedEdge l = label.edges.front();
    if (!l.is_forward()) {
      std::swap(from, to);
      l = l.inverse();
    }
    for (auto [v, b] : {std::pair{from, core.base.origin(l)}, std::pair{to, core.base.terminus(l)}}) {
      if (core.projection[v] != CoreGraph::npos && core.projection[v] != b)
        throw InputError("core edge labels disagree on a vertex's base image");
      core.projection[v] = b;
    }
    core.edges.push_back({from, to, l});
  }
  for (std::size_t p : core.projection)
    if (p == CoreGraph::npos) throw InputError("core vertex without edges");
  auto out = std::vector<std::vector<int>>(core.vertex_count,
                                           std::vector<int>(2 * core.base.edge_count(), 0));
  for (const auto& e : core.edges)
    if (out[e.from][e.label.code()]++ || out[e.to][e.label.inverse().code()]++)
      throw InputError("core graph is not an immersion");
  return core;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw ParseError(colon == std::string::npos ? what : what.substr(colon + 2), line, column);
  }
}

}  // namespace iwip
