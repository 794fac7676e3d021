#include "iwip/whitehead.hpp"

#include <algorithm>
#include <numeric>

#include "iwip/error.hpp"

namespace iwip {

std::vector<std::vector<OrientedEdge>> WhiteheadGraph::components() const {
  const std::size_t n = nodes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto slot = [&](OrientedEdge e) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), e) - nodes.begin());
  };
  for (const auto& [turn, witness] : adjacencies) {
    auto a = find(slot(turn.first)), b = find(slot(turn.second));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<OrientedEdge>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(nodes[i]);
  std::vector<std::vector<OrientedEdge>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

bool WhiteheadGraph::connected() const { return components().size() <= 1; }

WhiteheadGraph whitehead_graph(const GraphMap& f, std::size_t vertex, const TurnClosure& closure) {
  if (!is_train_track(closure))
    throw PreconditionError("Whitehead graphs are defined only for train-track maps");
  const Graph& g = f.graph();
  if (vertex >= g.vertex_count()) throw InputError("vertex out of range");
  WhiteheadGraph wh;
  wh.vertex = vertex;
  wh.nodes = g.edges_at(vertex);
  std::sort(wh.nodes.begin(), wh.nodes.end());
  for (const auto& [turn, witness] : closure.taken) {
    if (turn.degenerate() || g.origin(turn.first) != vertex) continue;
    wh.adjacencies.emplace(turn, witness);
  }
  return wh;
}

WhiteheadGraph whitehead_graph(const GraphMap& f, std::size_t vertex) {
  return whitehead_graph(f, vertex, taken_turn_closure(f));
}

std::vector<WhiteheadGraph> whitehead_graphs(const GraphMap& f, const TurnClosure& closure) {
  std::vector<WhiteheadGraph> out;
  for (std::size_t v = 0; v < f.graph().vertex_count(); ++v)
    out.push_back(whitehead_graph(f, v, closure));
  return out;
}

CleanReport is_clean(const GraphMap& f) {
  TurnClosure closure = taken_turn_closure(f);
  if (!is_train_track(closure))
    throw PreconditionError("cleanliness is defined only for train-track maps");
  CleanReport report;
  report.is_train_track = true;
  report.irreducible = is_irreducible(transition_matrix(f));
  report.expanding = is_expanding(f).expanding;
  report.primitive_exponent = primitive_exponent(f).exponent;
  bool all_connected = true;
  for (const auto& wh : whitehead_graphs(f, closure)) {
    report.whitehead_connected.push_back(wh.connected());
    all_connected = all_connected && wh.connected();
  }
  report.clean = report.primitive_exponent.has_value() && all_connected;
  report.weakly_clean = report.irreducible && report.expanding && all_connected;
  return report;
}

bool is_weakly_clean(const GraphMap& f) { return is_clean(f).weakly_clean; }

}  // namespace iwip
