#include "iwip/folding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace iwip {

namespace {

class Folder {
 public:
  explicit Folder(std::size_t vertex_count)
      : parent_(vertex_count), size_(vertex_count, 1), table_(vertex_count) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(const LabeledEdge& e) {
    add_half(e.from, e.label, e.to);
    add_half(e.to, e.label ^ 1, e.from);
    drain();
  }

  const std::map<std::size_t, std::size_t>& table(std::size_t root) const {
    return table_[root];
  }

 private:
  void add_half(std::size_t from, std::size_t label, std::size_t to) {
    from = find(from);
    auto [it, inserted] = table_[from].try_emplace(label, to);
    if (!inserted) pending_.emplace_back(it->second, to);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      merge(x, y);
    }
  }

  void merge(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    auto moved = std::move(table_[y]);
    table_[y].clear();
    for (const auto& [label, target] : moved) add_half(x, label, target);
  }

  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::map<std::size_t, std::size_t>> table_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
};

// Renumbers the vertices reachable from `basepoint` breadth-first; edges
// are emitted sorted by (from, label).
FoldedGraph canonicalize(std::size_t vertex_count, std::size_t basepoint,
                         const std::vector<LabeledEdge>& edges) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertex_count);
  for (const auto& e : edges) {
    adj[e.from].emplace_back(e.label, e.to);
    adj[e.to].emplace_back(e.label ^ 1, e.from);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::size_t> order(vertex_count, FoldedGraph::npos);
  std::deque<std::size_t> queue{basepoint};
  order[basepoint] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [label, w] : adj[v]) {
      if (order[w] == FoldedGraph::npos) {
        order[w] = next++;
        queue.push_back(w);
      }
    }
  }

  FoldedGraph out;
  out.vertex_count = next;
  out.basepoint = 0;
  for (const auto& e : edges) {
    if (order[e.from] == FoldedGraph::npos) continue;
    LabeledEdge r{order[e.from], order[e.to], e.label};
    if (r.label % 2) r = {r.to, r.from, r.label ^ 1};
    out.edges.push_back(r);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> FoldedGraph::outgoing(std::size_t label_count) const {
  std::vector<std::vector<std::size_t>> out(vertex_count,
                                            std::vector<std::size_t>(label_count, npos));
  for (const auto& e : edges) {
    out[e.from][e.label] = e.to;
    out[e.to][e.label ^ 1] = e.from;
  }
  return out;
}

std::vector<std::size_t> FoldedGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const auto& e : edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  return deg;
}

FoldedGraph fold(std::size_t vertex_count, const std::vector<LabeledEdge>& edges,
                 std::size_t basepoint) {
  Folder folder(vertex_count);
  for (const auto& e : edges) folder.add_edge(e);

  std::vector<LabeledEdge> folded;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (folder.find(v) != v) continue;
    for (const auto& [label, target] : folder.table(v)) {
      if (label % 2 == 0) folded.push_back({v, folder.find(target), label});
    }
  }
  return canonicalize(vertex_count, folder.find(basepoint), folded);
}

FoldedGraph trim(const FoldedGraph& graph, bool keep_basepoint) {
  std::vector<bool> alive_edge(graph.edges.size(), true);
  std::vector<bool> alive_vertex(graph.vertex_count, true);
  auto deg = graph.degrees();
  std::vector<std::vector<std::size_t>> incident(graph.vertex_count);
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    incident[graph.edges[i].from].push_back(i);
    incident[graph.edges[i].to].push_back(i);
  }

  std::deque<std::size_t> queue;
  auto removable = [&](std::size_t v) {
    return alive_vertex[v] && deg[v] <= 1 && !(keep_basepoint && v == graph.basepoint);
  };
  for (std::size_t v = 0; v < graph.vertex_count; ++v)
    if (removable(v)) queue.push_back(v);

  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (!removable(v)) continue;
    alive_vertex[v] = false;
    for (std::size_t i : incident[v]) {
      if (!alive_edge[i]) continue;
      alive_edge[i] = false;
      const auto& e = graph.edges[i];
      std::size_t other = e.from == v ? e.to : e.from;
      --deg[other];
      --deg[v];
      if (removable(other)) queue.push_back(other);
    }
  }

  std::vector<LabeledEdge> kept;
  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    if (alive_edge[i]) kept.push_back(graph.edges[i]);

  std::size_t base = graph.basepoint;
  if (!alive_vertex[base]) {
    base = FoldedGraph::npos;
    for (std::size_t v = 0; v < graph.vertex_count; ++v)
      if (alive_vertex[v]) {
        base = v;
        break;
      }
  }
  if (base == FoldedGraph::npos) return FoldedGraph{};
  return canonicalize(graph.vertex_count, base, kept);
}

}  // namespace iwip
