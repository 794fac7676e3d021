#include "iwip/blowup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "iwip/error.hpp"

namespace iwip {

namespace {

std::string unused_name(const std::set<std::string>& taken, std::string name) {
  while (taken.count(name)) name += '_';
  return name;
}

}  // namespace

BlowUp blow_up(const GraphMap& f) {
  const Graph& g = f.graph();
  TurnClosure closure = taken_turn_closure(f);
  if (!is_train_track(closure)) throw PreconditionError("blow-up requires a train-track map");
  if (!is_expanding(f).expanding) throw PreconditionError("blow-up requires an expanding map");

  BlowUp b;
  b.base = f;
  std::vector<std::size_t> sub_of(2 * g.edge_count());  // oriented edge code -> sub-vertex
  std::size_t next_vertex = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    BlownVertex bv;
    bv.center = next_vertex++;
    b.collapse.push_back(v);
    bv.components = whitehead_graph(f, v, closure).components();
    for (const auto& component : bv.components) {
      bv.sub_vertices.push_back(next_vertex++);
      b.collapse.push_back(v);
      for (OrientedEdge e : component) sub_of[e.code()] = bv.sub_vertices.back();
    }
    b.vertices.push_back(std::move(bv));
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> names = g.names();
  std::set<std::string> taken(names.begin(), names.end());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    edges.emplace_back(sub_of[OrientedEdge::forward(k).code()],
                       sub_of[OrientedEdge::backward(k).code()]);
    b.delta_edges.push_back(k);
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    BlownVertex& bv = b.vertices[v];
    for (std::size_t i = 0; i < bv.sub_vertices.size(); ++i) {
      bv.sub_edges.push_back(edges.size());
      edges.emplace_back(bv.center, bv.sub_vertices[i]);
      std::string name = unused_name(taken, "s" + std::to_string(v) + "_" + std::to_string(i));
      taken.insert(name);
      names.push_back(name);
    }
  }
  Graph blown_graph(next_vertex, edges, names);

  // f' on vertices: centers follow f; a sub-vertex goes to the sub-vertex
  // holding Df of any edge in its component.
  std::vector<std::size_t> vertex_images(next_vertex);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const BlownVertex& bv = b.vertices[v];
    vertex_images[bv.center] = b.vertices[f.vertex_image(v)].center;
    for (std::size_t i = 0; i < bv.sub_vertices.size(); ++i) {
      std::optional<std::size_t> target;
      for (OrientedEdge e : bv.components[i]) {
        std::size_t t = sub_of[derivative(f, e).code()];
        if (target && *target != t)
          throw InternalError("derivative does not respect Whitehead components");
        target = t;
      }
      vertex_images[bv.sub_vertices[i]] = *target;
    }
  }

  std::vector<EdgePath> edge_images;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    EdgePath p = f.edge_images()[k];
    p.start = vertex_images[edges[k].first];
    edge_images.push_back(std::move(p));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const BlownVertex& bv = b.vertices[v];
    const BlownVertex& target = b.vertices[f.vertex_image(v)];
    for (std::size_t i = 0; i < bv.sub_vertices.size(); ++i) {
      std::size_t sub = vertex_images[bv.sub_vertices[i]];
      auto pos = std::find(target.sub_vertices.begin(), target.sub_vertices.end(), sub);
      std::size_t edge = target.sub_edges[static_cast<std::size_t>(pos - target.sub_vertices.begin())];
      edge_images.push_back({target.center, {OrientedEdge::forward(edge)}});
    }
  }
  b.blown = GraphMap(blown_graph, std::move(vertex_images), std::move(edge_images));
  for (std::size_t v = 0; v < next_vertex; ++v)
    if (blown_graph.degree(v) < 3) b.low_degree_vertices.push_back(v);
  return b;
}

GraphMap contract_sub_edges(const BlowUp& b) {
  const Graph& g = b.base.graph();
  std::vector<std::size_t> vertex_images(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vertex_images[v] = b.collapse[b.blown.vertex_image(b.vertices[v].center)];
  std::vector<EdgePath> edge_images;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    EdgePath p = b.blown.edge_images()[k];
    for (OrientedEdge e : p.edges)
      if (e.index() >= g.edge_count()) throw InternalError("base edge image uses a sub-edge");
    p.start = b.collapse[p.start];
    edge_images.push_back(std::move(p));
  }
  return GraphMap(g, std::move(vertex_images), std::move(edge_images));
}

std::string to_string(ReductionProvenance p) {
  switch (p) {
    case ReductionProvenance::InvariantSubgraph: return "invariant-subgraph";
    case ReductionProvenance::InvariantSubgraphOfPower: return "invariant-subgraph-of-power";
    case ReductionProvenance::BlowUp: return "blow-up";
  }
  return "unknown";
}

std::string ReductionCheck::failed_check() const {
  if (!invariant) return "invariant";
  if (!nontrivial) return "homotopically-nontrivial";
  if (!not_homotopy_equivalence) return "inclusion-not-homotopy-equivalence";
  return {};
}

ReductionCheck verify_reduction(const GraphMap& f, std::vector<std::size_t> edges) {
  const Graph& g = f.graph();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  ReductionCheck check;
  check.edges = edges;
  check.graph_betti = g.betti_number();

  std::vector<bool> in_delta(g.edge_count(), false);
  for (std::size_t k : edges) {
    if (k >= g.edge_count()) throw InputError("subgraph edge out of range");
    in_delta[k] = true;
  }

  check.invariant = true;
  for (std::size_t k : edges)
    for (OrientedEdge e : f.edge_images()[k].edges)
      if (!in_delta[e.index()]) check.invariant = false;

  std::vector<bool> in_vertex(g.vertex_count(), false);
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t vertex_count = 0, merges = 0;
  for (std::size_t k : edges) {
    auto [a, c] = g.edges()[k];
    for (std::size_t v : {a, c})
      if (!in_vertex[v]) {
        in_vertex[v] = true;
        ++vertex_count;
      }
    auto ra = find(a), rc = find(c);
    if (ra != rc) {
      parent[ra] = rc;
      ++merges;
    }
  }
  check.components = vertex_count - merges;
  check.subgraph_betti = edges.size() + check.components - vertex_count;
  check.nontrivial = check.subgraph_betti > 0;

  if (check.components == 1 && check.subgraph_betti == check.graph_betti) {
    // Express a basis of pi_1(D) in a basis of pi_1(G) at a common root.
    std::size_t root = g.edges()[edges.front()].first;
    std::vector<std::optional<OrientedEdge>> via(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false), tree_edge(g.edge_count(), false);
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (OrientedEdge e : g.edges_at(v)) {
        if (!in_delta[e.index()] || seen[g.terminus(e)]) continue;
        seen[g.terminus(e)] = true;
        via[g.terminus(e)] = e;
        tree_edge[e.index()] = true;
        queue.push_back(g.terminus(e));
      }
    }
    auto path_to = [&](std::size_t v) {
      std::vector<OrientedEdge> rev;
      while (v != root) {
        rev.push_back(*via[v]);
        v = g.origin(*via[v]);
      }
      return std::vector<OrientedEdge>(rev.rbegin(), rev.rend());
    };
    SpanningTree big = spanning_tree(g, root);
    std::vector<std::size_t> big_generators;
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      if (!big.in_tree[k]) big_generators.push_back(k);
    std::vector<Word> words;
    for (std::size_t k : edges) {
      if (tree_edge[k]) continue;
      OrientedEdge e = OrientedEdge::forward(k);
      EdgePath loop{root, path_to(g.origin(e))};
      loop.edges.push_back(e);
      EdgePath back{root, path_to(g.terminus(e))};
      back = back.inverse(g);
      loop.edges.insert(loop.edges.end(), back.edges.begin(), back.edges.end());
      words.push_back(loop_to_word(g, big, big_generators, loop));
    }
    check.pi1_surjective = generates_whole_group(words, big_generators.size());
    check.not_homotopy_equivalence = !check.pi1_surjective;
  } else {
    check.not_homotopy_equivalence = true;
  }
  return check;
}

std::optional<ReductionWitness> invariant_subgraph_witness(const GraphMap& f) {
  const Graph& g = f.graph();
  std::set<std::vector<std::size_t>> tried;
  for (std::size_t seed = 0; seed < g.edge_count(); ++seed) {
    std::vector<bool> in(g.edge_count(), false);
    std::deque<std::size_t> queue{seed};
    in[seed] = true;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (OrientedEdge e : f.edge_images()[k].edges)
        if (!in[e.index()]) {
          in[e.index()] = true;
          queue.push_back(e.index());
        }
    }
    std::vector<std::size_t> edges;
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      if (in[k]) edges.push_back(k);
    if (edges.size() == g.edge_count() || !tried.insert(edges).second) continue;
    ReductionCheck check = verify_reduction(f, edges);
    if (check.passed())
      return ReductionWitness{ReductionProvenance::InvariantSubgraph, 1, f, std::move(check)};
  }
  return std::nullopt;
}

}  // namespace iwip
