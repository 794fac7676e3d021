#include "iwip/graphs.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "iwip/error.hpp"

namespace iwip {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::string> names)
    : vertex_count_(vertex_count), edges_(std::move(edges)), names_(std::move(names)) {
  if (vertex_count_ == 0) throw InputError("graph needs at least one vertex");
  for (const auto& [a, b] : edges_)
    if (a >= vertex_count_ || b >= vertex_count_)
      throw InputError("edge endpoint out of range");
  if (names_.size() > edges_.size()) throw InputError("more edge names than edges");
  for (std::size_t k = names_.size(); k < edges_.size(); ++k) names_.push_back(generator_name(k));
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty edge name");
    if (!seen.insert(n).second) throw InputError("duplicate edge name '" + n + "'");
  }
}

Graph Graph::rose(std::size_t rank) {
  return Graph(1, std::vector<std::pair<std::size_t, std::size_t>>(rank, {0, 0}));
}

std::size_t Graph::origin(OrientedEdge e) const {
  const auto& [a, b] = edges_.at(e.index());
  return e.is_forward() ? a : b;
}

std::size_t Graph::terminus(OrientedEdge e) const {
  const auto& [a, b] = edges_.at(e.index());
  return e.is_forward() ? b : a;
}

std::string Graph::name(OrientedEdge e) const {
  return names_.at(e.index()) + (e.is_forward() ? "" : "^-1");
}

std::optional<std::size_t> Graph::find_edge(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

std::vector<OrientedEdge> Graph::edges_at(std::size_t v) const {
  std::vector<OrientedEdge> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].first == v) out.push_back(OrientedEdge::forward(k));
    if (edges_[k].second == v) out.push_back(OrientedEdge::backward(k));
  }
  return out;
}

std::vector<OrientedEdge> Graph::all_oriented_edges() const {
  std::vector<OrientedEdge> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out.push_back(OrientedEdge::forward(k));
    out.push_back(OrientedEdge::backward(k));
  }
  return out;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::size_t Graph::component_count() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count_;
  for (const auto& [a, b] : edges_) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

bool Graph::is_connected() const { return component_count() == 1; }

std::size_t Graph::betti_number() const {
  return edges_.size() + component_count() - vertex_count_;
}

EdgePath EdgePath::inverse(const Graph& g) const {
  EdgePath out{finish(g), {}};
  out.edges.reserve(edges.size());
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) out.edges.push_back(it->inverse());
  return out;
}

void validate_path(const Graph& g, const EdgePath& p) {
  if (p.start >= g.vertex_count()) throw InputError("path starts at an invalid vertex");
  std::size_t at = p.start;
  for (OrientedEdge e : p.edges) {
    if (e.index() >= g.edge_count()) throw InputError("path uses an invalid edge");
    if (g.origin(e) != at)
      throw InputError("edge " + g.name(e) + " does not start where the path is");
    at = g.terminus(e);
  }
}

bool is_tight(const EdgePath& p) {
  for (std::size_t i = 1; i < p.edges.size(); ++i)
    if (p.edges[i] == p.edges[i - 1].inverse()) return false;
  return true;
}

EdgePath tighten(const Graph& g, const EdgePath& p) {
  validate_path(g, p);
  EdgePath out{p.start, {}};
  out.edges.reserve(p.edges.size());
  for (OrientedEdge e : p.edges) {
    if (!out.edges.empty() && out.edges.back() == e.inverse())
      out.edges.pop_back();
    else
      out.edges.push_back(e);
  }
  return out;
}

std::string path_to_string(const Graph& g, const EdgePath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += g.name(p.edges[i]);
  }
  return out;
}

EdgePath parse_path(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  EdgePath p;
  while (in >> token) {
    bool inverse = false;
    if (token.size() > 3 && token.ends_with("^-1")) {
      inverse = true;
      token.resize(token.size() - 3);
    }
    auto k = g.find_edge(token);
    if (!k) throw InputError("unknown edge '" + token + "'");
    p.edges.push_back(inverse ? OrientedEdge::backward(*k) : OrientedEdge::forward(*k));
  }
  if (p.edges.empty()) throw InputError("empty edge path");
  p.start = g.origin(p.edges.front());
  validate_path(g, p);
  return p;
}

std::set<Turn> turns_in_path(const EdgePath& p) {
  std::set<Turn> out;
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
    out.insert(Turn::make(p.edges[i].inverse(), p.edges[i + 1]));
  return out;
}

GraphMap::GraphMap(Graph domain, std::vector<std::size_t> vertex_images,
                   std::vector<EdgePath> edge_images)
    : graph_(std::move(domain)),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)) {
  if (vertex_images_.size() != graph_.vertex_count())
    throw InputError("vertex map has the wrong size");
  if (edge_images_.size() != graph_.edge_count())
    throw InputError("edge map has the wrong size");
  for (std::size_t v : vertex_images_)
    if (v >= graph_.vertex_count()) throw InputError("vertex image out of range");
  for (std::size_t k = 0; k < graph_.edge_count(); ++k) {
    const EdgePath& img = edge_images_[k];
    const std::string& name = graph_.edge_name(k);
    if (img.empty()) throw InputError("image of edge " + name + " is empty");
    validate_path(graph_, img);
    if (!is_tight(img)) throw InputError("image of edge " + name + " is not tight");
    const auto& [a, b] = graph_.edges()[k];
    if (img.start != vertex_images_[a] || img.finish(graph_) != vertex_images_[b])
      throw InputError("image of edge " + name + " does not match the vertex map");
  }
}

EdgePath GraphMap::image(OrientedEdge e) const {
  const EdgePath& p = edge_images_.at(e.index());
  return e.is_forward() ? p : p.inverse(graph_);
}

EdgePath concatenate_images(const GraphMap& f, const EdgePath& p) {
  const Graph& g = f.graph();
  validate_path(g, p);
  EdgePath out{f.vertex_image(p.start), {}};
  for (OrientedEdge e : p.edges) {
    const EdgePath& img = f.edge_images()[e.index()];
    if (e.is_forward())
      out.edges.insert(out.edges.end(), img.edges.begin(), img.edges.end());
    else
      for (auto it = img.edges.rbegin(); it != img.edges.rend(); ++it)
        out.edges.push_back(it->inverse());
  }
  return out;
}

EdgePath map_path(const GraphMap& f, const EdgePath& p) {
  return tighten(f.graph(), concatenate_images(f, p));
}

Iteration iterate_edge(const GraphMap& f, OrientedEdge e, unsigned n, std::size_t length_cap) {
  if (n == 0) throw InputError("iteration count must be at least 1");
  const Graph& g = f.graph();
  Iteration it{EdgePath{g.origin(e), {e}}, 0, false};
  for (unsigned step = 0; step < n; ++step) {
    std::size_t raw = 0;
    for (OrientedEdge x : it.path.edges) raw += f.image_length(x.index());
    if (raw > length_cap) {
      it.truncated = true;
      return it;
    }
    it.path = map_path(f, it.path);
    ++it.steps;
  }
  return it;
}

OrientedEdge derivative(const GraphMap& f, OrientedEdge e) {
  const EdgePath& p = f.edge_images().at(e.index());
  return e.is_forward() ? p.edges.front() : p.edges.back().inverse();
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  if (!(outer.graph() == inner.graph())) throw InputError("composition of maps on different graphs");
  const Graph& g = inner.graph();
  std::vector<std::size_t> vertices(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vertices[v] = outer.vertex_image(inner.vertex_image(v));
  std::vector<EdgePath> images;
  images.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    images.push_back(map_path(outer, inner.edge_images()[k]));
  return GraphMap(g, std::move(vertices), std::move(images));
}

GraphMap identity_map(const Graph& g) {
  std::vector<std::size_t> vertices(g.vertex_count());
  std::iota(vertices.begin(), vertices.end(), std::size_t{0});
  std::vector<EdgePath> images;
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    images.push_back({g.edges()[k].first, {OrientedEdge::forward(k)}});
  return GraphMap(g, std::move(vertices), std::move(images));
}

GraphMap power(const GraphMap& f, unsigned exponent) {
  GraphMap result = identity_map(f.graph());
  for (unsigned i = 0; i < exponent; ++i) result = compose(f, result);
  return result;
}

EdgePath SpanningTree::path_from_root(const Graph& g, std::size_t v) const {
  std::vector<OrientedEdge> reversed;
  while (v != root) {
    OrientedEdge e = *parent_edge.at(v);
    reversed.push_back(e);
    v = g.origin(e);
  }
  return {root, {reversed.rbegin(), reversed.rend()}};
}

SpanningTree spanning_tree(const Graph& g, std::size_t root) {
  SpanningTree tree;
  tree.root = root;
  tree.parent_edge.assign(g.vertex_count(), std::nullopt);
  tree.in_tree.assign(g.edge_count(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (OrientedEdge e : g.edges_at(v)) {
      std::size_t w = g.terminus(e);
      if (seen[w]) continue;
      seen[w] = true;
      tree.parent_edge[w] = e;
      tree.in_tree[e.index()] = true;
      queue.push_back(w);
    }
  }
  return tree;
}

Word loop_to_word(const Graph& g, const SpanningTree& tree,
                  const std::vector<std::size_t>& generator_edges, const EdgePath& loop) {
  (void)g;
  std::vector<std::size_t> slot(tree.in_tree.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < generator_edges.size(); ++i) slot[generator_edges[i]] = i;
  std::vector<Letter> letters;
  for (OrientedEdge e : loop.edges) {
    if (tree.in_tree[e.index()]) continue;
    std::size_t s = slot[e.index()];
    if (s == static_cast<std::size_t>(-1)) throw InputError("loop leaves the subgraph");
    letters.push_back({s, e.is_forward() ? 1 : -1});
  }
  return Word::reduce(generator_edges.size(), letters);
}

InducedEndomorphism induced_endomorphism(const GraphMap& f, std::size_t basepoint) {
  const Graph& g = f.graph();
  if (!g.is_connected()) throw InputError("graph is not connected");
  SpanningTree tree = spanning_tree(g, basepoint);
  InducedEndomorphism out;
  out.basepoint = basepoint;
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (!tree.in_tree[k]) out.generator_edges.push_back(k);

  EdgePath to_image = tree.path_from_root(g, f.vertex_image(basepoint));
  EdgePath from_image = to_image.inverse(g);
  for (std::size_t k : out.generator_edges) {
    OrientedEdge e = OrientedEdge::forward(k);
    EdgePath loop = tree.path_from_root(g, g.origin(e));
    loop.edges.push_back(e);
    EdgePath back = tree.path_from_root(g, g.terminus(e)).inverse(g);
    loop.edges.insert(loop.edges.end(), back.edges.begin(), back.edges.end());

    EdgePath image = concatenate_images(f, loop);
    EdgePath transported{basepoint, to_image.edges};
    transported.edges.insert(transported.edges.end(), image.edges.begin(), image.edges.end());
    transported.edges.insert(transported.edges.end(), from_image.edges.begin(),
                             from_image.edges.end());
    out.images.push_back(loop_to_word(g, tree, out.generator_edges, transported));
  }
  return out;
}

bool is_homotopy_equivalence(const GraphMap& f) {
  InducedEndomorphism ind = induced_endomorphism(f, 0);
  return generates_whole_group(ind.images, ind.generator_edges.size());
}

TopologicalRepresentative rose_representative(const Automorphism& phi) {
  Graph rose = Graph::rose(phi.rank());
  std::vector<EdgePath> images;
  for (const Word& w : phi.images()) {
    if (w.empty()) throw InputError("trivial generator image cannot define a graph-map");
    EdgePath p{0, {}};
    for (Letter l : w.letters()) p.edges.push_back(OrientedEdge::from_letter(l));
    images.push_back(std::move(p));
  }
  TopologicalRepresentative rep;
  rep.map = GraphMap(rose, {0}, std::move(images));
  rep.marking = Marking::Rose;
  rep.min_degree_3 = 2 * phi.rank() >= 3;
  rep.automorphism = phi;
  return rep;
}

TopologicalRepresentative claimed_representative(GraphMap f) {
  const Graph& g = f.graph();
  if (!g.is_connected()) throw InputError("representative graph must be connected");
  if (!is_homotopy_equivalence(f)) throw InputError("graph-map is not a homotopy equivalence");
  TopologicalRepresentative rep;
  rep.min_degree_3 = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 3) rep.min_degree_3 = false;
  rep.map = std::move(f);
  rep.marking = Marking::Claimed;
  return rep;
}

}  // namespace iwip
