#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iwip/words.hpp"

namespace iwip {

// An oriented edge, stored as a signed index: +(k+1) traverses topological
// edge k forwards, -(k+1) backwards. Inversion is a sign flip.
class OrientedEdge {
 public:
  constexpr OrientedEdge() = default;

  static constexpr OrientedEdge forward(std::size_t index) {
    return OrientedEdge(static_cast<std::int32_t>(index) + 1);
  }
  static constexpr OrientedEdge backward(std::size_t index) {
    return OrientedEdge(-static_cast<std::int32_t>(index) - 1);
  }
  // Inverse of code(): 2k is forward, 2k+1 backward.
  static constexpr OrientedEdge from_code(std::size_t code) {
    return (code % 2) ? backward(code / 2) : forward(code / 2);
  }
  static constexpr OrientedEdge from_letter(Letter l) {
    return l.sign > 0 ? forward(l.generator) : backward(l.generator);
  }

  constexpr std::size_t index() const {
    return static_cast<std::size_t>(value_ > 0 ? value_ - 1 : -value_ - 1);
  }
  constexpr bool is_forward() const { return value_ > 0; }
  constexpr OrientedEdge inverse() const { return OrientedEdge(-value_); }
  constexpr std::size_t code() const { return 2 * index() + (is_forward() ? 0 : 1); }
  constexpr std::int32_t signed_index() const { return value_; }
  constexpr Letter to_letter() const { return {index(), is_forward() ? 1 : -1}; }

  friend constexpr bool operator==(OrientedEdge a, OrientedEdge b) {
    return a.value_ == b.value_;
  }
  // Ordered as e_0, e_0^-1, e_1, e_1^-1, ...
  friend constexpr std::strong_ordering operator<=>(OrientedEdge a, OrientedEdge b) {
    return a.code() <=> b.code();
  }

 private:
  constexpr explicit OrientedEdge(std::int32_t v) : value_(v) {}
  std::int32_t value_ = 1;
};

// An unordered pair of oriented edges with common origin, stored sorted.
struct Turn {
  OrientedEdge first;
  OrientedEdge second;

  static Turn make(OrientedEdge a, OrientedEdge b) {
    return a <= b ? Turn{a, b} : Turn{b, a};
  }
  bool degenerate() const { return first == second; }

  friend bool operator==(const Turn&, const Turn&) = default;
  friend std::strong_ordering operator<=>(const Turn& a, const Turn& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

// A finite graph: vertices 0..n-1 and named topological edges.
class Graph {
 public:
  Graph() = default;
  // Missing names default to a, b, c, ...; throws InputError on bad endpoints
  // or duplicate names.
  Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
        std::vector<std::string> names = {});

  static Graph rose(std::size_t rank);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t origin(OrientedEdge e) const;
  std::size_t terminus(OrientedEdge e) const;
  const std::string& edge_name(std::size_t index) const { return names_[index]; }
  std::string name(OrientedEdge e) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;

  // Oriented edges with origin v, in OrientedEdge order.
  std::vector<OrientedEdge> edges_at(std::size_t v) const;
  std::vector<OrientedEdge> all_oriented_edges() const;
  std::size_t degree(std::size_t v) const;
  bool is_connected() const;
  std::size_t component_count() const;
  // First Betti number: |E| - |V| + #components.
  std::size_t betti_number() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::string> names_;
};

// An edge-path; `edges` may be empty (a vertex).
struct EdgePath {
  std::size_t start = 0;
  std::vector<OrientedEdge> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  std::size_t finish(const Graph& g) const { return edges.empty() ? start : g.terminus(edges.back()); }
  EdgePath inverse(const Graph& g) const;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
  friend auto operator<=>(const EdgePath& a, const EdgePath& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(),
                                                  b.edges.begin(), b.edges.end());
  }
};

// Throws InputError if consecutive edges do not concatenate.
void validate_path(const Graph& g, const EdgePath& p);
bool is_tight(const EdgePath& p);
EdgePath tighten(const Graph& g, const EdgePath& p);
std::string path_to_string(const Graph& g, const EdgePath& p);
// Whitespace-separated edge names with optional ^-1; empty text is invalid.
EdgePath parse_path(const Graph& g, const std::string& text);

// Turns {e_i^-1, e_{i+1}} contained in p.
std::set<Turn> turns_in_path(const EdgePath& p);

// A self-map of a graph sending vertices to vertices and each edge to a
// nonempty tight path.
class GraphMap {
 public:
  GraphMap() = default;
  // `edge_images[k]` is the image of topological edge k traversed forwards.
  GraphMap(Graph domain, std::vector<std::size_t> vertex_images,
           std::vector<EdgePath> edge_images);

  const Graph& graph() const { return graph_; }
  std::size_t vertex_image(std::size_t v) const { return vertex_images_[v]; }
  const std::vector<std::size_t>& vertex_images() const { return vertex_images_; }
  const std::vector<EdgePath>& edge_images() const { return edge_images_; }
  EdgePath image(OrientedEdge e) const;
  std::size_t image_length(std::size_t edge) const { return edge_images_[edge].size(); }

  friend bool operator==(const GraphMap&, const GraphMap&) = default;

 private:
  Graph graph_;
  std::vector<std::size_t> vertex_images_;
  std::vector<EdgePath> edge_images_;
};

// Literal concatenation of edge images (no tightening).
EdgePath concatenate_images(const GraphMap& f, const EdgePath& p);
// Tightened image of a path.
EdgePath map_path(const GraphMap& f, const EdgePath& p);

struct Iteration {
  EdgePath path;
  unsigned steps = 0;  // iterations actually performed
  bool truncated = false;
};

inline constexpr std::size_t kDefaultLengthCap = 1'000'000;

// Tightened f^n(e); stops early and sets `truncated` if an intermediate
// path would exceed `length_cap` edges.
Iteration iterate_edge(const GraphMap& f, OrientedEdge e, unsigned n,
                       std::size_t length_cap = kDefaultLengthCap);

// Initial edge of f(e).
OrientedEdge derivative(const GraphMap& f, OrientedEdge e);

// compose(outer, inner) = outer o inner, images tightened.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);
GraphMap power(const GraphMap& f, unsigned exponent);
GraphMap identity_map(const Graph& g);

struct SpanningTree {
  std::size_t root = 0;
  // Edge entering each non-root vertex from its parent (none for root).
  std::vector<std::optional<OrientedEdge>> parent_edge;
  std::vector<bool> in_tree;  // per topological edge

  // Tree path from the root to v.
  EdgePath path_from_root(const Graph& g, std::size_t v) const;
};

// Breadth-first from `root`, scanning edges in OrientedEdge order.
SpanningTree spanning_tree(const Graph& g, std::size_t root);

struct InducedEndomorphism {
  std::size_t basepoint = 0;
  // Free basis of pi_1(graph, basepoint): one generator per non-tree edge.
  std::vector<std::size_t> generator_edges;
  std::vector<Word> images;
};

// Images of the free basis under f, written in the same basis, transported
// back to the basepoint along the tree.
InducedEndomorphism induced_endomorphism(const GraphMap& f, std::size_t basepoint = 0);

// Expresses a loop at the tree root as a word in the non-tree edges.
Word loop_to_word(const Graph& g, const SpanningTree& tree,
                  const std::vector<std::size_t>& generator_edges, const EdgePath& loop);

bool is_homotopy_equivalence(const GraphMap& f);

enum class Marking {
  Rose,     // identity marking of the rose
  Claimed,  // user-supplied map; the represented outer class is not recovered
};

struct TopologicalRepresentative {
  GraphMap map;
  Marking marking = Marking::Claimed;
  bool min_degree_3 = false;
  std::optional<Automorphism> automorphism;  // set for rose representatives
};

// The rose map spelling the images of phi.
TopologicalRepresentative rose_representative(const Automorphism& phi);
// Accepts a connected self-map that is a homotopy equivalence; throws
// InputError otherwise.
TopologicalRepresentative claimed_representative(GraphMap f);

}  // namespace iwip
