#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/whitehead.hpp"

namespace iwip {

struct BlownVertex {
  std::size_t center = 0;
  // One sub-vertex per Whitehead component, in component order.
  std::vector<std::size_t> sub_vertices;
  // sub_edges[i] joins `center` to sub_vertices[i] (topological edge index).
  std::vector<std::size_t> sub_edges;
  std::vector<std::vector<OrientedEdge>> components;
};

// The blown-up graph: each base vertex v becomes a center v* joined by
// sub-edges to one sub-vertex per component of its Whitehead graph; every
// base edge is reattached at the sub-vertex of its component. Base edges
// keep their indices 0..r-1 in the new graph.
struct BlowUp {
  GraphMap base;
  GraphMap blown;
  std::vector<BlownVertex> vertices;  // indexed by base vertex
  std::vector<std::size_t> delta_edges;  // the base edges, an f'-invariant subgraph
  // Vertex of the blown-up graph -> base vertex it collapses to.
  std::vector<std::size_t> collapse;
  std::vector<std::size_t> low_degree_vertices;  // degree < 3 in the blown-up graph
};

// Requires an expanding train-track map; throws PreconditionError otherwise.
BlowUp blow_up(const GraphMap& f);

// Collapses every sub-edge, returning a map on the base graph.
GraphMap contract_sub_edges(const BlowUp& b);

enum class ReductionProvenance {
  InvariantSubgraph,
  InvariantSubgraphOfPower,
  BlowUp,
};

std::string to_string(ReductionProvenance p);

// Outcome of checking that an edge set is a reduction for f.
struct ReductionCheck {
  std::vector<std::size_t> edges;
  bool invariant = false;             // f(D) inside D
  bool nontrivial = false;            // some component of D has a circuit
  bool not_homotopy_equivalence = false;
  std::size_t components = 0;
  std::size_t subgraph_betti = 0;
  std::size_t graph_betti = 0;
  bool pi1_surjective = false;  // only meaningful when D is connected

  bool passed() const { return invariant && nontrivial && not_homotopy_equivalence; }
  // Name of the first failed check, empty if all pass.
  std::string failed_check() const;
};

ReductionCheck verify_reduction(const GraphMap& f, std::vector<std::size_t> edges);

struct ReductionWitness {
  ReductionProvenance provenance = ReductionProvenance::InvariantSubgraph;
  unsigned power = 1;  // the witness is a reduction for f^power
  GraphMap map;        // the map the check was run against
  ReductionCheck check;
};

// Closures of single-edge seeds under "edges crossed by images", in seed
// order; the first one passing verify_reduction.
std::optional<ReductionWitness> invariant_subgraph_witness(const GraphMap& f);

}  // namespace iwip
