#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/traintrack.hpp"

namespace iwip {

// Simple graph on the oriented edges at a vertex; two are adjacent when
// the turn they form is taken.
struct WhiteheadGraph {
  std::size_t vertex = 0;
  std::vector<OrientedEdge> nodes;
  // Non-degenerate taken turns at `vertex`, sorted, with their witnesses.
  std::map<Turn, TurnWitness> adjacencies;

  // A graph with no nodes counts as connected; >= 2 isolated nodes do not.
  bool connected() const;
  // Components as node lists, each sorted, ordered by least member.
  std::vector<std::vector<OrientedEdge>> components() const;
};

// Throws PreconditionError unless f is a train-track map.
WhiteheadGraph whitehead_graph(const GraphMap& f, std::size_t vertex);
// Builds from a precomputed closure of a train-track map.
WhiteheadGraph whitehead_graph(const GraphMap& f, std::size_t vertex, const TurnClosure& closure);
std::vector<WhiteheadGraph> whitehead_graphs(const GraphMap& f, const TurnClosure& closure);

struct CleanReport {
  bool is_train_track = false;
  bool irreducible = false;
  bool expanding = false;
  std::optional<unsigned> primitive_exponent;
  std::vector<bool> whitehead_connected;  // per vertex
  bool clean = false;
  bool weakly_clean = false;
};

// Throws PreconditionError unless f is a train-track map.
CleanReport is_clean(const GraphMap& f);
bool is_weakly_clean(const GraphMap& f);

}  // namespace iwip
