#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/words.hpp"

namespace iwip {

struct CoreEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  OrientedEdge label;  // always a forward base edge

  friend bool operator==(const CoreEdge&, const CoreEdge&) = default;
};

// Immersed, connected, trimmed graph over a base graph. Traversing an edge
// backwards reads the inverse label.
struct CoreGraph {
  Graph base;
  std::size_t vertex_count = 0;
  std::vector<CoreEdge> edges;
  std::vector<std::size_t> projection;  // core vertex -> base vertex

  // Per core vertex: oriented base edge code -> target core vertex, or npos.
  std::vector<std::vector<std::size_t>> outgoing() const;
  // Relabelled copy, minimal over breadth-first numberings from every
  // vertex; two cores are isomorphic iff their canonical forms are equal.
  CoreGraph canonical_form() const;
  std::size_t betti_number() const { return edges.size() + 1 - vertex_count; }

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

bool isomorphic(const CoreGraph& a, const CoreGraph& b);

// Core of the subgroup generated by loops at a common base vertex. Throws
// InputError for an empty list, non-loops, or a trivial subgroup.
CoreGraph stallings_core(const Graph& base, const std::vector<EdgePath>& generators);
// Words over the rose of matching rank.
CoreGraph stallings_core(const std::vector<Word>& generators);

// Every vertex has one outgoing edge per oriented base edge at its image.
bool is_finite_index(const CoreGraph& core);

struct Lift {
  std::size_t start = 0;
  std::vector<std::size_t> vertices;  // size = path length + 1
};

// First lift by increasing start vertex.
std::optional<Lift> lift_path(const CoreGraph& core, const EdgePath& path);

using Segment = std::vector<OrientedEdge>;

inline constexpr std::size_t kMaxSegmentLength = 64;
inline constexpr std::size_t kMaxSegmentSetSize = 1'000'000;

struct LeafSegmentSet {
  std::size_t length = 0;
  std::set<Segment> segments;
};

// Length-L subpaths of the iterates f^n(e), n >= 1, over both orientations.
// Requires a train track with a primitive transition matrix
// (PreconditionError); throws CapExceeded above the length or size caps.
LeafSegmentSet leaf_segments(const GraphMap& f, std::size_t length,
                             std::size_t size_cap = kMaxSegmentSetSize);

bool carries_segments(const CoreGraph& core, const GraphMap& f, std::size_t length);

struct CarriageResult {
  std::size_t max_length = 0;  // largest window size examined
  std::optional<std::size_t> refuted_at;
  std::optional<Segment> unlifted;  // least segment without a lift at refuted_at
};

// Tries L = 1..max_length and stops at the first refutation.
CarriageResult test_carriage(const CoreGraph& core, const GraphMap& f, std::size_t max_length);

}  // namespace iwip
