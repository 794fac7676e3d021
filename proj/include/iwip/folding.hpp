#pragma once

#include <cstddef>
#include <vector>

namespace iwip {

// Labels are involutive codes: `label ^ 1` is the inverse label. An edge
// {from, to, label} is also traversable as {to, from, label ^ 1}.
struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t label = 0;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// A labeled graph whose vertices carry at most one outgoing edge per label.
struct FoldedGraph {
  std::size_t vertex_count = 0;
  std::size_t basepoint = 0;
  // One entry per topological edge, stored with an even label.
  std::vector<LabeledEdge> edges;

  // Per-vertex table label -> target; `npos` when no such edge.
  std::vector<std::vector<std::size_t>> outgoing(std::size_t label_count) const;
  std::vector<std::size_t> degrees() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Stallings folding. Vertices are renumbered breadth-first from the
// basepoint, visiting labels in increasing order, so the output is canonical.
FoldedGraph fold(std::size_t vertex_count, const std::vector<LabeledEdge>& edges,
                 std::size_t basepoint);

// Removes degree-one vertices until none remain. When `keep_basepoint` is
// set the basepoint is never removed. Returns an empty graph
// (vertex_count 0) for a tree.
FoldedGraph trim(const FoldedGraph& graph, bool keep_basepoint);

}  // namespace iwip
