#pragma once

// Brute-force reference implementations. They share no algorithmic code
// with the library: paths and words are plain vectors of signed integers
// (+(k+1) for generator/edge k, -(k+1) for its inverse).

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/matrix.hpp"
#include "iwip/subgroups.hpp"
#include "iwip/words.hpp"

namespace oracle {

using Seq = std::vector<int>;
using Grid = std::vector<std::vector<iwip::BigInt>>;

Seq to_seq(const iwip::Word& w);
Seq to_seq(const std::vector<iwip::OrientedEdge>& p);
// Images of each generator/edge as signed sequences.
std::vector<Seq> images_of(const iwip::GraphMap& f);
std::vector<Seq> images_of(const iwip::Automorphism& phi);

// Substitutes without any cancellation.
Seq substitute(const std::vector<Seq>& images, const Seq& w);
Seq free_reduce(const Seq& w);
bool has_cancellation(const Seq& w);

struct CancellationScan {
  std::optional<unsigned> first_depth;  // least n with cancellation in literal f^n(e)
  bool truncated = false;               // a literal iterate exceeded the cap
};

// Literal f^n(e) for every oriented edge, n = 1..max_n.
CancellationScan scan_cancellation(const iwip::GraphMap& f, unsigned max_n,
                                   std::size_t cap = 5'000'000);

Grid count_matrix(const iwip::GraphMap& f);
Grid multiply(const Grid& a, const Grid& b);
Grid power(const Grid& a, unsigned m);
bool positive(const Grid& a);
Grid to_grid(const iwip::TransitionMatrix& a);
// Least m <= (r-1)^2 + 1 with A^m > 0 by repeated multiplication.
std::optional<unsigned> primitive_exponent(const Grid& a);
// Reachability with paths of length >= 1 from every index to every index.
bool strongly_connected(const Grid& a);

// Non-degenerate turns (pairs of signed edges, sorted) read off literal
// iterates f^n(e), n = 1..max_n, with cancellations removed between steps.
std::set<std::pair<int, int>> turns_by_iteration(const iwip::GraphMap& f, unsigned max_n,
                                                 std::size_t cap = 2'000'000);

// Hand-rolled Todd-Coxeter enumeration for a subgroup of the free group on
// `rank` generators (no relators). Returns the index, or nothing if the
// coset count exceeds `max_cosets`.
std::optional<std::size_t> coset_index(std::size_t rank, const std::vector<Seq>& generators,
                                       std::size_t max_cosets = 2000);

// Labeled-graph isomorphism by trying every image of vertex 0.
bool cores_isomorphic(const iwip::CoreGraph& a, const iwip::CoreGraph& b);

// Cyclic conjugacy test by rotation search on cyclic reductions.
Seq cyclic_core(const Seq& w);
bool conjugate(const Seq& u, const Seq& w);

struct PeriodicHit {
  Seq word;
  unsigned period = 0;
};

// Least length (then any word, least period) over all cyclically reduced
// words of length <= max_len and periods <= max_period.
std::optional<PeriodicHit> periodic_class(const iwip::Automorphism& phi, unsigned max_len,
                                          unsigned max_period, std::size_t cap = 200'000);

// Length-L windows of literal iterates f^n(e), n = 1..max_n, both orientations.
std::set<Seq> windows_by_iteration(const iwip::GraphMap& f, std::size_t length, unsigned max_n,
                                   std::size_t cap = 2'000'000);

// Reduction check done with elementary graph facts: invariance, a circuit,
// and not (connected with full first Betti number).
bool reduction_holds(const iwip::GraphMap& f, const std::vector<std::size_t>& edges);

}  // namespace oracle
