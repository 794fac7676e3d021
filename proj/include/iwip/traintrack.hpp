#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/matrix.hpp"

namespace iwip {

// Where a turn was first seen: it is contained in f^depth(edge).
struct TurnWitness {
  OrientedEdge edge;
  unsigned depth = 1;
  // The turn whose Df-image this is; empty for turns read off an edge image.
  std::optional<Turn> parent;
};

struct TurnClosure {
  // Turns contained in some f(e).
  std::set<Turn> seed;
  // Closure of `seed` under {e, e'} -> {Df(e), Df(e')}, degenerate members
  // included.
  std::map<Turn, TurnWitness> taken;
  bool closed = true;
  // First degenerate turn reached, in breadth-first order.
  std::optional<Turn> degenerate;

  bool contains(const Turn& t) const { return taken.count(t) != 0; }
  // Seed turn, its Df-image, ..., `t`.
  std::vector<Turn> chain(const Turn& t) const;
};

TurnClosure taken_turn_closure(const GraphMap& f);

// No iterate f^n(e) cancels: equivalently the turn closure has no
// degenerate turn.
bool is_train_track(const GraphMap& f);
bool is_train_track(const TurnClosure& closure);

// a_ij = occurrences of e_i^{+-1} in f(e_j).
TransitionMatrix transition_matrix(const GraphMap& f);

struct PeriodicityData {
  std::map<std::size_t, unsigned> vertex_periods;
  // Periods under the derivative map Df.
  std::map<OrientedEdge, unsigned> edge_periods;
  // lcm of all periods.
  unsigned long long global_period = 1;
};

PeriodicityData periodicity(const GraphMap& f);

struct ExpansionReport {
  // Per topological edge: |f^n(e)| -> infinity.
  std::vector<bool> edge_expanding;
  bool expanding = false;
};

// Strongly-connected-component classification, cross-checked against image
// lengths; throws InternalError if the two disagree.
ExpansionReport is_expanding(const GraphMap& f);
std::vector<bool> expanding_edges_by_components(const TransitionMatrix& a);
std::vector<bool> expanding_edges_by_lengths(const TransitionMatrix& a);

struct PrimitivityResult {
  // Least m >= 1 with A(f)^m > 0.
  std::optional<unsigned> exponent;
  // Answer of the (r-1)^2+1 power-bound test.
  std::optional<unsigned> oracle_exponent;

  // Whether f is an irreducible train track with every edge growing, so that
  // the periodic-edge support procedure applies. Otherwise `diagnostic`
  // explains and only the power-bound answer is used.
  bool preconditions_met = false;
  std::string diagnostic;

  // Support-procedure data: s (period), k (multiple of s with all
  // |f^k(e)| >= 2), t (support stabilisation), b (steps to a periodic
  // initial edge), and the resulting exponent k(b+t).
  unsigned long long period = 0;
  unsigned long long power_k = 0;
  unsigned long long support_steps = 0;
  unsigned long long initial_steps = 0;
  std::optional<unsigned long long> procedure_exponent;
  // Proper f^k-invariant edge set found when no positive power exists.
  std::optional<std::vector<std::size_t>> invariant_support;
};

PrimitivityResult primitive_exponent(const GraphMap& f);

struct Eigenray {
  OrientedEdge edge;
  unsigned period = 1;
  EdgePath prefix;
};

// Length-L prefix of the ray g^n(e0), g = f^period, for the first periodic
// edge e0 with |g(e0)| >= 2. Throws PreconditionError if there is none.
Eigenray eigenray_prefix(const GraphMap& f, std::size_t length,
                         std::size_t length_cap = kDefaultLengthCap);

}  // namespace iwip
