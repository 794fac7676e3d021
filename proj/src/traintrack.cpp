#include "iwip/traintrack.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "iwip/error.hpp"

namespace iwip {

std::vector<Turn> TurnClosure::chain(const Turn& t) const {
  std::vector<Turn> out;
  std::optional<Turn> at = t;
  while (at) {
    out.push_back(*at);
    at = taken.at(*at).parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

TurnClosure taken_turn_closure(const GraphMap& f) {
  const Graph& g = f.graph();
  TurnClosure closure;
  std::deque<Turn> queue;
  for (OrientedEdge e : g.all_oriented_edges()) {
    for (const Turn& t : turns_in_path(f.image(e))) {
      closure.seed.insert(t);
      if (closure.taken.try_emplace(t, TurnWitness{e, 1, std::nullopt}).second)
        queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    Turn t = queue.front();
    queue.pop_front();
    const TurnWitness& w = closure.taken.at(t);
    if (t.degenerate() && !closure.degenerate) closure.degenerate = t;
    Turn image = Turn::make(derivative(f, t.first), derivative(f, t.second));
    TurnWitness next{w.edge, w.depth + 1, t};
    if (closure.taken.try_emplace(image, next).second) queue.push_back(image);
  }
  return closure;
}

bool is_train_track(const TurnClosure& closure) { return !closure.degenerate.has_value(); }

bool is_train_track(const GraphMap& f) { return is_train_track(taken_turn_closure(f)); }

TransitionMatrix transition_matrix(const GraphMap& f) {
  const std::size_t r = f.graph().edge_count();
  TransitionMatrix a(r);
  for (std::size_t j = 0; j < r; ++j)
    for (OrientedEdge e : f.edge_images()[j].edges) a.at(e.index(), j) += 1;
  return a;
}

namespace {

// Period of x under `step` if x lies on a cycle, else 0.
template <typename T, typename Step>
unsigned cycle_period(T x, std::size_t bound, Step step) {
  T y = step(x);
  for (unsigned p = 1; p <= bound; ++p) {
    if (y == x) return p;
    y = step(y);
  }
  return 0;
}

}  // namespace

PeriodicityData periodicity(const GraphMap& f) {
  const Graph& g = f.graph();
  PeriodicityData data;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    unsigned p = cycle_period(v, g.vertex_count(), [&](std::size_t x) { return f.vertex_image(x); });
    if (p) data.vertex_periods[v] = p;
  }
  const auto edges = g.all_oriented_edges();
  for (OrientedEdge e : edges) {
    unsigned p = cycle_period(e, edges.size(), [&](OrientedEdge x) { return derivative(f, x); });
    if (p) data.edge_periods[e] = p;
  }
  unsigned long long s = 1;
  for (const auto& [v, p] : data.vertex_periods) s = std::lcm(s, static_cast<unsigned long long>(p));
  for (const auto& [e, p] : data.edge_periods) s = std::lcm(s, static_cast<unsigned long long>(p));
  data.global_period = s;
  return data;
}

namespace {

// Tarjan's algorithm on the occurrence digraph j -> i when a_ij > 0.
std::vector<std::size_t> strong_components(const std::vector<std::vector<bool>>& arcs_from,
                                           std::size_t& count) {
  const std::size_t r = arcs_from.size();
  std::vector<std::size_t> index(r, SIZE_MAX), low(r, 0), comp(r, SIZE_MAX);
  std::vector<bool> on_stack(r, false);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  count = 0;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < r; ++w) {
      if (!arcs_from[v][w]) continue;
      if (index[w] == SIZE_MAX) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (std::size_t v = 0; v < r; ++v)
    if (index[v] == SIZE_MAX) visit(visit, v);
  return comp;
}

}  // namespace

std::vector<bool> expanding_edges_by_components(const TransitionMatrix& a) {
  const std::size_t r = a.dimension();
  // arcs_from[j][i]: f(e_j) crosses e_i.
  std::vector<std::vector<bool>> arcs_from(r, std::vector<bool>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) arcs_from[j][i] = a.at(i, j) > 0;

  std::size_t count = 0;
  auto comp = strong_components(arcs_from, count);

  // An SCC is nontrivial if it has an internal arc, and a unit cycle if each
  // member has exactly one internal arc, of weight one.
  std::vector<bool> nontrivial(count, false), unit_cycle(count, true);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t internal = 0;
    bool unit = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (!arcs_from[j][i] || comp[i] != comp[j]) continue;
      ++internal;
      if (a.at(i, j) != 1) unit = false;
    }
    if (internal) nontrivial[comp[j]] = true;
    if (internal != 1 || !unit) unit_cycle[comp[j]] = false;
  }

  auto reach = [&](std::size_t from) {
    std::vector<bool> seen(r, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < r; ++y)
        if (arcs_from[x][y] && !seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
    return seen;
  };

  std::vector<std::vector<bool>> reachable(r);
  for (std::size_t j = 0; j < r; ++j) reachable[j] = reach(j);

  std::vector<bool> out(r, false);
  for (std::size_t j = 0; j < r; ++j) {
    std::set<std::size_t> seen_nontrivial;
    for (std::size_t i = 0; i < r; ++i)
      if (reachable[j][i] && nontrivial[comp[i]]) seen_nontrivial.insert(comp[i]);
    for (std::size_t c : seen_nontrivial)
      if (!unit_cycle[c]) out[j] = true;
    if (out[j]) continue;
    // Two nontrivial components joined by a path.
    for (std::size_t x = 0; x < r && !out[j]; ++x) {
      if (!reachable[j][x] || !nontrivial[comp[x]]) continue;
      for (std::size_t y = 0; y < r; ++y)
        if (reachable[x][y] && nontrivial[comp[y]] && comp[y] != comp[x]) {
          out[j] = true;
          break;
        }
    }
  }
  return out;
}

std::vector<bool> expanding_edges_by_lengths(const TransitionMatrix& a) {
  // Image lengths are nondecreasing and constant from n = r on for bounded
  // edges; for a growing edge they increase within any window of r steps.
  const std::size_t r = a.dimension();
  const unsigned lo = static_cast<unsigned>(std::max<std::size_t>(r, 1));
  const unsigned hi = static_cast<unsigned>(2 * r * r + 2);
  TransitionMatrix p_lo = matrix_power(a, lo);
  TransitionMatrix p_hi = matrix_power(a, hi);
  std::vector<bool> out(r);
  for (std::size_t j = 0; j < r; ++j) out[j] = p_hi.column_sum(j) > p_lo.column_sum(j);
  return out;
}

ExpansionReport is_expanding(const GraphMap& f) {
  TransitionMatrix a = transition_matrix(f);
  auto by_components = expanding_edges_by_components(a);
  auto by_lengths = expanding_edges_by_lengths(a);
  if (by_components != by_lengths)
    throw InternalError("expansion classification disagrees with image lengths");
  ExpansionReport report;
  report.edge_expanding = by_components;
  report.expanding = std::find(by_components.begin(), by_components.end(), true) != by_components.end();
  return report;
}

namespace {

std::optional<unsigned> least_positive_power(const TransitionMatrix& a, unsigned long long up_to) {
  TransitionMatrix p = a;
  for (unsigned long long m = 1; m <= up_to; ++m) {
    if (p.is_positive()) return static_cast<unsigned>(m);
    p = p * a;
  }
  return std::nullopt;
}

}  // namespace

PrimitivityResult primitive_exponent(const GraphMap& f) {
  PrimitivityResult result;
  const TransitionMatrix a = transition_matrix(f);
  const std::size_t r = a.dimension();
  result.oracle_exponent = primitive_exponent_by_power_bound(a);

  if (!is_train_track(f)) {
    result.diagnostic = "not a train-track map";
  } else if (!is_irreducible(a)) {
    result.diagnostic = "transition matrix is reducible";
  } else {
    auto growth = expanding_edges_by_components(a);
    if (std::find(growth.begin(), growth.end(), false) != growth.end())
      result.diagnostic = "some edge has bounded iterated length";
    else
      result.preconditions_met = true;
  }
  if (!result.preconditions_met) {
    result.exponent = result.oracle_exponent;
    return result;
  }

  const PeriodicityData periods = periodicity(f);
  const unsigned long long s = periods.global_period;
  result.period = s;

  // Least multiple k of s with every |f^k(e)| >= 2. Growing edges reach
  // length 2 within 2r+2 steps, so the search is bounded.
  TransitionMatrix as = matrix_power(a, static_cast<unsigned>(s));
  TransitionMatrix ak = as;
  unsigned long long k = s;
  for (;;) {
    bool long_enough = true;
    for (std::size_t j = 0; j < r; ++j)
      if (ak.column_sum(j) < 2) long_enough = false;
    if (long_enough) break;
    if (k > s * (2 * r + 2)) throw InternalError("growing edges did not reach length 2");
    ak = ak * as;
    k += s;
  }
  result.power_k = k;
  const auto g_support = ak.support();

  // Edge support of g^t(e) for periodic e, g = f^k, until it stabilises.
  unsigned long long t_max = 1;
  std::vector<bool> all(r, true);
  for (const auto& [e, p] : periods.edge_periods) {
    (void)p;
    std::vector<bool> support(r, false);
    for (std::size_t i = 0; i < r; ++i) support[i] = g_support[i][e.index()];
    unsigned long long t = 1;
    for (;;) {
      std::vector<bool> next(r, false);
      for (std::size_t j = 0; j < r; ++j)
        if (support[j])
          for (std::size_t i = 0; i < r; ++i)
            if (g_support[i][j]) next[i] = true;
      if (next == support) break;
      support = std::move(next);
      ++t;
    }
    if (support != all) {
      std::vector<std::size_t> edges;
      for (std::size_t i = 0; i < r; ++i)
        if (support[i]) edges.push_back(i);
      result.invariant_support = std::move(edges);
      result.support_steps = t;
      result.exponent = std::nullopt;
      if (result.oracle_exponent)
        throw InternalError("support procedure and power-bound test disagree on primitivity");
      return result;
    }
    t_max = std::max(t_max, t);
  }
  result.support_steps = t_max;

  // b: steps of Dg = (Df)^k until every initial edge is periodic.
  unsigned long long b = 1;
  for (OrientedEdge e : f.graph().all_oriented_edges()) {
    OrientedEdge x = e;
    unsigned long long steps = 0;
    while (!periods.edge_periods.count(x)) {
      for (unsigned long long i = 0; i < k; ++i) x = derivative(f, x);
      ++steps;
    }
    b = std::max(b, steps);
  }
  result.initial_steps = b;

  const unsigned long long m = k * (b + t_max);
  result.procedure_exponent = m;
  if (!matrix_power(a, static_cast<unsigned>(m)).is_positive())
    throw InternalError("support procedure exponent does not give a positive power");
  result.exponent = least_positive_power(a, m);
  if (result.exponent != result.oracle_exponent)
    throw InternalError("support procedure and power-bound test disagree on the exponent");
  return result;
}

Eigenray eigenray_prefix(const GraphMap& f, std::size_t length, std::size_t length_cap) {
  const PeriodicityData periods = periodicity(f);
  for (const auto& [e, p] : periods.edge_periods) {
    Iteration first = iterate_edge(f, e, p, length_cap);
    if (first.truncated || first.path.size() < 2) continue;
    if (first.path.edges.front() != e) continue;
    EdgePath ray = first.path;
    while (ray.size() < length) {
      EdgePath next = ray;
      for (unsigned i = 0; i < p; ++i) {
        if (next.size() > length_cap) throw CapExceeded("eigenray iteration exceeded length cap");
        next = map_path(f, next);
      }
      if (next.size() <= ray.size() ||
          !std::equal(ray.edges.begin(), ray.edges.end(), next.edges.begin()))
        throw PreconditionError("iterates of the periodic edge are not nested");
      ray = std::move(next);
    }
    ray.edges.resize(length);
    return {e, p, ray};
  }
  throw PreconditionError("no periodic edge with growing image");
}

}  // namespace iwip
