#include "iwip/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "iwip/error.hpp"
#include "iwip/folding.hpp"
#include "iwip/matrix.hpp"
#include "iwip/traintrack.hpp"

namespace iwip {

std::vector<std::vector<std::size_t>> CoreGraph::outgoing() const {
  std::vector<std::vector<std::size_t>> out(
      vertex_count, std::vector<std::size_t>(2 * base.edge_count(), npos));
  for (const auto& e : edges) {
    out[e.from][e.label.code()] = e.to;
    out[e.to][e.label.inverse().code()] = e.from;
  }
  return out;
}

namespace {

CoreGraph renumbered(const CoreGraph& core, const std::vector<std::vector<std::size_t>>& out,
                     std::size_t start) {
  std::vector<std::size_t> order(core.vertex_count, CoreGraph::npos);
  std::deque<std::size_t> queue{start};
  order[start] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t target : out[v])
      if (target != CoreGraph::npos && order[target] == CoreGraph::npos) {
        order[target] = next++;
        queue.push_back(target);
      }
  }
  CoreGraph r;
  r.base = core.base;
  r.vertex_count = core.vertex_count;
  r.projection.resize(core.vertex_count);
  for (std::size_t v = 0; v < core.vertex_count; ++v) r.projection[order[v]] = core.projection[v];
  for (const auto& e : core.edges) r.edges.push_back({order[e.from], order[e.to], e.label});
  std::sort(r.edges.begin(), r.edges.end(), [](const CoreEdge& a, const CoreEdge& b) {
    return std::make_tuple(a.from, a.label, a.to) < std::make_tuple(b.from, b.label, b.to);
  });
  return r;
}

bool encoding_less(const CoreGraph& a, const CoreGraph& b) {
  return std::lexicographical_compare(
      a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
      [](const CoreEdge& x, const CoreEdge& y) {
        return std::make_tuple(x.from, x.label, x.to) < std::make_tuple(y.from, y.label, y.to);
      });
}

}  // namespace

CoreGraph CoreGraph::canonical_form() const {
  auto out = outgoing();
  std::optional<CoreGraph> best;
  for (std::size_t s = 0; s < vertex_count; ++s) {
    CoreGraph candidate = renumbered(*this, out, s);
    if (!best || encoding_less(candidate, *best)) best = std::move(candidate);
  }
  return best ? *best : *this;
}

bool isomorphic(const CoreGraph& a, const CoreGraph& b) {
  return a.base == b.base && a.vertex_count == b.vertex_count &&
         a.edges.size() == b.edges.size() && a.canonical_form() == b.canonical_form();
}

CoreGraph stallings_core(const Graph& base, const std::vector<EdgePath>& generators) {
  if (generators.empty()) throw InputError("trivial subgroup has no core: no generators");
  const std::size_t root = generators.front().start;
  std::vector<LabeledEdge> edges;
  std::size_t vertices = 1;
  for (const EdgePath& p : generators) {
    validate_path(base, p);
    if (p.start != root || p.finish(base) != root)
      throw InputError("subgroup generators must be loops at a common base vertex");
    std::size_t prev = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::size_t next = (i + 1 == p.size()) ? 0 : vertices++;
      edges.push_back({prev, next, p.edges[i].code()});
      prev = next;
    }
  }
  FoldedGraph core = trim(fold(vertices, edges, 0), false);
  if (core.vertex_count == 0) throw InputError("trivial subgroup has no core");

  CoreGraph out;
  out.base = base;
  out.vertex_count = core.vertex_count;
  out.projection.assign(core.vertex_count, 0);
  for (const auto& e : core.edges) {
    OrientedEdge label = OrientedEdge::from_code(e.label);
    out.edges.push_back({e.from, e.to, label});
    out.projection[e.from] = base.origin(label);
    out.projection[e.to] = base.terminus(label);
  }
  return out;
}

CoreGraph stallings_core(const std::vector<Word>& generators) {
  if (generators.empty()) throw InputError("trivial subgroup has no core: no generators");
  const std::size_t rank = generators.front().rank();
  Graph rose = Graph::rose(rank);
  std::vector<EdgePath> loops;
  for (const Word& w : generators) {
    if (w.rank() != rank) throw InputError("subgroup generators have mixed ranks");
    EdgePath p{0, {}};
    for (Letter l : w.letters()) p.edges.push_back(OrientedEdge::from_letter(l));
    loops.push_back(std::move(p));
  }
  return stallings_core(rose, loops);
}

bool is_finite_index(const CoreGraph& core) {
  auto out = core.outgoing();
  for (std::size_t v = 0; v < core.vertex_count; ++v)
    for (OrientedEdge e : core.base.edges_at(core.projection[v]))
      if (out[v][e.code()] == CoreGraph::npos) return false;
  return true;
}

namespace {

std::optional<Lift> lift_segment(const CoreGraph& core,
                                 const std::vector<std::vector<std::size_t>>& out,
                                 std::size_t base_start, const Segment& seg) {
  for (std::size_t s = 0; s < core.vertex_count; ++s) {
    if (core.projection[s] != base_start) continue;
    Lift lift{s, {s}};
    std::size_t v = s;
    bool ok = true;
    for (OrientedEdge e : seg) {
      v = out[v][e.code()];
      if (v == CoreGraph::npos) {
        ok = false;
        break;
      }
      lift.vertices.push_back(v);
    }
    if (ok) return lift;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lift> lift_path(const CoreGraph& core, const EdgePath& path) {
  validate_path(core.base, path);
  return lift_segment(core, core.outgoing(), path.start, path.edges);
}

LeafSegmentSet leaf_segments(const GraphMap& f, std::size_t length, std::size_t size_cap) {
  if (length == 0) throw InputError("segment length must be at least 1");
  if (length > kMaxSegmentLength)
    throw CapExceeded("segment length " + std::to_string(length) + " exceeds cap " +
                      std::to_string(kMaxSegmentLength));
  if (!is_train_track(f)) throw PreconditionError("leaf segments require a train-track map");
  if (!primitive_exponent(f).exponent)
    throw PreconditionError("leaf segments require a primitive transition matrix");

  const Graph& g = f.graph();
  // All subpaths of length <= L of the iterates; closed because an
  // L-window of f(p) lies in f(q) for a subpath q of p of length <= L.
  std::set<Segment> windows;
  std::deque<const Segment*> queue;
  auto add_subpaths = [&](const std::vector<OrientedEdge>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t n = 1; n <= length && i + n <= p.size(); ++n) {
        auto [it, inserted] = windows.emplace(p.begin() + i, p.begin() + i + n);
        if (!inserted) continue;
        if (windows.size() > size_cap)
          throw CapExceeded("leaf segment set exceeds " + std::to_string(size_cap) + " entries");
        queue.push_back(&*it);
      }
  };
  for (OrientedEdge e : g.all_oriented_edges()) add_subpaths(f.image(e).edges);
  while (!queue.empty()) {
    const Segment& s = *queue.front();
    queue.pop_front();
    add_subpaths(concatenate_images(f, EdgePath{g.origin(s.front()), s}).edges);
  }

  LeafSegmentSet out;
  out.length = length;
  for (const auto& w : windows)
    if (w.size() == length) out.segments.insert(w);
  return out;
}

namespace {

std::optional<Segment> first_unlifted(const CoreGraph& core, const GraphMap& f,
                                      std::size_t length) {
  if (!(core.base == f.graph())) throw InputError("core and map have different base graphs");
  auto out = core.outgoing();
  for (const Segment& s : leaf_segments(f, length).segments)
    if (!lift_segment(core, out, f.graph().origin(s.front()), s)) return s;
  return std::nullopt;
}

}  // namespace

bool carries_segments(const CoreGraph& core, const GraphMap& f, std::size_t length) {
  return !first_unlifted(core, f, length).has_value();
}

CarriageResult test_carriage(const CoreGraph& core, const GraphMap& f, std::size_t max_length) {
  CarriageResult result;
  for (std::size_t l = 1; l <= max_length; ++l) {
    result.max_length = l;
    if (auto s = first_unlifted(core, f, l)) {
      result.refuted_at = l;
      result.unlifted = std::move(s);
      break;
    }
  }
  return result;
}

}  // namespace iwip
