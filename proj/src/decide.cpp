#include "iwip/decide.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "iwip/error.hpp"
#include "iwip/graph_io.hpp"

namespace iwip {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IwipCertifiedGivenAtoroidal: return "IWIP_CERTIFIED_GIVEN_ATOROIDAL";
    case Verdict::NotIwip: return "NOT_IWIP";
    case Verdict::NotAtoroidalUndetermined: return "NOT_ATOROIDAL_UNDETERMINED";
    case Verdict::Undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

std::string to_string(AtoroidalAssertion a) {
  switch (a) {
    case AtoroidalAssertion::AssertedTrue: return "asserted-true";
    case AtoroidalAssertion::AssertedFalse: return "asserted-false";
    case AtoroidalAssertion::Unknown: return "unknown";
  }
  return "unknown";
}

AtoroidalAssertion parse_atoroidal_assertion(const std::string& text) {
  if (text == "true" || text == "asserted-true") return AtoroidalAssertion::AssertedTrue;
  if (text == "false" || text == "asserted-false") return AtoroidalAssertion::AssertedFalse;
  if (text == "unknown") return AtoroidalAssertion::Unknown;
  throw InputError("atoroidal assertion must be true, false or unknown, got \"" + text + "\"");
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Reduction: return "reduction";
    case WitnessKind::PeriodicFreeFactor: return "periodic-free-factor";
    case WitnessKind::PeriodicClass: return "periodic-conjugacy-class";
    case WitnessKind::MatrixObstruction: return "matrix-obstruction";
    case WitnessKind::NotTrainTrack: return "not-train-track";
  }
  return "unknown";
}

void AnalysisOptions::validate() const {
  if (max_word_length == 0) throw InputError("word length bound must be at least 1");
  if (max_period == 0) throw InputError("period bound must be at least 1");
  if (carriage_length == 0) throw InputError("carriage window bound must be at least 1");
  if (orbit_length_cap == 0 || power_length_cap == 0) throw InputError("caps must be positive");
}

PeriodicSearch search_periodic_conjugacy(const Automorphism& phi, unsigned max_word_length,
                                         unsigned max_period, std::size_t orbit_length_cap) {
  if (max_word_length == 0 || max_period == 0)
    throw InputError("periodic search bounds must be at least 1");
  const std::size_t rank = phi.rank();
  PeriodicSearch search;
  std::vector<Letter> letters;

  auto examine = [&](const Word& w) {
    ++search.classes_examined;
    Word current = w;
    for (unsigned j = 1; j <= max_period; ++j) {
      current = cyclic_reduce(phi.apply(current)).core;
      if (current.size() > orbit_length_cap) {
        ++search.classes_abandoned;
        return false;
      }
      if (current.size() == w.size() && canonical_rotation(current) == w) {
        Word image = w;
        for (unsigned i = 0; i < j; ++i) image = phi.apply(image);
        search.found = PeriodicClass{w, j, image};
        return true;
      }
    }
    return false;
  };

  // Depth-first in letter-code order yields words lexicographically.
  std::function<bool(std::size_t)> extend = [&](std::size_t length) -> bool {
    if (letters.size() == length) {
      if (length > 1 && letters.back() == letters.front().inverse()) return false;
      Word w = Word::reduce(rank, letters);
      if (!(canonical_rotation(w) == w)) return false;
      return examine(w);
    }
    for (std::size_t code = 0; code < 2 * rank; ++code) {
      Letter l = Letter::from_code(code);
      if (!letters.empty() && letters.back() == l.inverse()) continue;
      // A canonical rotation starts with its least letter.
      if (!letters.empty() && l < letters.front()) continue;
      letters.push_back(l);
      bool done = extend(length);
      letters.pop_back();
      if (done) return true;
    }
    return false;
  };

  for (std::size_t length = 1; length <= max_word_length; ++length)
    if (extend(length)) break;
  return search;
}

namespace {

const char* kCiteInvariantSubgraph = "invariant proper subgraph gives a reduction";
const char* kCitePowerReduction = "reduction for a positive power";
const char* kCiteBlowUp = "blow-up of a disconnected Whitehead graph gives a reduction";
const char* kCiteFreeFactor = "periodic basis element spans a periodic proper free factor";
const char* kCiteCleanCriterion = "clean train-track representative of an atoroidal class";
const char* kCitePeriodicClass = "periodic conjugacy class refutes atoroidality";
const char* kCiteMatrixConditions = "irreducible and primitive transition matrix are necessary";
const char* kCiteTrainTrackScope = "train-track construction is not attempted";
const char* kCiteNonAtoroidalScope = "non-atoroidal decision is not attempted";
const char* kCiteBoundedSearch = "periodic search is bounded by word length and period";

WhiteheadSummary summarize(const WhiteheadGraph& wh) {
  WhiteheadSummary s;
  s.vertex = wh.vertex;
  s.nodes = wh.nodes;
  for (const auto& [turn, witness] : wh.adjacencies) s.adjacencies.push_back(turn);
  s.components = wh.components();
  s.connected = s.components.size() <= 1;
  return s;
}

void add_citation(Report& r, const char* c) {
  if (std::find(r.citations.begin(), r.citations.end(), c) == r.citations.end())
    r.citations.emplace_back(c);
}

// Upper bound on the total image length of f^p from the matrix.
BigInt power_length_bound(const TransitionMatrix& a, unsigned p) {
  TransitionMatrix m = matrix_power(a, p);
  BigInt total = 0;
  for (std::size_t j = 0; j < m.dimension(); ++j) total += m.column_sum(j);
  return total;
}

std::optional<ReductionWitness> reduction_of_power(Report& r) {
  const GraphMap& f = r.representative.map;
  std::set<unsigned long long> candidates;
  if (r.primitivity.invariant_support && r.primitivity.power_k >= 2)
    candidates.insert(r.primitivity.power_k);
  for (unsigned p = 2; p <= f.graph().edge_count(); ++p) candidates.insert(p);
  if (r.train_track) {
    unsigned long long s = periodicity(f).global_period;
    if (s >= 2) candidates.insert(s);
    candidates.insert(2 * s);
  }
  for (unsigned long long p : candidates) {
    if (p > 64) {
      r.diagnostics.push_back("power " + std::to_string(p) + " skipped: exponent above 64");
      continue;
    }
    if (power_length_bound(r.matrix, static_cast<unsigned>(p)) > r.options.power_length_cap) {
      r.diagnostics.push_back("power " + std::to_string(p) + " skipped: image length cap");
      continue;
    }
    GraphMap g = power(f, static_cast<unsigned>(p));
    if (auto w = invariant_subgraph_witness(g)) {
      w->provenance = ReductionProvenance::InvariantSubgraphOfPower;
      w->power = static_cast<unsigned>(p);
      return w;
    }
  }
  return std::nullopt;
}

std::string edge_list(const Graph& g, const std::vector<std::size_t>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? ", " : "") + g.edge_name(edges[i]);
  return s + "}";
}

Report analyze_representative(TopologicalRepresentative rep, const Automorphism& phi,
                              std::string input, const AnalysisOptions& options) {
  options.validate();
  Report r;
  r.input = std::move(input);
  r.options = options;
  r.representative = std::move(rep);
  r.automorphism = phi;
  const GraphMap& f = r.representative.map;
  const Graph& g = f.graph();

  TurnClosure closure = taken_turn_closure(f);
  r.train_track = is_train_track(closure);
  r.matrix = transition_matrix(f);
  r.irreducible = is_irreducible(r.matrix);
  r.expansion = is_expanding(f);
  r.primitivity = primitive_exponent(f);
  if (!r.primitivity.diagnostic.empty()) r.diagnostics.push_back(r.primitivity.diagnostic);
  const bool all_expanding = std::all_of(r.expansion.edge_expanding.begin(),
                                         r.expansion.edge_expanding.end(), [](bool b) { return b; });

  bool reduced = false;
  if (auto w = invariant_subgraph_witness(f)) {
    r.witnesses.push_back({WitnessKind::Reduction,
                           "f-invariant subgraph " + edge_list(g, w->check.edges), *w, {}, {}});
    add_citation(r, kCiteInvariantSubgraph);
    reduced = true;
  }

  if (!r.train_track) {
    Witness w{WitnessKind::NotTrainTrack, "degenerate taken turn", {}, {}, {}};
    if (closure.degenerate) w.turn_chain = closure.chain(*closure.degenerate);
    r.witnesses.push_back(std::move(w));
  } else {
    for (const auto& wh : whitehead_graphs(f, closure)) r.whitehead.push_back(summarize(wh));
    r.clean = is_clean(f);
  }

  const bool matrix_obstruction = !r.irreducible || !r.primitivity.exponent || !all_expanding;
  if (r.train_track && matrix_obstruction) {
    std::string what = !r.irreducible ? "transition matrix is reducible"
                       : !r.primitivity.exponent ? "no power of the transition matrix is positive"
                                                 : "some edge does not grow";
    r.witnesses.push_back({WitnessKind::MatrixObstruction, what, {}, {}, {}});
    add_citation(r, kCiteMatrixConditions);
  }
  if (!reduced && matrix_obstruction) {
    if (auto w = reduction_of_power(r)) {
      r.witnesses.push_back({WitnessKind::Reduction,
                             "f^" + std::to_string(w->power) + "-invariant subgraph " +
                                 edge_list(g, w->check.edges),
                             *w, {}, {}});
      add_citation(r, kCitePowerReduction);
      reduced = true;
    }
  }

  bool any_disconnected = std::any_of(r.whitehead.begin(), r.whitehead.end(),
                                      [](const WhiteheadSummary& s) { return !s.connected; });
  if (!reduced && r.train_track && r.expansion.expanding && any_disconnected) {
    BlowUp b = blow_up(f);
    ReductionCheck check = verify_reduction(b.blown, b.delta_edges);
    if (check.passed()) {
      ReductionWitness w{ReductionProvenance::BlowUp, 1, b.blown, check};
      r.witnesses.push_back({WitnessKind::Reduction, "base edges of the blown-up graph", w, {}, {}});
      add_citation(r, kCiteBlowUp);
      reduced = true;
    } else {
      r.diagnostics.push_back("blow-up subgraph failed check " + check.failed_check());
    }
    if (!b.low_degree_vertices.empty())
      r.diagnostics.push_back("blown-up graph has " + std::to_string(b.low_degree_vertices.size()) +
                              " vertices of degree below 3");
  }

  r.periodic_search = search_periodic_conjugacy(phi, options.max_word_length, options.max_period,
                                                options.orbit_length_cap);
  if (r.periodic_search.classes_abandoned)
    r.diagnostics.push_back(std::to_string(r.periodic_search.classes_abandoned) +
                            " conjugacy classes abandoned at the orbit length cap");
  bool periodic = r.periodic_search.found.has_value();
  if (periodic) {
    const PeriodicClass& pc = *r.periodic_search.found;
    std::string power = "phi^" + std::to_string(pc.period);
    if (pc.word.size() == 1) {
      r.witnesses.push_back({WitnessKind::PeriodicFreeFactor,
                             power + "-invariant proper free factor <" + pc.word.to_string() + ">",
                             {}, pc, {}});
      add_citation(r, kCiteFreeFactor);
    } else {
      r.witnesses.push_back({WitnessKind::PeriodicClass,
                             power + " fixes the conjugacy class of " + pc.word.to_string(), {}, pc,
                             {}});
    }
  }
  bool free_factor = periodic && r.periodic_search.found->word.size() == 1;

  const bool clean = r.clean && r.clean->clean;
  if (reduced || free_factor) {
    r.verdict = Verdict::NotIwip;
  } else if (periodic) {
    r.verdict = Verdict::NotAtoroidalUndetermined;
    add_citation(r, kCitePeriodicClass);
    add_citation(r, kCiteNonAtoroidalScope);
    if (options.atoroidal == AtoroidalAssertion::AssertedTrue)
      r.diagnostics.push_back("atoroidal assertion contradicted by a periodic conjugacy class");
  } else if (options.atoroidal == AtoroidalAssertion::AssertedFalse) {
    r.verdict = Verdict::NotAtoroidalUndetermined;
    add_citation(r, kCiteNonAtoroidalScope);
  } else if (clean && options.atoroidal == AtoroidalAssertion::AssertedTrue) {
    r.verdict = Verdict::IwipCertifiedGivenAtoroidal;
    add_citation(r, kCiteCleanCriterion);
  } else {
    r.verdict = Verdict::Undetermined;
    if (!r.train_track) add_citation(r, kCiteTrainTrackScope);
    else add_citation(r, kCiteCleanCriterion);
    add_citation(r, kCiteBoundedSearch);
    if (clean) r.diagnostics.push_back("clean, but atoroidality was not asserted");
  }
  return r;
}

Report guarded(const std::function<Report()>& run, Report fallback) {
  try {
    return run();
  } catch (const CapExceeded& e) {
    fallback.verdict = Verdict::Undetermined;
    fallback.diagnostics.push_back(std::string("cap exceeded: ") + e.what());
    add_citation(fallback, kCiteBoundedSearch);
    return fallback;
  }
}

}  // namespace

Report analyze(const Automorphism& phi, const AnalysisOptions& options) {
  Report fallback;
  fallback.input = phi.to_dsl();
  fallback.options = options;
  fallback.automorphism = phi;
  fallback.representative = rose_representative(phi);
  return guarded([&] { return analyze_representative(rose_representative(phi), phi, phi.to_dsl(), options); },
                 fallback);
}

Report analyze(const GraphMap& f, const AnalysisOptions& options) {
  TopologicalRepresentative rep = claimed_representative(f);
  InducedEndomorphism induced = induced_endomorphism(f, 0);
  Automorphism phi(induced.images);
  Report fallback;
  fallback.input = print_graph_map(f);
  fallback.options = options;
  fallback.automorphism = phi;
  fallback.representative = rep;
  return guarded([&] { return analyze_representative(rep, phi, print_graph_map(f), options); },
                 fallback);
}

bool reverify_witness(const Report& report, const Witness& witness) {
  const GraphMap& f = report.representative.map;
  const Automorphism& phi = report.automorphism;
  switch (witness.kind) {
    case WitnessKind::Reduction: {
      if (!witness.reduction) return false;
      const ReductionWitness& w = *witness.reduction;
      switch (w.provenance) {
        case ReductionProvenance::InvariantSubgraph:
          if (!(w.map == f)) return false;
          break;
        case ReductionProvenance::InvariantSubgraphOfPower:
          if (w.power < 1 || !(w.map == power(f, w.power))) return false;
          break;
        case ReductionProvenance::BlowUp: {
          BlowUp b = blow_up(f);
          if (!(b.blown == w.map) || !is_homotopy_equivalence(w.map)) return false;
          if (!(contract_sub_edges(b) == f)) return false;
          break;
        }
      }
      return verify_reduction(w.map, w.check.edges).passed();
    }
    case WitnessKind::PeriodicFreeFactor:
    case WitnessKind::PeriodicClass: {
      if (!witness.periodic) return false;
      const PeriodicClass& pc = *witness.periodic;
      Word image = power(phi, pc.period).apply(pc.word);
      if (!(image == pc.image) || !conjugate_equal(image, pc.word)) return false;
      if (witness.kind == WitnessKind::PeriodicFreeFactor)
        return cyclic_reduce(pc.word).core.size() == 1;
      return true;
    }
    case WitnessKind::MatrixObstruction: {
      TransitionMatrix a = transition_matrix(f);
      return !is_irreducible(a) || !primitive_exponent_by_power_bound(a) ||
             !is_expanding(f).expanding ||
             std::count(is_expanding(f).edge_expanding.begin(),
                        is_expanding(f).edge_expanding.end(), false) > 0;
    }
    case WitnessKind::NotTrainTrack:
      return !is_train_track(f);
  }
  return false;
}

}  // namespace iwip
