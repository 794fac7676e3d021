#include "iwip/report.hpp"

#include <sstream>

#include "iwip/graph_io.hpp"

namespace iwip {

using nlohmann::json;

namespace {

json edge_names(const Graph& g, const std::vector<OrientedEdge>& edges) {
  json out = json::array();
  for (OrientedEdge e : edges) out.push_back(g.name(e));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string set_string(const Graph& g, const std::vector<OrientedEdge>& edges) {
  std::vector<std::string> names;
  for (OrientedEdge e : edges) names.push_back(g.name(e));
  return "{" + join(names, ", ") + "}";
}

}  // namespace

json matrix_to_json(const TransitionMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const BigInt& x = a.at(i, j);
      if (x <= BigInt(std::numeric_limits<long long>::max()))
        row.push_back(static_cast<long long>(x));
      else
        row.push_back(x.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json turn_to_json(const Graph& g, const Turn& t) { return {g.name(t.first), g.name(t.second)}; }

std::string turn_to_string(const Graph& g, const Turn& t) {
  return "{" + g.name(t.first) + ", " + g.name(t.second) + "}";
}

std::string segment_to_string(const Graph& g, const Segment& s) {
  std::vector<std::string> names;
  for (OrientedEdge e : s) names.push_back(g.name(e));
  return join(names, " ");
}

json witness_to_json(const Report& report, const Witness& w) {
  const Graph& g = report.representative.map.graph();
  json j = {{"kind", to_string(w.kind)}, {"summary", w.summary}};
  if (w.reduction) {
    const ReductionWitness& r = *w.reduction;
    const Graph& h = r.map.graph();
    json edges = json::array();
    for (std::size_t k : r.check.edges) edges.push_back(h.edge_name(k));
    j["reduction"] = {
        {"provenance", to_string(r.provenance)},
        {"power", r.power},
        {"edges", edges},
        {"checks",
         {{"invariant", r.check.invariant},
          {"homotopically_nontrivial", r.check.nontrivial},
          {"inclusion_not_homotopy_equivalence", r.check.not_homotopy_equivalence}}},
        {"components", r.check.components},
        {"subgraph_betti", r.check.subgraph_betti},
        {"graph_betti", r.check.graph_betti},
    };
    if (r.provenance == ReductionProvenance::BlowUp) j["reduction"]["map"] = graph_map_to_json(r.map);
  }
  if (w.periodic) {
    j["periodic"] = {{"word", w.periodic->word.to_string()},
                     {"period", w.periodic->period},
                     {"image", w.periodic->image.to_string()}};
  }
  if (!w.turn_chain.empty()) {
    json chain = json::array();
    for (const Turn& t : w.turn_chain) chain.push_back(turn_to_json(g, t));
    j["turn_chain"] = chain;
  }
  return j;
}

json report_to_json(const Report& report) {
  const GraphMap& f = report.representative.map;
  const Graph& g = f.graph();
  json j;
  j["verdict"] = to_string(report.verdict);
  j["input"] = report.input;
  j["marking"] = report.representative.marking == Marking::Rose ? "rose" : "claimed";
  j["automorphism"] = report.automorphism.to_dsl();
  j["train_track"] = report.train_track;
  j["matrix"] = matrix_to_json(report.matrix);
  j["irreducible"] = report.irreducible;
  j["expanding"] = report.expansion.expanding;
  j["edge_expanding"] = report.expansion.edge_expanding;
  const PrimitivityResult& p = report.primitivity;
  j["primitive_exponent"] = p.exponent ? json(*p.exponent) : json(nullptr);
  json prim = {{"oracle_exponent", p.oracle_exponent ? json(*p.oracle_exponent) : json(nullptr)},
               {"procedure_applies", p.preconditions_met}};
  if (p.preconditions_met) {
    prim["period"] = p.period;
    prim["power_k"] = p.power_k;
    prim["support_steps"] = p.support_steps;
    prim["initial_steps"] = p.initial_steps;
    prim["procedure_exponent"] =
        p.procedure_exponent ? json(*p.procedure_exponent) : json(nullptr);
  }
  if (p.invariant_support) {
    json edges = json::array();
    for (std::size_t k : *p.invariant_support) edges.push_back(g.edge_name(k));
    prim["invariant_support"] = edges;
  }
  j["primitivity"] = prim;

  json wh = json::array();
  for (const auto& s : report.whitehead) {
    json adj = json::array();
    for (const Turn& t : s.adjacencies) adj.push_back(turn_to_json(g, t));
    json comps = json::array();
    for (const auto& c : s.components) comps.push_back(edge_names(g, c));
    wh.push_back({{"vertex", s.vertex},
                  {"nodes", edge_names(g, s.nodes)},
                  {"adjacencies", adj},
                  {"components", comps},
                  {"connected", s.connected}});
  }
  j["whitehead"] = wh;
  j["clean"] = report.clean ? json(report.clean->clean) : json(nullptr);
  j["weakly_clean"] = report.clean ? json(report.clean->weakly_clean) : json(nullptr);

  const PeriodicSearch& ps = report.periodic_search;
  json found = nullptr;
  if (ps.found)
    found = {{"word", ps.found->word.to_string()},
             {"period", ps.found->period},
             {"image", ps.found->image.to_string()}};
  j["periodic_search"] = {{"found", found},
                          {"classes_examined", ps.classes_examined},
                          {"classes_abandoned", ps.classes_abandoned}};

  json witnesses = json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(witness_to_json(report, w));
  j["witnesses"] = witnesses;
  const AnalysisOptions& o = report.options;
  j["bounds_used"] = {{"max_word_length", o.max_word_length},
                      {"max_period", o.max_period},
                      {"carriage_length", o.carriage_length},
                      {"orbit_length_cap", o.orbit_length_cap},
                      {"power_length_cap", o.power_length_cap},
                      {"atoroidal", to_string(o.atoroidal)}};
  j["citations"] = report.citations;
  j["diagnostics"] = report.diagnostics;
  return j;
}

std::string report_to_text(const Report& report) {
  const GraphMap& f = report.representative.map;
  const Graph& g = f.graph();
  std::ostringstream out;
  out << "verdict: " << to_string(report.verdict) << "\n";
  out << "train track: " << yes_no(report.train_track) << "\n";
  out << "transition matrix:\n";
  for (const auto& row : report.matrix.to_grid()) out << "  " << join(row, " ") << "\n";
  out << "irreducible: " << yes_no(report.irreducible) << "\n";
  out << "expanding: " << yes_no(report.expansion.expanding) << "\n";
  out << "primitive exponent: "
      << (report.primitivity.exponent ? std::to_string(*report.primitivity.exponent) : "none")
      << "\n";
  for (const auto& s : report.whitehead) {
    std::vector<std::string> comps;
    for (const auto& c : s.components) comps.push_back(set_string(g, c));
    out << "whitehead graph at vertex " << s.vertex << ": "
        << (s.connected ? "connected" : "disconnected") << ", components " << join(comps, " ")
        << "\n";
  }
  if (report.clean) {
    out << "clean: " << yes_no(report.clean->clean) << "\n";
    out << "weakly clean: " << yes_no(report.clean->weakly_clean) << "\n";
  }
  const PeriodicSearch& ps = report.periodic_search;
  if (ps.found)
    out << "periodic class: [" << ps.found->word.to_string() << "] with period " << ps.found->period
        << ", image " << ps.found->image.to_string() << "\n";
  else
    out << "periodic class: none up to length " << report.options.max_word_length << " and period "
        << report.options.max_period << "\n";
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    const Witness& w = report.witnesses[i];
    out << "witness " << i + 1 << " (" << to_string(w.kind) << "): " << w.summary << "\n";
  }
  for (const auto& c : report.citations) out << "because: " << c << "\n";
  for (const auto& d : report.diagnostics) out << "note: " << d << "\n";
  return out.str();
}

}  // namespace iwip
