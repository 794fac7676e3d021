#include "iwip/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "iwip/blowup.hpp"
#include "iwip/decide.hpp"
#include "iwip/error.hpp"
#include "iwip/fixtures.hpp"
#include "iwip/graph_io.hpp"
#include "iwip/report.hpp"
#include "iwip/subgroups.hpp"
#include "iwip/traintrack.hpp"
#include "iwip/whitehead.hpp"

namespace iwip::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
  std::string input;
  std::string inline_map;
  std::string format;
  bool auto_reduce = false;
};

struct LoadedInput {
  std::string label;
  std::optional<Automorphism> automorphism;
  GraphMap map;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read \"" + path.string() + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_json(const fs::path& path, const std::string& text) {
  if (path.extension() == ".json") return true;
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

LoadedInput load_text(const std::string& label, const std::string& text, bool json_input,
                      bool auto_reduce, std::ostream& err) {
  LoadedInput in;
  in.label = label;
  try {
    if (json_input) {
      in.map = parse_graph_map(text);
    } else {
      DslOptions options;
      options.auto_reduce = auto_reduce;
      options.warn = [&err, &label](const std::string& m) { err << "warning: " << label << ": " << m << "\n"; };
      in.automorphism = parse_automorphism(text, options);
      in.map = rose_representative(*in.automorphism).map;
    }
  } catch (const InputError& e) {
    throw InputError(label + ": " + e.what());
  }
  return in;
}

LoadedInput load_path(const fs::path& path, bool auto_reduce, std::ostream& err) {
  std::string text = read_file(path);
  return load_text(path.string(), text, looks_like_json(path, text), auto_reduce, err);
}

LoadedInput load(const Common& c, std::ostream& err) {
  if (!c.input.empty() && !c.inline_map.empty())
    throw InputError("give either an input file or --map, not both");
  if (!c.inline_map.empty()) return load_text("--map", c.inline_map, false, c.auto_reduce, err);
  if (c.input.empty()) throw InputError("no input: give a file or --map");
  return load_path(c.input, c.auto_reduce, err);
}

bool json_format(const Common& c) {
  std::string f = c.format;
  if (f.empty()) {
    const char* env = std::getenv("IWIP_FORMAT");
    f = env && *env ? env : "text";
  }
  if (f != "text" && f != "json") throw InputError("format must be text or json, got \"" + f + "\"");
  return f == "json";
}

void add_common(CLI::App* sub, Common& c, bool needs_input = true) {
  if (needs_input) sub->add_option("input", c.input, "Automorphism (.aut) or graph-map (.json) file");
  sub->add_option("--map", c.inline_map, "Inline automorphism, e.g. \"a->b; b->a b\"");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--auto-reduce", c.auto_reduce, "Freely reduce images instead of rejecting them");
}

std::string print_json(const json& j) { return j.dump(2) + "\n"; }

// --- analyze -------------------------------------------------------------

int cmd_analyze(const Common& c, const AnalysisOptions& options, std::ostream& out,
                std::ostream& err) {
  const bool as_json = json_format(c);
  auto analyze_input = [&](const LoadedInput& in) {
    return in.automorphism ? analyze(*in.automorphism, options) : analyze(in.map, options);
  };
  if (c.inline_map.empty() && !c.input.empty() && fs::is_directory(c.input)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(c.input)) {
      auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".aut" || ext == ".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    int status = kOk;
    json batch = json::array();
    for (const auto& path : files) {
      std::string name = path.filename().string();
      try {
        Report r = analyze_input(load_path(path, c.auto_reduce, err));
        if (as_json)
          batch.push_back({{"file", name}, {"report", report_to_json(r)}});
        else
          out << "== " << name << " ==\n" << report_to_text(r);
      } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        if (as_json) batch.push_back({{"file", name}, {"error", e.what()}});
        status = kInputError;
      }
    }
    if (as_json) out << print_json(batch);
    return status;
  }
  Report r = analyze_input(load(c, err));
  out << (as_json ? print_json(report_to_json(r)) : report_to_text(r));
  return kOk;
}

// --- tt-check ------------------------------------------------------------

int cmd_tt_check(const Common& c, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(c, err);
  const Graph& g = in.map.graph();
  TurnClosure closure = taken_turn_closure(in.map);
  bool tt = is_train_track(closure);
  std::vector<Turn> chain;
  if (closure.degenerate) chain = closure.chain(*closure.degenerate);
  if (json_format(c)) {
    json j = {{"train_track", tt}, {"taken_turns", closure.taken.size()}};
    json jc = json::array();
    for (const Turn& t : chain) {
      const TurnWitness& w = closure.taken.at(t);
      jc.push_back({{"turn", turn_to_json(g, t)}, {"edge", g.name(w.edge)}, {"depth", w.depth}});
    }
    j["degenerate_turn_chain"] = jc;
    out << print_json(j);
    return kOk;
  }
  if (tt) {
    out << "train-track map: no iterate of any edge cancels\n";
    out << "taken turns: " << closure.taken.size() << "\n";
    return kOk;
  }
  out << "not a train-track map\n";
  out << "degenerate turn " << turn_to_string(g, chain.back()) << " is taken:\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const TurnWitness& w = closure.taken.at(chain[i]);
    out << "  " << (i ? "-> " : "") << turn_to_string(g, chain[i]) << " in f^" << w.depth << "("
        << g.name(w.edge) << ")\n";
  }
  return kOk;
}

// --- matrix --------------------------------------------------------------

int cmd_matrix(const Common& c, unsigned power_m, std::ostream& out, std::ostream& err) {
  if (power_m == 0) throw InputError("--power must be at least 1");
  LoadedInput in = load(c, err);
  TransitionMatrix a = transition_matrix(in.map);
  TransitionMatrix m = matrix_power(a, power_m);
  auto prim = primitive_exponent_by_power_bound(a);
  if (json_format(c)) {
    out << print_json({{"power", power_m},
                       {"matrix", matrix_to_json(m)},
                       {"positive", m.is_positive()},
                       {"irreducible", is_irreducible(a)},
                       {"primitive_exponent", prim ? json(*prim) : json(nullptr)}});
    return kOk;
  }
  out << "A(f)^" << power_m << ":\n";
  for (const auto& row : m.to_grid()) {
    out << " ";
    for (const auto& x : row) out << " " << x;
    out << "\n";
  }
  out << "positive: " << (m.is_positive() ? "yes" : "no") << "\n";
  out << "irreducible: " << (is_irreducible(a) ? "yes" : "no") << "\n";
  out << "primitive exponent: " << (prim ? std::to_string(*prim) : "none") << "\n";
  return kOk;
}

// --- whitehead -----------------------------------------------------------

int cmd_whitehead(const Common& c, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(c, err);
  const Graph& g = in.map.graph();
  TurnClosure closure = taken_turn_closure(in.map);
  auto graphs = whitehead_graphs(in.map, closure);
  if (json_format(c)) {
    json arr = json::array();
    for (const auto& wh : graphs) {
      json nodes = json::array(), adj = json::array(), comps = json::array();
      for (OrientedEdge e : wh.nodes) nodes.push_back(g.name(e));
      for (const auto& [t, w] : wh.adjacencies) adj.push_back(turn_to_json(g, t));
      for (const auto& comp : wh.components()) {
        json cj = json::array();
        for (OrientedEdge e : comp) cj.push_back(g.name(e));
        comps.push_back(cj);
      }
      arr.push_back({{"vertex", wh.vertex}, {"nodes", nodes}, {"adjacencies", adj},
                     {"components", comps}, {"connected", wh.connected()}});
    }
    out << print_json({{"whitehead", arr}});
    return kOk;
  }
  for (const auto& wh : graphs) {
    out << "vertex " << wh.vertex << ": " << (wh.connected() ? "connected" : "disconnected") << "\n";
    for (const auto& [t, w] : wh.adjacencies)
      out << "  " << g.name(t.first) << " -- " << g.name(t.second) << "\n";
  }
  return kOk;
}

// --- blowup --------------------------------------------------------------

int cmd_blowup(const Common& c, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(c, err);
  BlowUp b = blow_up(in.map);
  ReductionCheck check = verify_reduction(b.blown, b.delta_edges);
  bool contracts = contract_sub_edges(b) == in.map;
  const Graph& h = b.blown.graph();
  if (json_format(c)) {
    json delta = json::array();
    for (std::size_t k : b.delta_edges) delta.push_back(h.edge_name(k));
    out << print_json({{"blown", graph_map_to_json(b.blown)},
                       {"delta", delta},
                       {"checks",
                        {{"invariant", check.invariant},
                         {"homotopically_nontrivial", check.nontrivial},
                         {"inclusion_not_homotopy_equivalence", check.not_homotopy_equivalence}}},
                       {"reduction", check.passed()},
                       {"contracts_to_input", contracts},
                       {"low_degree_vertices", b.low_degree_vertices}});
    return kOk;
  }
  out << "blown-up graph: " << h.vertex_count() << " vertices, " << h.edge_count() << " edges\n";
  out << "reduction: " << (check.passed() ? "verified" : "fails check " + check.failed_check())
      << " (b1 of subgraph " << check.subgraph_betti << ", of graph " << check.graph_betti << ")\n";
  out << "contracting sub-edges recovers the input: " << (contracts ? "yes" : "no") << "\n";
  if (!b.low_degree_vertices.empty())
    out << "vertices of degree below 3: " << b.low_degree_vertices.size() << "\n";
  out << "blown-up map:\n" << print_graph_map(b.blown);
  return kOk;
}

// --- core / carriage / segments ------------------------------------------

CoreGraph build_core(const Common& c, std::size_t rank, const std::vector<std::string>& gens,
                     std::ostream& err, std::optional<LoadedInput>* loaded = nullptr) {
  if (gens.empty()) throw InputError("give at least one --gen");
  Graph base;
  std::optional<LoadedInput> in;
  if (!c.input.empty() || !c.inline_map.empty()) {
    in = load(c, err);
    base = in->map.graph();
  } else if (rank >= 1) {
    base = Graph::rose(rank);
  } else {
    throw InputError("give an input or --rank for the base graph");
  }
  std::vector<EdgePath> loops;
  for (const auto& text : gens) {
    if (base.vertex_count() == 1 && (!in || in->automorphism)) {
      Word w = parse_word(text, base.edge_count());
      EdgePath p{0, {}};
      for (Letter l : w.letters()) p.edges.push_back(OrientedEdge::from_letter(l));
      loops.push_back(std::move(p));
    } else {
      loops.push_back(tighten(base, parse_path(base, text)));
    }
  }
  CoreGraph core = stallings_core(base, loops);
  if (loaded) *loaded = std::move(in);
  return core;
}

int cmd_core(const Common& c, std::size_t rank, const std::vector<std::string>& gens,
             std::ostream& out, std::ostream& err) {
  CoreGraph core = build_core(c, rank, gens, err);
  bool finite = is_finite_index(core);
  if (json_format(c)) {
    json j = core_to_json(core);
    j["finite_index"] = finite;
    j["rank"] = core.betti_number();
    out << print_json(j);
    return kOk;
  }
  out << "core: " << core.vertex_count << " vertices, " << core.edges.size() << " edges, rank "
      << core.betti_number() << "\n";
  out << "finite index: " << (finite ? "yes" : "no") << "\n";
  for (const auto& e : core.edges)
    out << "  " << e.from << " -" << core.base.name(e.label) << "-> " << e.to << "\n";
  return kOk;
}

int cmd_carriage(const Common& c, const std::vector<std::string>& gens, std::size_t max_length,
                 std::ostream& out, std::ostream& err) {
  std::optional<LoadedInput> in;
  CoreGraph core = build_core(c, 0, gens, err, &in);
  CarriageResult r = test_carriage(core, in->map, max_length);
  const Graph& g = in->map.graph();
  if (json_format(c)) {
    out << print_json({{"max_length", r.max_length},
                       {"refuted_at", r.refuted_at ? json(*r.refuted_at) : json(nullptr)},
                       {"unlifted_segment", r.unlifted ? json(segment_to_string(g, *r.unlifted))
                                                       : json(nullptr)},
                       {"finite_index", is_finite_index(core)}});
    return kOk;
  }
  if (r.refuted_at)
    out << "refuted at L = " << *r.refuted_at << ": segment " << segment_to_string(g, *r.unlifted)
        << " does not lift to the core\n";
  else
    out << "carried up to L = " << r.max_length << " (inconclusive)\n";
  return kOk;
}

int cmd_segments(const Common& c, std::size_t length, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(c, err);
  const Graph& g = in.map.graph();
  LeafSegmentSet set = leaf_segments(in.map, length);
  if (json_format(c)) {
    json segs = json::array();
    for (const auto& s : set.segments) segs.push_back(segment_to_string(g, s));
    out << print_json({{"length", length}, {"count", set.segments.size()}, {"segments", segs}});
    return kOk;
  }
  out << set.segments.size() << " leaf segments of length " << length << "\n";
  for (const auto& s : set.segments) out << "  " << segment_to_string(g, s) << "\n";
  return kOk;
}

// --- generate ------------------------------------------------------------

int cmd_generate(std::uint64_t seed, std::size_t count, std::size_t min_rank, std::size_t max_rank,
                 const std::string& out_dir, std::ostream& out) {
  auto fixtures = generate_fixtures(seed, count, min_rank, max_rank);
  if (out_dir.empty()) {
    for (std::size_t i = 0; i < fixtures.size(); ++i) out << (i ? "\n" : "") << fixtures[i].dsl;
    return kOk;
  }
  fs::create_directories(out_dir);
  for (const auto& fx : fixtures) {
    fs::path path = fs::path(out_dir) / (fx.name + ".aut");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write \"" + path.string() + "\"");
    file << fx.dsl;
    out << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Train-track and fully-irreducibility checks for free group automorphisms", "iwip"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  AnalysisOptions options;
  std::string atoroidal = "unknown";
  unsigned power_m = 1;
  std::size_t rank = 0, length = 1, max_length = 10;
  std::vector<std::string> gens;
  std::uint64_t seed = 0;
  std::size_t count = 1, min_rank = 2, max_rank = 4;
  std::string out_dir;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline and report a verdict");
  add_common(analyze_cmd, common);
  analyze_cmd->add_option("--lmax", options.max_word_length, "Periodic search word length bound");
  analyze_cmd->add_option("--pmax", options.max_period, "Periodic search period bound");
  analyze_cmd->add_option("--carriage-length", options.carriage_length, "Carriage window bound");
  analyze_cmd->add_option("--orbit-cap", options.orbit_length_cap, "Orbit word length cap");
  analyze_cmd->add_option("--atoroidal", atoroidal, "Atoroidality assertion")
      ->check(CLI::IsMember({"true", "false", "unknown"}));

  auto* tt_cmd = app.add_subcommand("tt-check", "Decide whether the map is a train track");
  add_common(tt_cmd, common);
  auto* matrix_cmd = app.add_subcommand("matrix", "Print a power of the transition matrix");
  add_common(matrix_cmd, common);
  matrix_cmd->add_option("--power", power_m, "Exponent m of A(f)^m");
  auto* wh_cmd = app.add_subcommand("whitehead", "Print the Whitehead graphs");
  add_common(wh_cmd, common);
  auto* blowup_cmd = app.add_subcommand("blowup", "Blow up disconnected Whitehead graphs");
  add_common(blowup_cmd, common);
  auto* core_cmd = app.add_subcommand("core", "Stallings core of a subgroup");
  add_common(core_cmd, common);
  core_cmd->add_option("--rank", rank, "Rank of the rose when no input is given");
  core_cmd->add_option("--gen", gens, "Subgroup generator (word or closed edge path)");
  auto* carriage_cmd = app.add_subcommand("carriage", "Bounded leaf-carriage test for a subgroup");
  add_common(carriage_cmd, common);
  carriage_cmd->add_option("--gen", gens, "Subgroup generator")->required();
  carriage_cmd->add_option("--max-length", max_length, "Largest window size");
  auto* segments_cmd = app.add_subcommand("segments", "Leaf segments of a given length");
  add_common(segments_cmd, common);
  segments_cmd->add_option("--length", length, "Window length L");
  auto* generate_cmd = app.add_subcommand("generate", "Write seeded random positive automorphisms");
  generate_cmd->add_option("--seed", seed, "Random seed");
  generate_cmd->add_option("--count", count, "Number of fixtures");
  generate_cmd->add_option("--rank-min", min_rank, "Smallest rank");
  generate_cmd->add_option("--rank-max", max_rank, "Largest rank");
  generate_cmd->add_option_function<std::size_t>(
      "--rank", [&](const std::size_t& r) { min_rank = max_rank = r; }, "Fixed rank");
  generate_cmd->add_option("--out", out_dir, "Directory for the .aut files (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze_cmd) {
      options.atoroidal = parse_atoroidal_assertion(atoroidal);
      if (!common.input.empty() && !fs::is_directory(common.input) && !fs::exists(common.input))
        throw InputError("no such file \"" + common.input + "\"");
      return cmd_analyze(common, options, out, err);
    }
    if (*tt_cmd) return cmd_tt_check(common, out, err);
    if (*matrix_cmd) return cmd_matrix(common, power_m, out, err);
    if (*wh_cmd) return cmd_whitehead(common, out, err);
    if (*blowup_cmd) return cmd_blowup(common, out, err);
    if (*core_cmd) return cmd_core(common, rank, gens, out, err);
    if (*carriage_cmd) {
      if (common.input.empty() && common.inline_map.empty())
        throw InputError("carriage needs a map: give a file or --map");
      return cmd_carriage(common, gens, max_length, out, err);
    }
    if (*segments_cmd) return cmd_segments(common, length, out, err);
    if (*generate_cmd) return cmd_generate(seed, count, min_rank, max_rank, out_dir, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace iwip::cli
