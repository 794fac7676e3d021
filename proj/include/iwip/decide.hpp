#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iwip/blowup.hpp"
#include "iwip/graphs.hpp"
#include "iwip/matrix.hpp"
#include "iwip/traintrack.hpp"
#include "iwip/whitehead.hpp"
#include "iwip/words.hpp"

namespace iwip {

enum class AtoroidalAssertion { Unknown, AssertedTrue, AssertedFalse };

enum class Verdict {
  IwipCertifiedGivenAtoroidal,
  NotIwip,
  NotAtoroidalUndetermined,
  Undetermined,
};

std::string to_string(Verdict v);
std::string to_string(AtoroidalAssertion a);
// Accepts "true", "false", "unknown".
AtoroidalAssertion parse_atoroidal_assertion(const std::string& text);

struct AnalysisOptions {
  AtoroidalAssertion atoroidal = AtoroidalAssertion::Unknown;
  unsigned max_word_length = 6;
  unsigned max_period = 12;
  std::size_t carriage_length = 10;
  // Cyclic words longer than this are abandoned by the periodic search.
  std::size_t orbit_length_cap = 10'000;
  // Largest total image length allowed when forming powers of the map.
  std::size_t power_length_cap = 100'000;

  // Throws InputError when a bound is zero.
  void validate() const;
};

struct PeriodicClass {
  Word word;        // canonical rotation of a cyclically reduced word
  unsigned period = 0;
  Word image;       // phi^period(word), reduced but not cyclically reduced
};

struct PeriodicSearch {
  std::optional<PeriodicClass> found;
  std::size_t classes_examined = 0;
  std::size_t classes_abandoned = 0;  // orbit exceeded the length cap
};

// Conjugacy classes by length, then lexicographically by canonical
// rotation; for each, periods 1..max_period.
PeriodicSearch search_periodic_conjugacy(const Automorphism& phi, unsigned max_word_length,
                                         unsigned max_period,
                                         std::size_t orbit_length_cap = 10'000);

enum class WitnessKind {
  Reduction,           // reduction for f or a power of f
  PeriodicFreeFactor,  // phi^j fixes the conjugacy class of a basis element
  PeriodicClass,       // periodic class of a longer word; refutes atoroidality only
  MatrixObstruction,   // transition matrix fails a necessary condition
  NotTrainTrack,       // degenerate taken turn
};

std::string to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::Reduction;
  std::string summary;
  std::optional<ReductionWitness> reduction;
  std::optional<PeriodicClass> periodic;
  std::vector<Turn> turn_chain;  // for NotTrainTrack
};

struct WhiteheadSummary {
  std::size_t vertex = 0;
  std::vector<OrientedEdge> nodes;
  std::vector<Turn> adjacencies;
  std::vector<std::vector<OrientedEdge>> components;
  bool connected = false;
};

struct Report {
  std::string input;  // canonical echo of the input
  AnalysisOptions options;
  TopologicalRepresentative representative;
  Automorphism automorphism{std::vector<Word>{Word::generator(2, 0), Word::generator(2, 1)}};

  bool train_track = false;
  TransitionMatrix matrix;
  bool irreducible = false;
  ExpansionReport expansion;
  PrimitivityResult primitivity;
  std::vector<WhiteheadSummary> whitehead;
  std::optional<CleanReport> clean;
  PeriodicSearch periodic_search;

  std::vector<Witness> witnesses;
  Verdict verdict = Verdict::Undetermined;
  std::vector<std::string> citations;
  std::vector<std::string> diagnostics;
};

Report analyze(const Automorphism& phi, const AnalysisOptions& options = {});
// The marking of a supplied map is taken from its own fundamental group.
Report analyze(const GraphMap& f, const AnalysisOptions& options = {});

// Re-checks a witness from scratch against the report's map and
// automorphism.
bool reverify_witness(const Report& report, const Witness& witness);

}  // namespace iwip
