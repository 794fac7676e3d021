#include <doctest.h>

#include <random>

#include "iwip/decide.hpp"
#include "iwip/error.hpp"
#include "iwip/fixtures.hpp"
#include "iwip/report.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace iwip;
using testing::aut;

namespace {

const Witness* find_kind(const Report& r, WitnessKind k) {
  for (const auto& w : r.witnesses)
    if (w.kind == k) return &w;
  return nullptr;
}

void check_report_invariants(const Report& r) {
  if (r.verdict == Verdict::NotIwip) {
    bool certifying = false;
    for (const auto& w : r.witnesses)
      if (w.kind == WitnessKind::Reduction || w.kind == WitnessKind::PeriodicFreeFactor) certifying = true;
    CHECK(certifying);
  }
  for (const auto& w : r.witnesses) CHECK(reverify_witness(r, w));
  if (r.verdict == Verdict::IwipCertifiedGivenAtoroidal) {
    REQUIRE(r.clean);
    CHECK(r.clean->clean);
    CHECK(r.options.atoroidal == AtoroidalAssertion::AssertedTrue);
    CHECK(r.irreducible);
    for (bool e : r.expansion.edge_expanding) CHECK(e);
  }
  CHECK_FALSE(r.citations.empty());
}

}  // namespace

TEST_CASE("options") {
  AnalysisOptions o;
  CHECK(o.max_word_length == 6);
  CHECK(o.max_period == 12);
  CHECK(o.carriage_length == 10);
  o.max_period = 0;
  CHECK_THROWS_AS(o.validate(), InputError);
  CHECK_THROWS_AS(analyze(Automorphism::identity(2), o), InputError);
  CHECK(parse_atoroidal_assertion("true") == AtoroidalAssertion::AssertedTrue);
  CHECK(parse_atoroidal_assertion("false") == AtoroidalAssertion::AssertedFalse);
  CHECK(parse_atoroidal_assertion("unknown") == AtoroidalAssertion::Unknown);
  CHECK_THROWS_AS(parse_atoroidal_assertion("maybe"), InputError);
}

TEST_CASE("periodic conjugacy search") {
  auto four = search_periodic_conjugacy(aut(testing::kFourGenerator), 1, 5);
  REQUIRE(four.found);
  CHECK(four.found->word.to_string() == "a");
  CHECK(four.found->period == 5);
  CHECK(four.found->image.to_string() == "c d a d^-1 c^-1");
  CHECK_FALSE(search_periodic_conjugacy(aut(testing::kFourGenerator), 1, 4).found);

  auto id = search_periodic_conjugacy(Automorphism::identity(2), 1, 1);
  REQUIRE(id.found);
  CHECK(id.found->word.to_string() == "a");
  CHECK(id.found->period == 1);

  auto tri = aut("a -> b; b -> c; c -> a b");
  CHECK_FALSE(search_periodic_conjugacy(tri, 4, 6).found);
  CHECK_FALSE(oracle::periodic_class(tri, 4, 6));
  CHECK_FALSE(search_periodic_conjugacy(tri, 6, 12).found);
  CHECK_FALSE(oracle::periodic_class(tri, 6, 12));
  CHECK_THROWS_AS(search_periodic_conjugacy(tri, 0, 3), InputError);
}

TEST_CASE("periodic search agrees with exhaustive enumeration") {
  std::mt19937_64 rng(3);
  int hits = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto phi = random_positive_automorphism(rng, 2 + rng() % 2, 5, 1 + rng() % 5);
    auto got = search_periodic_conjugacy(phi, 4, 6);
    auto want = oracle::periodic_class(phi, 4, 6);
    REQUIRE(got.found.has_value() == want.has_value());
    if (!want) continue;
    ++hits;
    CHECK(got.found->word.size() == want->word.size());
    CHECK(oracle::conjugate(oracle::to_seq(power(phi, got.found->period).apply(got.found->word)),
                            oracle::to_seq(got.found->word)));
  }
  CHECK(hits > 0);
}

TEST_CASE("analysis of the four-generator example") {
  Report r = analyze(aut(testing::kFourGenerator));
  CHECK(r.verdict == Verdict::NotIwip);
  CHECK(r.train_track);
  CHECK(r.irreducible);
  REQUIRE(r.clean);
  CHECK(r.clean->clean);
  const Witness* w = find_kind(r, WitnessKind::PeriodicFreeFactor);
  REQUIRE(w);
  CHECK(w->summary == "phi^5-invariant proper free factor <a>");
  REQUIRE(w->periodic);
  CHECK(w->periodic->image.to_string() == "c d a d^-1 c^-1");
  check_report_invariants(r);
}

TEST_CASE("analysis of the identity") {
  Report r = analyze(Automorphism::identity(2));
  CHECK(r.verdict == Verdict::NotIwip);
  const Witness* red = find_kind(r, WitnessKind::Reduction);
  REQUIRE(red);
  REQUIRE(red->reduction);
  CHECK(red->reduction->check.edges == std::vector<std::size_t>{0});
  const Witness* ff = find_kind(r, WitnessKind::PeriodicFreeFactor);
  REQUIRE(ff);
  CHECK(ff->periodic->period == 1);
  check_report_invariants(r);
}

TEST_CASE("certification requires the atoroidal assertion") {
  auto tri = aut("a -> b; b -> c; c -> a b");
  AnalysisOptions o;
  o.atoroidal = AtoroidalAssertion::AssertedTrue;
  Report r = analyze(tri, o);
  CHECK(r.verdict == Verdict::IwipCertifiedGivenAtoroidal);
  check_report_invariants(r);
  CHECK(analyze(tri).verdict == Verdict::Undetermined);
  o.atoroidal = AtoroidalAssertion::AssertedFalse;
  CHECK(analyze(tri, o).verdict == Verdict::NotAtoroidalUndetermined);

  // Powers of a certified map are again clean representatives.
  auto f = rose_representative(tri).map;
  for (unsigned m = 1; m <= 3; ++m) CHECK(is_clean(power(f, m)).clean);
}

TEST_CASE("periodic longer class refutes atoroidality only") {
  // The commutator class is fixed by the square of any rank-two automorphism.
  AnalysisOptions o;
  o.atoroidal = AtoroidalAssertion::AssertedTrue;
  Report r = analyze(aut("a -> a b; b -> a"), o);
  REQUIRE(r.clean);
  CHECK(r.clean->clean);
  CHECK(r.verdict == Verdict::NotAtoroidalUndetermined);
  const Witness* w = find_kind(r, WitnessKind::PeriodicClass);
  REQUIRE(w);
  CHECK(w->periodic->word.size() == 4);
  CHECK(w->periodic->period == 2);
  CHECK_FALSE(r.diagnostics.empty());
  check_report_invariants(r);
}

TEST_CASE("non-train-track inputs") {
  Report r = analyze(aut("a -> a b; b -> a^-1"));
  CHECK_FALSE(r.train_track);
  const Witness* w = find_kind(r, WitnessKind::NotTrainTrack);
  REQUIRE(w);
  CHECK(w->turn_chain.size() == 4);
  CHECK_FALSE(r.clean);
  check_report_invariants(r);
}

TEST_CASE("claimed graph-map inputs") {
  Graph theta(2, {{0, 1}, {0, 1}, {0, 1}}, {"x", "y", "z"});
  GraphMap swap(theta, {0, 1},
                {parse_path(theta, "y"), parse_path(theta, "x"), parse_path(theta, "z")});
  Report r = analyze(swap);
  CHECK(r.representative.marking == Marking::Claimed);
  CHECK(r.verdict == Verdict::NotIwip);
  check_report_invariants(r);
}

TEST_CASE("reports are deterministic and sound on generated automorphisms") {
  auto fixtures = generate_fixtures(2024, 25, 2, 4);
  for (const auto& fx : fixtures) {
    AnalysisOptions o;
    o.max_word_length = 4;
    o.max_period = 6;
    Report a = analyze(fx.automorphism, o);
    Report b = analyze(fx.automorphism, o);
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
    CHECK(report_to_text(a) == report_to_text(b));
    check_report_invariants(a);
  }
}
