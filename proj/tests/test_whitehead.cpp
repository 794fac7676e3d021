#include <doctest.h>

#include <random>

#include "iwip/error.hpp"
#include "iwip/fixtures.hpp"
#include "iwip/whitehead.hpp"
#include "test_support.hpp"

using namespace iwip;
using testing::rose_map;
using testing::rose_of;

namespace {

std::set<Turn> adjacency_set(const WhiteheadGraph& w) {
  std::set<Turn> out;
  for (const auto& [t, _] : w.adjacencies) out.insert(t);
  return out;
}

}  // namespace

TEST_CASE("whitehead graphs of small maps") {
  auto perm = whitehead_graph(rose_map({"b", "a"}), 0);
  CHECK(perm.nodes.size() == 4);
  CHECK(perm.adjacencies.empty());
  CHECK_FALSE(perm.connected());
  CHECK(perm.components().size() == 4);

  auto four = whitehead_graph(rose_of(testing::kFourGenerator), 0);
  CHECK(four.nodes.size() == 8);
  CHECK(four.connected());

  auto fib = whitehead_graph(rose_map({"a b", "a"}), 0);
  CHECK(fib.nodes.size() == 4);
  CHECK(fib.connected());

  CHECK_THROWS_AS(whitehead_graph(rose_map({"a b", "a^-1"}), 0), PreconditionError);
}

TEST_CASE("clean and weakly clean") {
  auto four = is_clean(rose_of(testing::kFourGenerator));
  CHECK(four.clean);
  CHECK(four.weakly_clean);
  auto perm = is_clean(rose_map({"b", "a"}));
  CHECK_FALSE(perm.clean);
  CHECK_FALSE(perm.weakly_clean);
  CHECK_FALSE(perm.primitive_exponent);
  CHECK_FALSE(is_weakly_clean(rose_map({"b", "a"})));
  auto fib = is_clean(rose_map({"a b", "a"}));
  CHECK(fib.clean);
  CHECK(fib.weakly_clean);
  CHECK(is_weakly_clean(rose_of(testing::kFourGenerator)));
  CHECK_THROWS_AS(is_clean(rose_map({"a b", "a^-1"})), PreconditionError);
}

TEST_CASE("whitehead graph structure on random maps") {
  std::mt19937_64 rng(21);
  int with_primitive_power = 0;
  for (int trial = 0; trial < 120; ++trial) {
    GraphMap f = (trial % 3 == 0) ? random_rose_map(rng, 2 + rng() % 2, 3)
                                  : random_positive_rose_map(rng, 2 + rng() % 3, 3);
    auto closure = taken_turn_closure(f);
    if (!is_train_track(closure)) continue;
    auto graphs = whitehead_graphs(f, closure);
    for (const auto& w : graphs) {
      // Simple graph whose edges are taken turns, each witnessed by an iterate.
      for (const auto& [t, wit] : w.adjacencies) {
        CHECK_FALSE(t.degenerate());
        CHECK(closure.contains(t));
        CHECK(turns_in_path(iterate_edge(f, wit.edge, wit.depth).path).count(t) == 1);
      }
      // Adjacency is carried along by the derivative.
      for (const auto& [t, _] : w.adjacencies) {
        Turn image = Turn::make(derivative(f, t.first), derivative(f, t.second));
        if (!image.degenerate())
          CHECK(adjacency_set(graphs[f.vertex_image(w.vertex)]).count(image) == 1);
      }
    }
    auto report = is_clean(f);
    if (report.clean) CHECK(report.weakly_clean);
    if (!report.primitive_exponent) continue;
    ++with_primitive_power;
    // The Whitehead graph is unchanged by passing to powers.
    for (unsigned t = 2; t <= 4; ++t) {
      auto ft = power(f, t);
      for (const auto& w : graphs) {
        auto wt = whitehead_graph(ft, w.vertex);
        CHECK(wt.nodes == w.nodes);
        CHECK(adjacency_set(wt) == adjacency_set(w));
      }
    }
  }
  CHECK(with_primitive_power > 20);
}
