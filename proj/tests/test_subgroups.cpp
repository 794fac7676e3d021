#include <doctest.h>

#include <random>

#include "iwip/error.hpp"
#include "iwip/fixtures.hpp"
#include "iwip/graph_io.hpp"
#include "iwip/subgroups.hpp"
#include "iwip/traintrack.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace iwip;
using testing::rose_map;
using testing::rose_of;
using testing::word;

namespace {

CoreGraph core(std::size_t rank, const std::vector<std::string>& gens) {
  std::vector<Word> ws;
  for (const auto& g : gens) ws.push_back(word(g, rank));
  return stallings_core(ws);
}

EdgePath path(std::size_t rank, const std::string& text) {
  return parse_path(Graph::rose(rank), text);
}

Segment seg(std::size_t rank, const std::string& text) { return path(rank, text).edges; }

}  // namespace

TEST_CASE("stallings cores") {
  auto ab = core(3, {"a", "b"});
  CHECK(ab.vertex_count == 1);
  CHECK(ab.edges.size() == 2);
  CHECK(ab.betti_number() == 2);

  auto conj = core(2, {"a b a^-1"});
  CHECK(conj.vertex_count == 1);
  REQUIRE(conj.edges.size() == 1);
  CHECK(conj.edges[0].label == OrientedEdge::forward(1));
  CHECK(isomorphic(conj, core(2, {"b"})));

  auto whole = core(2, {"a", "b"});
  CHECK(whole.vertex_count == 1);
  CHECK(is_finite_index(whole));

  CHECK_THROWS_AS(stallings_core(std::vector<Word>{}), InputError);
  CHECK_THROWS_AS(core(2, {"a a^-1"}), InputError);
}

TEST_CASE("finite index") {
  CHECK(is_finite_index(core(2, {"a", "b"})));
  CHECK_FALSE(is_finite_index(core(3, {"a", "b"})));
  auto two = core(2, {"a a", "b", "a b a^-1"});
  CHECK(is_finite_index(two));
  CHECK(two.vertex_count == 2);
  CHECK(oracle::coset_index(2, {{1, 1}, {2}, {1, 2, -1}}) == 2u);
  CHECK_FALSE(oracle::coset_index(2, {{1}}));
  CHECK_FALSE(is_finite_index(core(2, {"a"})));
}

TEST_CASE("lifting paths") {
  auto ab = core(3, {"a", "b"});
  CHECK(lift_path(ab, path(3, "a b")));
  CHECK_FALSE(lift_path(ab, path(3, "c")));
  auto conj = core(2, {"a b a^-1"});
  auto lift = lift_path(conj, path(2, "b b"));
  REQUIRE(lift);
  CHECK(lift->vertices.size() == 3);
}

TEST_CASE("leaf segments") {
  CHECK_THROWS_AS(leaf_segments(rose_map({"b", "a"}), 1), PreconditionError);
  CHECK_THROWS_AS(leaf_segments(rose_map({"a b", "a^-1"}), 1), PreconditionError);
  auto fib = rose_map({"a b", "a"});
  auto one = leaf_segments(fib, 1);
  std::set<Segment> letters{seg(2, "a"), seg(2, "a^-1"), seg(2, "b"), seg(2, "b^-1")};
  CHECK(one.segments == letters);
  auto four = leaf_segments(rose_of(testing::kFourGenerator), 2);
  CHECK(four.segments.count(seg(4, "d a^-1")) == 1);
  CHECK(four.segments.count(seg(4, "a d^-1")) == 1);
  CHECK_THROWS_AS(leaf_segments(fib, kMaxSegmentLength + 1), CapExceeded);
  CHECK_THROWS_AS(leaf_segments(rose_of(testing::kFourGenerator), 12, 10), CapExceeded);
}

TEST_CASE("leaf segments agree with literal iteration and are monotone") {
  std::vector<GraphMap> maps{rose_map({"a b", "a"}), rose_of(testing::kFourGenerator),
                             rose_of("a -> b; b -> c; c -> a b")};
  std::mt19937_64 rng(41);
  while (maps.size() < 12) {
    auto f = random_positive_rose_map(rng, 2 + rng() % 2, 3);
    if (primitive_exponent(f).exponent) maps.push_back(f);
  }
  for (const auto& f : maps) {
    for (std::size_t L = 1; L <= 5; ++L) {
      auto s = leaf_segments(f, L);
      std::set<oracle::Seq> got;
      for (const auto& x : s.segments) {
        got.insert(oracle::to_seq(x));
        Segment inv;
        for (auto it = x.rbegin(); it != x.rend(); ++it) inv.push_back(it->inverse());
        CHECK(s.segments.count(inv) == 1);
      }
      CHECK(got == oracle::windows_by_iteration(f, L, 14, 200000));
      // Length-L windows of the length-(L+1) set give the length-L set.
      auto longer = leaf_segments(f, L + 1);
      std::set<Segment> windows;
      for (const auto& x : longer.segments) {
        windows.emplace(x.begin(), x.end() - 1);
        windows.emplace(x.begin() + 1, x.end());
      }
      CHECK(windows == s.segments);
    }
  }
}

TEST_CASE("carriage") {
  auto fib = rose_map({"a b", "a"});
  auto a = core(2, {"a"});
  CHECK_FALSE(is_finite_index(a));
  CHECK_FALSE(carries_segments(a, fib, 1));
  CHECK_FALSE(carries_segments(a, fib, 2));
  auto result = test_carriage(a, fib, 10);
  REQUIRE(result.refuted_at);
  CHECK(*result.refuted_at <= 2);
  auto whole = core(2, {"a", "b"});
  for (std::size_t L = 1; L <= 6; ++L) CHECK(carries_segments(whole, fib, L));
  CHECK_FALSE(test_carriage(whole, fib, 6).refuted_at);
  CHECK(test_carriage(whole, fib, 6).max_length == 6);

  auto four = rose_of(testing::kFourGenerator);
  auto r = test_carriage(core(4, {"a"}), four, 10);
  CHECK(r.refuted_at);
  CHECK_THROWS_AS(test_carriage(core(3, {"a"}), fib, 3), InputError);
}

TEST_CASE("core file round trip") {
  auto c = core(2, {"a a", "b", "a b a^-1"});
  auto j = core_to_json(c);
  CHECK(core_from_json(j) == c);
  auto bad = j;
  bad["edges"][0][3] = "b";
  bad["edges"][1][3] = "b";
  CHECK_THROWS_AS(core_from_json(bad), InputError);
}

TEST_CASE("core properties") {
  std::mt19937_64 rng(17);
  auto random_seq = [&](std::size_t rank, std::size_t max_len) {
    oracle::Seq s;
    std::size_t n = 1 + rng() % max_len;
    for (std::size_t i = 0; i < n; ++i) {
      int x = static_cast<int>(1 + rng() % rank) * ((rng() % 2) ? 1 : -1);
      if (!s.empty() && s.back() == -x) continue;
      s.push_back(x);
    }
    return s;
  };
  auto to_word = [](std::size_t rank, const oracle::Seq& s) {
    std::vector<Letter> ls;
    for (int x : s) ls.push_back({static_cast<std::size_t>(std::abs(x) - 1), x > 0 ? 1 : -1});
    return Word::reduce(rank, ls);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rank = 2 + rng() % 2;
    std::vector<Word> gens;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) gens.push_back(to_word(rank, random_seq(rank, 5)));
    bool trivial = true;
    for (const auto& g : gens) trivial = trivial && g.empty();
    if (trivial) continue;
    CoreGraph c = stallings_core(gens);
    // Immersion with every vertex of degree at least two.
    std::set<std::pair<std::size_t, std::size_t>> ends;
    std::vector<std::size_t> degree(c.vertex_count, 0);
    for (const auto& e : c.edges) {
      ++degree[e.from];
      ++degree[e.to];
      CHECK(e.label.is_forward());
      CHECK(ends.emplace(e.from, e.label.code()).second);
      CHECK(ends.emplace(e.to, e.label.code() ^ 1).second);
    }
    for (std::size_t v = 0; v < c.vertex_count; ++v) CHECK(degree[v] >= 2);
    CHECK(oracle::cores_isomorphic(c, c.canonical_form()));
    CHECK(isomorphic(c, c.canonical_form()));
  }
}
