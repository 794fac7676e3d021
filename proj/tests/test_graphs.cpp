#include <doctest.h>

#include <random>

#include "iwip/error.hpp"
#include "iwip/fixtures.hpp"
#include "iwip/graph_io.hpp"
#include "iwip/graphs.hpp"
#include "iwip/traintrack.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace iwip;
using testing::path_text;
using testing::rose_map;
using testing::rose_of;

TEST_CASE("tightening") {
  Graph g(2, {{0, 1}, {1, 1}, {1, 0}}, {"e1", "e2", "e3"});
  auto p = tighten(g, EdgePath{0, {OrientedEdge::forward(0), OrientedEdge::backward(0)}});
  CHECK(p.empty());
  CHECK(p.start == 0);
  auto q = parse_path(g, "e1 e2 e3");
  CHECK(tighten(g, q) == q);
  auto r = EdgePath{0, {OrientedEdge::forward(0), OrientedEdge::forward(1), OrientedEdge::backward(1),
                        OrientedEdge::forward(2)}};
  CHECK(path_text(identity_map(g), tighten(g, r)) == "e1 e3");
  CHECK_THROWS_AS(validate_path(g, EdgePath{0, {OrientedEdge::forward(1)}}), InputError);
}

TEST_CASE("mapping paths") {
  auto f = rose_of(testing::kFourGenerator);
  auto ab = parse_path(f.graph(), "a b");
  CHECK(path_text(f, map_path(f, ab)) == "b c");
  CHECK(map_path(f, EdgePath{0, {}}).empty());
  auto h = rose_map({"a b", "a^-1"});
  CHECK(path_text(h, map_path(h, parse_path(h.graph(), "a b"))) == "a b a^-1");
}

TEST_CASE("iterating edges") {
  auto f = rose_of(testing::kFourGenerator);
  auto a = OrientedEdge::forward(0), c = OrientedEdge::forward(2);
  CHECK(path_text(f, iterate_edge(f, a, 1).path) == "b");
  CHECK(path_text(f, iterate_edge(f, c, 2).path) == "d^-1 c^-1 b^-1");
  auto swap = rose_map({"b", "a"});
  CHECK(path_text(swap, iterate_edge(swap, a, 2).path) == "a");
  auto fib = rose_map({"a b", "a"});
  auto it = iterate_edge(fib, a, 40, 100);
  CHECK(it.truncated);
  CHECK(it.steps < 40);
}

TEST_CASE("derivative") {
  auto f = rose_of(testing::kFourGenerator);
  CHECK(derivative(f, OrientedEdge::forward(0)) == OrientedEdge::forward(1));
  CHECK(derivative(f, OrientedEdge::backward(2)) == OrientedEdge::forward(0));
  CHECK(derivative(f, OrientedEdge::forward(1)) == OrientedEdge::forward(2));
}

TEST_CASE("turns in paths") {
  auto f = rose_of(testing::kFourGenerator);
  CHECK(turns_in_path(parse_path(f.graph(), "a")).empty());
  auto t = turns_in_path(parse_path(f.graph(), "a b"));
  CHECK(t == std::set<Turn>{Turn::make(OrientedEdge::backward(0), OrientedEdge::forward(1))});
  auto d = turns_in_path(f.image(OrientedEdge::forward(3)));
  CHECK(d == std::set<Turn>{Turn::make(OrientedEdge::forward(3), OrientedEdge::backward(2))});
}

TEST_CASE("rose representatives") {
  auto rep = rose_representative(testing::aut(testing::kFourGenerator));
  CHECK(rep.marking == Marking::Rose);
  CHECK(rep.map.graph().vertex_count() == 1);
  CHECK(rep.map.graph().edge_count() == 4);
  const char* expected[] = {"b", "c", "d a^-1", "d^-1 c^-1"};
  for (std::size_t k = 0; k < 4; ++k) CHECK(path_text(rep.map, rep.map.edge_images()[k]) == expected[k]);
  CHECK(rep.min_degree_3);
  auto id = rose_representative(Automorphism::identity(2));
  CHECK(path_text(id.map, id.map.edge_images()[0]) == "a");
  CHECK(path_text(id.map, id.map.edge_images()[1]) == "b");
}

TEST_CASE("induced endomorphism and homotopy equivalence") {
  auto phi = testing::aut(testing::kFourGenerator);
  auto f = rose_representative(phi).map;
  CHECK(induced_endomorphism(f).images == phi.images());
  CHECK(is_homotopy_equivalence(f));
  auto collapse = rose_map({"b", "b"});
  auto ind = induced_endomorphism(collapse);
  CHECK(ind.images[0].to_string() == "b");
  CHECK(ind.images[1].to_string() == "b");
  CHECK_FALSE(is_homotopy_equivalence(collapse));
  CHECK_THROWS_AS(claimed_representative(collapse), InputError);

  // Theta graph: two vertices joined by three edges; x -> y swaps two arcs.
  Graph theta(2, {{0, 1}, {0, 1}, {0, 1}}, {"x", "y", "z"});
  GraphMap swap(theta, {0, 1},
                {parse_path(theta, "y"), parse_path(theta, "x"), parse_path(theta, "z")});
  CHECK(is_homotopy_equivalence(swap));
  auto rep = claimed_representative(swap);
  CHECK(rep.marking == Marking::Claimed);
  CHECK(rep.min_degree_3);
}

TEST_CASE("graph-map invariants are enforced") {
  Graph g = Graph::rose(2);
  CHECK_THROWS_AS(GraphMap(g, {0}, {parse_path(g, "a")}), InputError);
  Graph two(2, {{0, 1}, {1, 0}}, {"x", "y"});
  // Image of x must start at the image of its origin.
  CHECK_THROWS_AS(GraphMap(two, {0, 0}, {parse_path(two, "y"), parse_path(two, "x")}), InputError);
  // Images must be tight.
  CHECK_THROWS_AS(GraphMap(g, {0}, {EdgePath{0, {OrientedEdge::forward(0), OrientedEdge::backward(0)}},
                                    parse_path(g, "b")}),
                  InputError);
}

TEST_CASE("path and iterate properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rank = 2 + rng() % 2;
    GraphMap f = random_rose_map(rng, rank, 3);
    const Graph& g = f.graph();
    auto images = oracle::images_of(f);
    for (auto e : g.all_oriented_edges()) {
      // map_path agrees with literal substitution followed by reduction.
      auto p = iterate_edge(f, e, 2).path;
      oracle::Seq literal = oracle::free_reduce(oracle::substitute(images, oracle::to_seq(p.edges)));
      CHECK(oracle::to_seq(map_path(f, p).edges) == literal);
      CHECK(tighten(g, p) == p);
      // iterate(m + n) = map_path^n(iterate(m)).
      auto m1 = iterate_edge(f, e, 1).path;
      auto m3 = iterate_edge(f, e, 3).path;
      CHECK(map_path(f, map_path(f, m1)) == m3);
      // Df iterated n times is the initial edge of f^n(e) when it does not cancel away.
      OrientedEdge d = e;
      for (int n = 1; n <= 3; ++n) d = derivative(f, d);
      if (!m3.empty() && is_train_track(f)) CHECK(d == m3.edges.front());
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    auto phi = random_positive_automorphism(rng, 2 + rng() % 3, 6, 10);
    CHECK(is_homotopy_equivalence(rose_representative(phi).map));
  }
}

TEST_CASE("graph-map file round trip") {
  auto f = rose_of(testing::kFourGenerator);
  auto text = print_graph_map(f);
  CHECK(parse_graph_map(text) == f);
  CHECK(print_graph_map(parse_graph_map(text)) == text);
  Graph theta(2, {{0, 1}, {0, 1}, {0, 1}}, {"x", "y", "z"});
  GraphMap swap(theta, {0, 1},
                {parse_path(theta, "y"), parse_path(theta, "x"), parse_path(theta, "z")});
  CHECK(parse_graph_map(print_graph_map(swap)) == swap);
  auto parsed = parse_graph_map(
      R"({"vertices": 1, "edges": [["a",0,0],["b",0,0]], "vertex_map":[0], "images":["a -> a b","b -> a"]})");
  CHECK(parsed == rose_map({"a b", "a"}));
  CHECK_THROWS_AS(parse_graph_map(R"({"vertices": 1, "edges": [["a",0,0]], "vertex_map":[0], "images":[]})"),
                  InputError);
  try {
    parse_graph_map("{\"vertices\": 1,\n  \"edges\": [}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
