#include "iwip/fixtures.hpp"

#include <algorithm>

#include "iwip/error.hpp"

namespace iwip {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Word concat(const Word& a, const Word& b) { return a * b; }

}  // namespace

Automorphism random_positive_automorphism(std::mt19937_64& rng, std::size_t rank,
                                          std::size_t max_image_length, unsigned moves) {
  if (rank < 2) throw InputError("fixtures need rank >= 2");
  if (max_image_length < 1) throw InputError("image length bound must be positive");
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(rank, i));
  for (unsigned m = 0; m < moves; ++m) {
    std::size_t kind = draw(rng, 3);
    std::size_t i = draw(rng, rank), j = draw(rng, rank - 1);
    if (j >= i) ++j;
    if (kind == 0) {
      std::swap(images[i], images[j]);
      continue;
    }
    if (images[i].size() + images[j].size() > max_image_length) continue;
    images[i] = kind == 1 ? concat(images[i], images[j]) : concat(images[j], images[i]);
  }
  return Automorphism(std::move(images));
}

GraphMap random_positive_rose_map(std::mt19937_64& rng, std::size_t rank,
                                  std::size_t max_image_length) {
  std::vector<EdgePath> images;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t len = 1 + draw(rng, max_image_length);
    EdgePath p{0, {}};
    for (std::size_t k = 0; k < len; ++k) p.edges.push_back(OrientedEdge::forward(draw(rng, rank)));
    images.push_back(std::move(p));
  }
  return GraphMap(Graph::rose(rank), {0}, std::move(images));
}

GraphMap random_rose_map(std::mt19937_64& rng, std::size_t rank, std::size_t max_image_length) {
  std::vector<EdgePath> images;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t len = 1 + draw(rng, max_image_length);
    EdgePath p{0, {}};
    while (p.edges.size() < len) {
      OrientedEdge e = OrientedEdge::from_code(draw(rng, 2 * rank));
      if (!p.edges.empty() && p.edges.back() == e.inverse()) continue;
      p.edges.push_back(e);
    }
    images.push_back(std::move(p));
  }
  return GraphMap(Graph::rose(rank), {0}, std::move(images));
}

GraphMap block_cyclic_rose_map(std::mt19937_64& rng, std::size_t rank, std::size_t blocks,
                               std::size_t max_image_length) {
  if (blocks == 0 || blocks > rank) throw InputError("need 1 <= blocks <= rank");
  std::vector<std::vector<std::size_t>> members(blocks);
  for (std::size_t i = 0; i < rank; ++i) members[i % blocks].push_back(i);
  std::vector<EdgePath> images(rank);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto& next = members[(b + 1) % blocks];
    // Every member of the next block occurs in some image, so the cycle of
    // blocks is strongly connected.
    std::size_t covered = 0;
    for (std::size_t idx = 0; idx < members[b].size(); ++idx) {
      EdgePath p{0, {}};
      std::size_t len = 1 + draw(rng, max_image_length);
      bool last = idx + 1 == members[b].size();
      while (last && covered < next.size()) p.edges.push_back(OrientedEdge::forward(next[covered++]));
      if (!last && covered < next.size()) p.edges.push_back(OrientedEdge::forward(next[covered++]));
      while (p.edges.size() < len) p.edges.push_back(OrientedEdge::forward(next[draw(rng, next.size())]));
      images[members[b][idx]] = std::move(p);
    }
  }
  return GraphMap(Graph::rose(rank), {0}, std::move(images));
}

std::vector<GeneratedFixture> generate_fixtures(std::uint64_t seed, std::size_t count,
                                                std::size_t min_rank, std::size_t max_rank) {
  if (min_rank < 2 || max_rank < min_rank) throw InputError("rank range must satisfy 2 <= min <= max");
  std::mt19937_64 rng(seed);
  std::vector<GeneratedFixture> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t rank = min_rank + draw(rng, max_rank - min_rank + 1);
    Automorphism phi = random_positive_automorphism(rng, rank, 8, static_cast<unsigned>(4 * rank));
    std::string name = "fixture_" + std::to_string(seed) + "_" + std::to_string(i);
    std::string dsl = "# generated: seed " + std::to_string(seed) + ", index " + std::to_string(i) +
                      "\n" + phi.to_dsl();
    out.push_back({name, seed, std::move(phi), std::move(dsl)});
  }
  return out;
}

}  // namespace iwip
