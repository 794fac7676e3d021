#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/words.hpp"

namespace iwip {

// Product of random generator permutations and positive Nielsen moves
// x_i -> x_i x_j or x_j x_i; every image stays at most `max_image_length`.
Automorphism random_positive_automorphism(std::mt19937_64& rng, std::size_t rank,
                                          std::size_t max_image_length, unsigned moves);

// Rose map with random nonempty positive images; always a train track.
GraphMap random_positive_rose_map(std::mt19937_64& rng, std::size_t rank,
                                  std::size_t max_image_length);

// Rose map with random reduced images that may use inverse letters.
GraphMap random_rose_map(std::mt19937_64& rng, std::size_t rank, std::size_t max_image_length);

// Positive rose map whose edges fall into `blocks` classes, each mapped into
// the next: irreducible with period `blocks`, so never primitive for
// blocks >= 2.
GraphMap block_cyclic_rose_map(std::mt19937_64& rng, std::size_t rank, std::size_t blocks,
                               std::size_t max_image_length);

struct GeneratedFixture {
  std::string name;
  std::uint64_t seed = 0;
  Automorphism automorphism;
  std::string dsl;  // includes a comment recording the seed
};

// Deterministic per (seed, count, rank range).
std::vector<GeneratedFixture> generate_fixtures(std::uint64_t seed, std::size_t count,
                                                std::size_t min_rank, std::size_t max_rank);

}  // namespace iwip
