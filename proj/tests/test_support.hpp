#pragma once

#include <string>
#include <vector>

#include "iwip/graphs.hpp"
#include "iwip/words.hpp"

namespace testing {

inline constexpr const char* kFourGenerator =
    "rank 4\na -> b\nb -> c\nc -> d a^-1\nd -> d^-1 c^-1\n";

inline iwip::Automorphism aut(const std::string& dsl) { return iwip::parse_automorphism(dsl); }

inline iwip::Word word(const std::string& text, std::size_t rank) {
  return iwip::parse_word(text, rank);
}

// Rose self-map with the given image strings; need not be a homotopy equivalence.
inline iwip::GraphMap rose_map(const std::vector<std::string>& images) {
  iwip::Graph g = iwip::Graph::rose(images.size());
  std::vector<iwip::EdgePath> paths;
  for (const auto& s : images) paths.push_back(iwip::parse_path(g, s));
  return iwip::GraphMap(g, {0}, paths);
}

inline iwip::GraphMap rose_of(const std::string& dsl) {
  return iwip::rose_representative(aut(dsl)).map;
}

inline std::string path_text(const iwip::GraphMap& f, const iwip::EdgePath& p) {
  return iwip::path_to_string(f.graph(), p);
}

}  // namespace testing
