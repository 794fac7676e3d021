#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iwip {

// A generator of F_N or its inverse.
struct Letter {
  std::size_t generator = 0;
  int sign = 1;

  constexpr Letter inverse() const { return {generator, -sign}; }

  // Total order used everywhere words are sorted: a < a^-1 < b < b^-1 < ...
  constexpr std::size_t code() const {
    return 2 * generator + (sign < 0 ? 1 : 0);
  }
  static constexpr Letter from_code(std::size_t code) {
    return {code / 2, (code % 2) ? -1 : 1};
  }

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.generator == b.generator && a.sign == b.sign;
  }
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.code() <=> b.code();
  }
};

// Name of generator `index`: a..z, then x1, x2, ... for index >= 26.
std::string generator_name(std::size_t index);
std::optional<std::size_t> parse_generator_name(std::string_view name);
std::string letter_name(Letter letter);

// A freely reduced word in a free basis of F_rank.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  // Freely reduces `letters`; throws InputError on out-of-range generators.
  static Word reduce(std::size_t rank, std::span<const Letter> letters);
  static Word generator(std::size_t rank, std::size_t index, int sign = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  // Reduced product.
  Word operator*(const Word& other) const;

  // Space-separated letters, `1` for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

inline Word reduce(std::size_t rank, std::span<const Letter> letters) {
  return Word::reduce(rank, letters);
}

// Scans letters like `c d a^-1`, `cda^-1`, `x12^-1`; whitespace optional.
// With `auto_reduce` false a non-reduced sequence is rejected.
Word parse_word(std::string_view text, std::size_t rank, bool auto_reduce = true);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

// Lexicographically least rotation of the cyclic reduction of `w`.
// Canonical representative of the conjugacy class [w]; [w] and [w^-1]
// are kept distinct.
Word canonical_rotation(const Word& w);

bool conjugate_equal(const Word& u, const Word& w);

// True iff `words` generate all of F_rank (folded subgroup graph is the rose).
bool generates_whole_group(std::span<const Word> words, std::size_t rank);

// An automorphism of F_N given by the images of the generators.
// Construction validates that the images are nonempty, reduced, and
// generate F_N.
class Automorphism {
 public:
  explicit Automorphism(std::vector<Word> images);
  static Automorphism identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t generator) const { return images_[generator]; }

  Word apply(const Word& w) const;

  // Canonical DSL text: `rank N` header then one `x -> image` line each.
  std::string to_dsl() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Word> images_;
};

// compose(outer, inner)(x) = outer(inner(x)).
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism power(const Automorphism& phi, unsigned exponent);

struct DslOptions {
  bool auto_reduce = false;
  // Invoked with a message for every image that had to be reduced.
  std::function<void(const std::string&)> warn;
};

// Parses the automorphism DSL: optional `rank N` header, lines `a -> b c^-1`,
// `#` comments. `;` is accepted as a line separator for inline use.
Automorphism parse_automorphism(std::string_view text, const DslOptions& options = {});

}  // namespace iwip
