#include "iwip/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "iwip/error.hpp"
#include "iwip/folding.hpp"

namespace iwip {

std::string generator_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index - 25);
}

std::optional<std::size_t> parse_generator_name(std::string_view name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z')
    return static_cast<std::size_t>(name[0] - 'a');
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc{} && ptr == name.data() + name.size() && k >= 1 && name[1] != '0')
      return k + 25;
  }
  return std::nullopt;
}

std::string letter_name(Letter letter) {
  return generator_name(letter.generator) + (letter.sign < 0 ? "^-1" : "");
}

Word Word::reduce(std::size_t rank, std::span<const Letter> letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.generator >= rank || (l.sign != 1 && l.sign != -1))
      throw InputError("letter " + letter_name(l) + " out of range for rank " +
                       std::to_string(rank));
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::generator(std::size_t rank, std::size_t index, int sign) {
  Letter l{index, sign};
  return reduce(rank, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::operator*(const Word& other) const {
  if (rank_ != other.rank_) throw InputError("rank mismatch in word product");
  Word w = *this;
  for (Letter l : other.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(letters_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

namespace {

// Scans one word; `line`/`column_base` locate it for error messages.
std::vector<Letter> scan_letters(std::string_view text, std::size_t rank,
                                 std::size_t line, std::size_t column_base) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw ParseError(msg, line, column_base + at);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && out.empty()) {  // explicit identity
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j == text.size()) return out;
    }
    if (c < 'a' || c > 'z') fail(std::string("unexpected character '") + c + "'", i);
    std::size_t start = i++;
    if (c == 'x')
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    auto name = text.substr(start, i - start);
    auto index = parse_generator_name(name);
    if (!index) fail("bad generator name '" + std::string(name) + "'", start);
    if (*index >= rank)
      fail("generator '" + std::string(name) + "' exceeds rank " + std::to_string(rank),
           start);
    int sign = 1;
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) == "^-1") {
        sign = -1;
        i += 3;
      } else if (text.substr(i, 2) == "^1") {
        i += 2;
      } else {
        fail("expected ^-1", i);
      }
    }
    out.push_back({*index, sign});
  }
  return out;
}

bool is_reduced(const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1].inverse()) return false;
  return true;
}

}  // namespace

Word parse_word(std::string_view text, std::size_t rank, bool auto_reduce) {
  auto letters = scan_letters(text, rank, 1, 1);
  if (!auto_reduce && !is_reduced(letters))
    throw ParseError("word is not freely reduced", 1, 1);
  return Word::reduce(rank, letters);
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(l.begin() + static_cast<std::ptrdiff_t>(lo),
                           l.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> conj(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo));
  return {Word::reduce(w.rank(), core), Word::reduce(w.rank(), conj)};
}

Word canonical_rotation(const Word& w) {
  Word core = cyclic_reduce(w).core;
  const auto& l = core.letters();
  const std::size_t n = l.size();
  if (n == 0) return core;
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      Letter x = l[(s + k) % n], y = l[(best + k) % n];
      if (x == y) continue;
      if (x < y) best = s;
      break;
    }
  }
  std::vector<Letter> rotated;
  rotated.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rotated.push_back(l[(best + k) % n]);
  return Word::reduce(w.rank(), rotated);
}

bool conjugate_equal(const Word& u, const Word& w) {
  if (u.rank() != w.rank()) throw InputError("rank mismatch in conjugacy test");
  return canonical_rotation(u) == canonical_rotation(w);
}

bool generates_whole_group(std::span<const Word> words, std::size_t rank) {
  if (rank == 0) return true;
  std::vector<LabeledEdge> edges;
  std::size_t vertices = 1;
  for (const Word& w : words) {
    if (w.empty()) continue;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t next = (i + 1 == w.size()) ? 0 : vertices++;
      edges.push_back({prev, next, w[i].code()});
      prev = next;
    }
  }
  FoldedGraph g = fold(vertices, edges, 0);
  return g.vertex_count == 1 && g.edges.size() == rank;
}

Automorphism::Automorphism(std::vector<Word> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n < 2) throw InputError("automorphisms need rank >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    if (images_[i].rank() != n)
      throw InputError("image of " + generator_name(i) + " has wrong rank");
    if (images_[i].empty())
      throw InputError("image of " + generator_name(i) + " is trivial");
  }
  if (!generates_whole_group(images_, n))
    throw InputError("images do not generate the free group; not an automorphism");
}

Automorphism Automorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(rank, i));
  return Automorphism(std::move(images));
}

Word Automorphism::apply(const Word& w) const {
  if (w.rank() != rank()) throw InputError("rank mismatch when applying automorphism");
  std::vector<Letter> out;
  auto push = [&out](Letter x) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  };
  for (Letter l : w.letters()) {
    const auto& img = images_[l.generator].letters();
    if (l.sign > 0)
      for (Letter x : img) push(x);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) push(it->inverse());
  }
  return Word::reduce(rank(), out);
}

std::string Automorphism::to_dsl() const {
  std::ostringstream out;
  out << "rank " << rank() << '\n';
  for (std::size_t i = 0; i < rank(); ++i)
    out << generator_name(i) << " -> " << images_[i].to_string() << '\n';
  return out.str();
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) throw InputError("rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(inner.rank());
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Automorphism(std::move(images));
}

Automorphism power(const Automorphism& phi, unsigned exponent) {
  Automorphism result = Automorphism::identity(phi.rank());
  for (unsigned i = 0; i < exponent; ++i) result = compose(phi, result);
  return result;
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Automorphism parse_automorphism(std::string_view text, const DslOptions& options) {
  struct Line {
    std::string_view body;
    std::size_t number;
    std::size_t column;  // 1-based column of body start
  };
  std::vector<Line> lines;
  std::size_t line_no = 1, line_start = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view body = trim_view(raw);
    if (!body.empty()) lines.push_back({body, line_no, start - line_start + lead + 1});
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      flush(i);
      start = i + 1;
      if (i < text.size() && text[i] == '\n') {
        ++line_no;
        line_start = i + 1;
      }
    }
  }
  if (lines.empty()) throw ParseError("empty automorphism", 1, 1);

  std::size_t first = 0;
  std::optional<std::size_t> rank;
  if (lines[0].body.starts_with("rank")) {
    std::string_view rest = trim_view(lines[0].body.substr(4));
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || ptr != rest.data() + rest.size())
      throw ParseError("malformed rank header", lines[0].number, lines[0].column);
    rank = n;
    first = 1;
  }
  const std::size_t n = rank.value_or(lines.size() - first);
  if (n < 2) throw ParseError("rank must be at least 2", lines[0].number, lines[0].column);

  std::vector<std::optional<Word>> images(n);
  for (std::size_t k = first; k < lines.size(); ++k) {
    const Line& ln = lines[k];
    auto arrow = ln.body.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("expected 'generator -> image'", ln.number, ln.column);
    std::string_view lhs = trim_view(ln.body.substr(0, arrow));
    auto index = parse_generator_name(lhs);
    if (!index) throw ParseError("bad generator '" + std::string(lhs) + "'", ln.number, ln.column);
    if (*index >= n)
      throw ParseError("generator '" + std::string(lhs) + "' exceeds rank " + std::to_string(n),
                       ln.number, ln.column);
    if (images[*index])
      throw ParseError("generator '" + std::string(lhs) + "' defined twice", ln.number,
                       ln.column);
    std::string_view rhs = ln.body.substr(arrow + 2);
    auto letters = scan_letters(rhs, n, ln.number, ln.column + arrow + 2);
    if (!is_reduced(letters)) {
      if (!options.auto_reduce)
        throw ParseError("image of " + std::string(lhs) + " is not freely reduced", ln.number,
                         ln.column + arrow + 2);
      if (options.warn)
        options.warn("line " + std::to_string(ln.number) + ": reduced image of " +
                     std::string(lhs));
    }
    Word w = Word::reduce(n, letters);
    if (w.empty())
      throw ParseError("image of " + std::string(lhs) + " is trivial", ln.number,
                       ln.column + arrow + 2);
    images[*index] = std::move(w);
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i])
      throw ParseError("no image given for " + generator_name(i), lines.back().number, 1);
    out.push_back(std::move(*images[i]));
  }
  return Automorphism(std::move(out));
}

}  // namespace iwip
