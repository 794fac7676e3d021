#include "iwip/matrix.hpp"

#include <deque>
#include <optional>

#include "iwip/error.hpp"

namespace iwip {

TransitionMatrix TransitionMatrix::identity(std::size_t dimension) {
  TransitionMatrix m(dimension);
  for (std::size_t i = 0; i < dimension; ++i) m.at(i, i) = 1;
  return m;
}

TransitionMatrix TransitionMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  TransitionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] < 0) throw InputError("matrix entries must be nonnegative");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

BigInt TransitionMatrix::column_sum(std::size_t col) const {
  BigInt s = 0;
  for (std::size_t i = 0; i < dimension_; ++i) s += at(i, col);
  return s;
}

bool TransitionMatrix::is_positive() const {
  if (dimension_ == 0) return false;
  for (const auto& x : entries_)
    if (x <= 0) return false;
  return true;
}

std::vector<std::vector<bool>> TransitionMatrix::support() const {
  std::vector<std::vector<bool>> s(dimension_, std::vector<bool>(dimension_));
  for (std::size_t i = 0; i < dimension_; ++i)
    for (std::size_t j = 0; j < dimension_; ++j) s[i][j] = at(i, j) > 0;
  return s;
}

std::vector<std::vector<std::string>> TransitionMatrix::to_grid() const {
  std::vector<std::vector<std::string>> g(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    for (std::size_t j = 0; j < dimension_; ++j) g[i].push_back(at(i, j).str());
  return g;
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& other) const {
  if (dimension_ != other.dimension_) throw InputError("matrix dimension mismatch");
  TransitionMatrix out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    for (std::size_t k = 0; k < dimension_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dimension_; ++j) {
        const BigInt& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

TransitionMatrix matrix_power(const TransitionMatrix& a, unsigned exponent) {
  TransitionMatrix result = TransitionMatrix::identity(a.dimension());
  TransitionMatrix base = a;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

bool is_irreducible(const TransitionMatrix& a) {
  const std::size_t r = a.dimension();
  if (r == 0) return false;
  auto s = a.support();
  // Every index must reach every index (itself included) by a path of length >= 1.
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<bool> reached(r, false);
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < r; ++j)
      if (s[i][j]) {
        reached[j] = true;
        queue.push_back(j);
      }
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r; ++j)
        if (s[x][j] && !reached[j]) {
          reached[j] = true;
          queue.push_back(j);
        }
    }
    for (std::size_t j = 0; j < r; ++j)
      if (!reached[j]) return false;
  }
  return true;
}

std::optional<unsigned> primitive_exponent_by_power_bound(const TransitionMatrix& a) {
  const unsigned bound = primitivity_power_bound(a.dimension());
  if (!matrix_power(a, bound).is_positive()) return std::nullopt;
  TransitionMatrix p = a;
  for (unsigned m = 1; m <= bound; ++m) {
    if (p.is_positive()) return m;
    p = p * a;
  }
  throw InternalError("positive power bound reached without a positive power");
}

}  // namespace iwip
