#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace iwip {

using BigInt = boost::multiprecision::cpp_int;

// Square matrix of nonnegative arbitrary-precision integers.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::size_t dimension)
      : dimension_(dimension), entries_(dimension * dimension) {}

  static TransitionMatrix identity(std::size_t dimension);
  static TransitionMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t dimension() const { return dimension_; }
  const BigInt& at(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }
  BigInt& at(std::size_t row, std::size_t col) { return entries_[row * dimension_ + col]; }

  BigInt column_sum(std::size_t col) const;
  // Every entry strictly positive.
  bool is_positive() const;
  // Positions of nonzero entries.
  std::vector<std::vector<bool>> support() const;
  // Decimal entries, row by row.
  std::vector<std::vector<std::string>> to_grid() const;

  TransitionMatrix operator*(const TransitionMatrix& other) const;
  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<BigInt> entries_;
};

// Exact A^m by repeated squaring; A^0 is the identity.
TransitionMatrix matrix_power(const TransitionMatrix& a, unsigned exponent);

// Strong connectivity of the digraph with an arc i -> j whenever a_ij > 0.
// The 1x1 zero matrix is reducible.
bool is_irreducible(const TransitionMatrix& a);

// Least m in [1, (r-1)^2 + 1] with A^m > 0, or none. A nonnegative matrix
// has a positive power iff this power is positive.
std::optional<unsigned> primitive_exponent_by_power_bound(const TransitionMatrix& a);

inline unsigned primitivity_power_bound(std::size_t dimension) {
  return dimension == 0 ? 1 : static_cast<unsigned>((dimension - 1) * (dimension - 1) + 1);
}

}  // namespace iwip
