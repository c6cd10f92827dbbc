#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dslice/rational.hpp"

namespace dslice {

/// Dense row-major matrix of 64-bit integers. Gram matrices and lattice
/// factorizations live here; anything that can outgrow 64 bits uses
/// BigMatrix instead.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::int64_t>& data() const { return data_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  IntMatrix transpose() const;
  /// AᵀA, accumulated in mpz and range-checked.
  IntMatrix gram() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using BigVector = std::vector<Integer>;
using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix to_big(const IntMatrix& m);

/// Diagonal of the Smith normal form (absolute values, length min(rows, cols)).
std::vector<Integer> smith_diagonal(BigMatrix m);

/// True iff x is an integer combination of the columns of m.
bool in_integer_column_span(const BigMatrix& m, BigVector x);

/// Inertia of a symmetric matrix by exact congruence elimination over Q.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const IntMatrix& symmetric);

}  // namespace dslice
