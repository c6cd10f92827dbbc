#include "dslice/integer_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dslice/errors.hpp"

namespace dslice {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::from_row_major(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries.size()));
  }
  IntMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::gram() const {
  IntMatrix g(cols_, cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      Integer sum = 0;
      for (std::size_t r = 0; r < rows_; ++r) sum += Integer((*this)(r, i)) * Integer((*this)(r, j));
      g(i, j) = g(j, i) = to_int64(sum);
    }
  }
  return g;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j);
    out << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Integer sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += Integer(a(i, k)) * Integer(b(k, j));
      c(i, j) = to_int64(sum);
    }
  }
  return c;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), BigVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Integer(static_cast<long>(m(i, j)));
  }
  return out;
}

namespace {

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_columns(BigMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Integer> smith_diagonal(BigMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> result(diag, 0);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (pi == rows || abs(m[i][j]) < best) {
            best = abs(m[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return result;
      std::swap(m[t], m[pi]);
      swap_columns(m, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = truncated_quotient(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = truncated_quotient(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    result[t] = abs(m[t][t]);
  }
  return result;
}

bool in_integer_column_span(const BigMatrix& m, BigVector x) {
  const std::size_t rows = m.size();
  if (x.size() != rows) throw std::invalid_argument("vector length does not match matrix rows");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  BigMatrix h = m;

  // Column echelon form: pivot column c has zeros above its pivot row.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows && next < cols; ++r) {
    for (std::size_t j = next + 1; j < cols; ++j) {
      while (h[r][j] != 0) {
        Integer q = truncated_quotient(h[r][next], h[r][j]);
        if (q != 0) {
          for (std::size_t i = 0; i < rows; ++i) h[i][next] -= q * h[i][j];
        }
        swap_columns(h, next, j);
      }
    }
    if (h[r][next] != 0) pivots.emplace_back(r, next++);
  }

  for (const auto& [r, c] : pivots) {
    if (x[r] % h[r][c] != 0) return false;
    Integer k = x[r] / h[r][c];
    for (std::size_t i = 0; i < rows; ++i) x[i] -= k * h[i][c];
  }
  return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("inertia needs a symmetric matrix");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(static_cast<long>(symmetric(i, j)));
  }
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia result;
  while (!active.empty()) {
    auto pivot_it = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return a[i][i] != 0; });
    if (pivot_it == active.end()) {
      // All diagonal entries vanish: use e_i + e_j to create a nonzero one.
      bool found = false;
      for (std::size_t x = 0; x < active.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
          const std::size_t i = active[x], j = active[y];
          if (a[i][j] == 0) continue;
          for (std::size_t k : active) a[i][k] += a[j][k];
          for (std::size_t k : active) a[k][i] += a[k][j];
          found = true;
        }
      }
      if (!found) {
        result.zero += active.size();
        break;
      }
      continue;
    }
    const std::size_t p = *pivot_it;
    (sgn(a[p][p]) > 0 ? result.positive : result.negative) += 1;
    active.erase(pivot_it);
    for (std::size_t j : active) {
      if (a[j][p] == 0) continue;
      const mpq_class factor = a[j][p] / a[p][p];
      for (std::size_t k : active) a[j][k] -= factor * a[p][k];
    }
  }
  return result;
}

}  // namespace dslice
