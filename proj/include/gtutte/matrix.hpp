#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtutte/int.hpp"

namespace gtutte {

// Dense integer matrix, row-major. Rows or columns may be zero (empty
// matrices are legal inputs everywhere, including snf()).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count mismatch");
  }
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        throw std::invalid_argument("IntMatrix: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
  }
  // row[i] += c * row[j]
  void add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
  }
  // col[i] += c * col[j]
  void add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix b = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && b.at(p, k) == 0) ++p;
      if (p == n) return 0;
      b.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
        mpz_divexact(b.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b.at(i, k) = 0;
    }
    prev = b.at(k, k);
  }
  return sign * b.at(n - 1, n - 1);
}

}  // namespace gtutte
