#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"

namespace zalg {

// dense matrix over Z, row-major
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw input_error("from_rows: ragged row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<Int>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product: dimension mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o(k, j) != 0) p(i, j) += x * o(k, j);
      }
    return p;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

  // row_i += q * row_j
  void add_multiple_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += q * (*this)(j, k);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  void negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
  }

  // col_i += q * col_j
  void add_multiple_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += q * (*this)(k, j);
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Int max_abs() const {
    Int m = 0;
    for (const auto& x : a_)
      if (abs_int(x) > m) m = abs_int(x);
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

inline std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols() != v.size()) throw input_error("mat_vec: dimension mismatch");
  std::vector<Int> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& a) {
  if (a.rows() != v.size()) throw input_error("vec_mat: dimension mismatch");
  std::vector<Int> r(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[j] += v[i] * a(i, j);
  }
  return r;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw input_error("vstack: column mismatch");
  IntMatrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

// exact determinant by fraction-free elimination
inline Int det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw input_error("det: not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace zalg
