#pragma once

#include <optional>

#include "int_matrix.hpp"

namespace zalg {

struct HermiteDecomposition {
  IntMatrix H;  // row-style HNF of A
  IntMatrix U;  // unimodular, U*A = H
  std::vector<std::size_t> pivot_cols;
};

// Row-style Hermite normal form with transform.
// Pivots positive, entries above a pivot reduced into [0, pivot),
// pivot columns strictly increasing, zero rows at the bottom.
inline HermiteDecomposition hnf(const IntMatrix& A) {
  HermiteDecomposition d;
  d.H = A;
  d.U = IntMatrix::identity(A.rows());
  IntMatrix& H = d.H;
  IntMatrix& U = d.U;
  std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      // move the entry of least magnitude in column c (rows >= r) to row r
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (H(i, c) == 0) continue;
        if (best == m || abs_int(H(i, c)) < abs_int(H(best, c))) best = i;
      }
      if (best == m) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = H(i, c) / H(r, c);  // truncated: remainder smaller than pivot
        H.add_multiple_row(i, r, -q);
        U.add_multiple_row(i, r, -q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv_q(H(i, c), H(r, c));
      H.add_multiple_row(i, r, -q);
      U.add_multiple_row(i, r, -q);
    }
    d.pivot_cols.push_back(c);
    ++r;
  }
  return d;
}

// integer row lattice in Z^ambient; basis is canonical (HNF, no zero rows)
struct Lattice {
  std::size_t ambient = 0;
  IntMatrix basis;  // rank x ambient, HNF

  std::size_t rank() const { return basis.rows(); }
  bool operator==(const Lattice& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

inline Lattice lattice_from_rows(const IntMatrix& rows, std::size_t ambient) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw input_error("lattice_from_rows: ambient mismatch");
  Lattice L;
  L.ambient = ambient;
  HermiteDecomposition d = hnf(rows.rows() ? rows : IntMatrix(0, ambient));
  std::size_t r = 0;
  while (r < d.H.rows() && !d.H.row_is_zero(r)) ++r;
  IntMatrix b(r, ambient);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b(i, j) = d.H(i, j);
  L.basis = b;
  return L;
}

inline Lattice full_lattice(std::size_t ambient) {
  Lattice L;
  L.ambient = ambient;
  L.basis = IntMatrix::identity(ambient);
  return L;
}

inline Lattice zero_lattice(std::size_t ambient) {
  Lattice L;
  L.ambient = ambient;
  L.basis = IntMatrix(0, ambient);
  return L;
}

// membership test by successive pivot elimination against the HNF basis;
// if remainder is requested the reduced residue (coords in [0,pivot) at
// pivot columns) is produced whether or not v is a member
inline bool lattice_reduce(const Lattice& L, std::vector<Int>& v) {
  if (v.size() != L.ambient) throw input_error("lattice_reduce: ambient mismatch");
  for (std::size_t r = 0; r < L.basis.rows(); ++r) {
    std::size_t pc = 0;
    while (pc < L.ambient && L.basis(r, pc) == 0) ++pc;
    if (pc == L.ambient) continue;
    Int q = fdiv_q(v[pc], L.basis(r, pc));
    if (q != 0)
      for (std::size_t j = 0; j < L.ambient; ++j) v[j] -= q * L.basis(r, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool lattice_member(const Lattice& L, std::vector<Int> v) {
  return lattice_reduce(L, v);
}

inline std::vector<Int> lattice_residue(const Lattice& L, std::vector<Int> v) {
  lattice_reduce(L, v);
  return v;
}

inline bool lattice_contains(const Lattice& outer, const Lattice& inner) {
  if (outer.ambient != inner.ambient) throw input_error("lattice_contains: ambient mismatch");
  for (std::size_t i = 0; i < inner.basis.rows(); ++i)
    if (!lattice_member(outer, inner.basis.row(i))) return false;
  return true;
}

// {x in Z^n : A x = 0} as a row lattice, from the HNF of A^T
inline Lattice kernel_lattice(const IntMatrix& A) {
  std::size_t n = A.cols();
  HermiteDecomposition d = hnf(A.transpose());
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < n; ++i)
    if (d.H.row_is_zero(i)) rows.push_back(d.U.row(i));
  return lattice_from_rows(IntMatrix::from_rows(rows, n), n);
}

inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient) throw input_error("lattice_sum: ambient mismatch");
  return lattice_from_rows(vstack(a.basis, b.basis), a.ambient);
}

// U ∩ V: solve a*U = b*V over Z via the kernel of [U; -V]^T applied on the left
inline Lattice intersect_lattices(const Lattice& U, const Lattice& V) {
  if (U.ambient != V.ambient) throw input_error("intersect_lattices: ambient mismatch");
  std::size_t k = U.basis.rows(), l = V.basis.rows();
  if (k == 0 || l == 0) return zero_lattice(U.ambient);
  IntMatrix C(k + l, U.ambient);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < U.ambient; ++j) C(i, j) = U.basis(i, j);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < U.ambient; ++j) C(k + i, j) = -V.basis(i, j);
  Lattice W = kernel_lattice(C.transpose());  // rows w with w*C = 0
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < W.basis.rows(); ++i) {
    std::vector<Int> w = W.basis.row(i);
    std::vector<Int> a(w.begin(), w.begin() + k);
    rows.push_back(vec_mat(a, U.basis));
  }
  return lattice_from_rows(IntMatrix::from_rows(rows, U.ambient), U.ambient);
}

// {v in Z^cols : M v = 0} for a rational matrix, by clearing denominators
inline Lattice rational_kernel_lattice(const std::vector<std::vector<Rat>>& M,
                                       std::size_t cols) {
  IntMatrix A(M.size(), cols);
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i].size() != cols) throw input_error("rational_kernel_lattice: ragged row");
    Int den = 1;
    for (const auto& x : M[i]) den = lcm_int(den, boost::multiprecision::denominator(x));
    for (std::size_t j = 0; j < cols; ++j) {
      Rat scaled = M[i][j] * Rat(den);
      A(i, j) = boost::multiprecision::numerator(scaled);
    }
  }
  return kernel_lattice(A);
}

// T unimodular -> T^{-1} (the HNF of a unimodular matrix is the identity)
inline IntMatrix inverse_unimodular(const IntMatrix& T) {
  if (T.rows() != T.cols()) throw input_error("inverse_unimodular: not square");
  HermiteDecomposition d = hnf(T);
  if (!(d.H == IntMatrix::identity(T.rows())))
    throw precondition_error("inverse_unimodular: matrix is not unimodular");
  return d.U;
}

}  // namespace zalg
