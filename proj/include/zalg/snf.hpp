#pragma once

#include <optional>

#include "hnf.hpp"

namespace zalg {

struct SmithDecomposition {
  IntMatrix D;  // diagonal, S*A*T = D
  IntMatrix S;  // unimodular, rows x rows
  IntMatrix T;  // unimodular, cols x cols
  std::vector<Int> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
};

namespace detail {

inline bool snf_is_diagonal(const IntMatrix& D) {
  bool seen_zero = false;
  std::size_t kmax = D.rows() < D.cols() ? D.rows() : D.cols();
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && D(i, j) != 0) return false;
  // nonzero diagonal entries must be packed at the top left
  for (std::size_t k = 0; k < kmax; ++k) {
    if (D(k, k) == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  return true;
}

}  // namespace detail

// Smith normal form with transforms. Alternating row and column Hermite
// passes keep the intermediate entries small; plain pivot-style elimination
// blows up catastrophically already on dense 6x6 inputs.
inline SmithDecomposition snf(const IntMatrix& A) {
  SmithDecomposition d;
  d.D = A;
  d.S = IntMatrix::identity(A.rows());
  d.T = IntMatrix::identity(A.cols());
  IntMatrix& D = d.D;
  std::size_t m = A.rows(), n = A.cols();
  std::size_t kmax = m < n ? m : n;
  for (;;) {
    while (!detail::snf_is_diagonal(D)) {
      HermiteDecomposition hr = hnf(D);
      D = hr.H;
      d.S = hr.U * d.S;
      if (detail::snf_is_diagonal(D)) break;
      HermiteDecomposition hc = hnf(D.transpose());
      D = hc.H.transpose();
      d.T = d.T * hc.U.transpose();
    }
    for (std::size_t k = 0; k < kmax; ++k)
      if (D(k, k) < 0) {
        D.negate_col(k);
        d.T.negate_col(k);
      }
    // enforce the divisor chain d1 | d2 | ...; a violation is folded into an
    // earlier column and the diagonalization rerun on the small 2x2 block
    bool chain_ok = true;
    for (std::size_t k = 0; k < kmax && chain_ok; ++k) {
      if (D(k, k) == 0) break;
      for (std::size_t l = k + 1; l < kmax && chain_ok; ++l) {
        if (D(l, l) == 0) break;
        if (D(l, l) % D(k, k) != 0) {
          D.add_multiple_col(k, l, 1);
          d.T.add_multiple_col(k, l, 1);
          chain_ok = false;
        }
      }
    }
    if (chain_ok) break;
  }
  for (std::size_t k = 0; k < kmax; ++k)
    if (D(k, k) != 0) d.invariant_factors.push_back(D(k, k));
  return d;
}

struct DioSolution {
  std::vector<Int> particular;  // one x with A x = b
  Lattice homogeneous;          // all x with A x = 0
};

// solve A x = b over Z; nullopt if no integer solution exists
inline std::optional<DioSolution> solve_diophantine(const IntMatrix& A,
                                                    const std::vector<Int>& b) {
  if (A.rows() != b.size()) throw input_error("solve_diophantine: dimension mismatch");
  std::size_t m = A.rows(), n = A.cols();
  SmithDecomposition sd = snf(A);
  std::vector<Int> c = mat_vec(sd.S, b);
  std::vector<Int> y(n, 0);
  std::size_t kmax = m < n ? m : n;
  for (std::size_t i = 0; i < m; ++i) {
    Int di = (i < kmax) ? sd.D(i, i) : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  DioSolution sol;
  sol.particular = mat_vec(sd.T, y);
  sol.homogeneous = kernel_lattice(A);
  return sol;
}

}  // namespace zalg
