#pragma once

#include <optional>
#include <string>

#include "kalgebra.hpp"
#include "snf.hpp"

namespace zalg {

// element of an explicitly given finite Z-algebra: integer coefficient row
// over the generators g_0..g_n; representation is non-unique modulo syzygies
using ZElem = std::vector<Int>;

// finite Z-algebra with generators g_0..g_n, structure tensor
// g_i g_j = sum_k c[i][j][k] g_k, and a multiplication-stable syzygy lattice
struct ExplicitZAlgebra {
  std::size_t n = 0;  // generator index bound: ambient dimension is n + 1
  bool unital = false;
  std::vector<std::string> labels;
  std::vector<std::vector<ZElem>> c;
  Lattice syzygies;

  std::size_t ambient() const { return n + 1; }

  ZElem zero_elem() const { return ZElem(n + 1, Int(0)); }

  ZElem gen(std::size_t i) const {
    ZElem v = zero_elem();
    v[i] = 1;
    return v;
  }

  ZElem one() const {
    if (!unital) throw precondition_error("algebra has no unit element");
    return gen(0);
  }
};

inline ZElem multiply(const ExplicitZAlgebra& R, const ZElem& a, const ZElem& b) {
  if (a.size() != R.ambient() || b.size() != R.ambient())
    throw input_error("multiply: element length does not match the algebra");
  ZElem r = R.zero_elem();
  for (std::size_t i = 0; i <= R.n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= R.n; ++j) {
      if (b[j] == 0) continue;
      Int s = a[i] * b[j];
      for (std::size_t k = 0; k <= R.n; ++k) r[k] += s * R.c[i][j][k];
    }
  }
  return r;
}

inline ZElem add_elems(const ZElem& a, const ZElem& b) {
  ZElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ZElem sub_elems(const ZElem& a, const ZElem& b) {
  ZElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ZElem scale_elem(const Int& s, const ZElem& a) {
  ZElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

// unique representative of a modulo the syzygy lattice
inline ZElem canonical_form(const ExplicitZAlgebra& R, const ZElem& a) {
  return lattice_residue(R.syzygies, a);
}

inline bool is_zero_elem(const ExplicitZAlgebra& R, const ZElem& a) {
  return lattice_member(R.syzygies, a);
}

inline bool elems_equal(const ExplicitZAlgebra& R, const ZElem& a, const ZElem& b) {
  return is_zero_elem(R, sub_elems(a, b));
}

// construct the algebra: the given relation rows are closed under
// multiplication by every generator, then HNF-canonicalized
inline ExplicitZAlgebra make_algebra(std::size_t n, bool unital,
                                     std::vector<std::vector<ZElem>> structure,
                                     const std::vector<ZElem>& relation_rows,
                                     std::vector<std::string> labels = {}) {
  ExplicitZAlgebra R;
  R.n = n;
  R.unital = unital;
  R.labels = std::move(labels);
  if (R.labels.empty())
    for (std::size_t i = 0; i <= n; ++i) R.labels.push_back("g" + std::to_string(i));
  if (structure.size() != n + 1)
    throw input_error("make_algebra: structure tensor has wrong shape");
  for (const auto& row : structure) {
    if (row.size() != n + 1) throw input_error("make_algebra: structure tensor has wrong shape");
    for (const auto& v : row)
      if (v.size() != n + 1) throw input_error("make_algebra: structure tensor has wrong shape");
  }
  R.c = std::move(structure);
  Lattice L = lattice_from_rows(IntMatrix::from_rows(relation_rows, n + 1), n + 1);
  // close under multiplication by generators
  for (;;) {
    std::vector<ZElem> fresh;
    for (std::size_t r = 0; r < L.basis.rows(); ++r) {
      ZElem s = L.basis.row(r);
      for (std::size_t i = 0; i <= n; ++i) {
        ZElem prod = multiply(R, R.gen(i), s);
        if (!lattice_member(L, prod)) fresh.push_back(prod);
      }
    }
    if (fresh.empty()) break;
    std::vector<ZElem> rows;
    for (std::size_t r = 0; r < L.basis.rows(); ++r) rows.push_back(L.basis.row(r));
    rows.insert(rows.end(), fresh.begin(), fresh.end());
    L = lattice_from_rows(IntMatrix::from_rows(rows, n + 1), n + 1);
  }
  R.syzygies = L;
  return R;
}

struct ValidationReport {
  bool ok = true;
  std::string message;  // witness description on failure
};

inline ValidationReport validate(const ExplicitZAlgebra& R) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.message = std::move(msg);
    return rep;
  };
  for (std::size_t i = 0; i <= R.n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (R.c[i][j] != R.c[j][i])
        return fail("commutativity fails at generators (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  if (R.unital) {
    for (std::size_t j = 0; j <= R.n; ++j)
      if (R.c[0][j] != R.gen(j))
        return fail("unit axiom fails: g0*g" + std::to_string(j) + " != g" + std::to_string(j));
  }
  for (std::size_t i = 0; i <= R.n; ++i)
    for (std::size_t j = 0; j <= R.n; ++j)
      for (std::size_t k = 0; k <= R.n; ++k) {
        ZElem l = multiply(R, multiply(R, R.gen(i), R.gen(j)), R.gen(k));
        ZElem r = multiply(R, R.gen(i), multiply(R, R.gen(j), R.gen(k)));
        if (!lattice_member(R.syzygies, sub_elems(l, r)))
          return fail("associativity fails modulo syzygies at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
      }
  for (std::size_t r = 0; r < R.syzygies.basis.rows(); ++r)
    for (std::size_t i = 0; i <= R.n; ++i) {
      ZElem prod = multiply(R, R.gen(i), R.syzygies.basis.row(r));
      if (!lattice_member(R.syzygies, prod))
        return fail("syzygy lattice not stable under multiplication by g" + std::to_string(i));
    }
  return rep;
}

// rank and invariant factors of R+ from the SNF of the syzygy matrix
struct ModuleInvariants {
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;
  Int torsion_exponent = 1;
  // diagnostic: bit size of tau against n*log2(n*|A|)
  std::size_t tau_bits = 1;
  double tau_bit_bound = 0.0;
  bool bound_ok = true;
};

inline ModuleInvariants module_invariants(const ExplicitZAlgebra& R) {
  ModuleInvariants mi;
  std::size_t m = R.syzygies.basis.rows();
  if (m == 0) {
    mi.rank = R.ambient();
    return mi;
  }
  SmithDecomposition sd = snf(R.syzygies.basis);
  mi.invariant_factors = sd.invariant_factors;
  mi.rank = R.ambient() - mi.invariant_factors.size();
  mi.torsion_exponent =
      mi.invariant_factors.empty() ? Int(1) : mi.invariant_factors.back();
  mi.tau_bits = bit_length(mi.torsion_exponent);
  Int norm = R.syzygies.basis.max_abs();
  double nn = static_cast<double>(R.ambient());
  double na = nn * (norm > 0 ? static_cast<double>(norm) : 1.0);
  mi.tau_bit_bound = nn * std::log2(na > 1.0 ? na : 2.0);
  mi.bound_ok = static_cast<double>(mi.tau_bits) <= mi.tau_bit_bound + 1.0;
  return mi;
}

// generators of the solution module of the system
//   sum_k f_k^(e) y_k = 0   for each equation e,
// returned as tuples in R^p; includes the syzygy-shift solutions
inline std::vector<std::vector<ZElem>> solve_linear_system_over_R(
    const ExplicitZAlgebra& R, const std::vector<std::vector<ZElem>>& equations) {
  if (equations.empty()) throw input_error("solve_linear_system_over_R: no equations");
  std::size_t p = equations[0].size();
  if (p == 0) throw input_error("solve_linear_system_over_R: no unknowns");
  for (const auto& eq : equations)
    if (eq.size() != p) throw input_error("solve_linear_system_over_R: ragged system");
  std::size_t dim = R.ambient();
  std::size_t m = R.syzygies.basis.rows();
  std::size_t E = equations.size();
  std::size_t zcols = p * dim;
  IntMatrix A(E * dim, zcols + E * m);
  for (std::size_t e = 0; e < E; ++e) {
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t i = 0; i < dim; ++i) {
        ZElem col = multiply(R, equations[e][k], R.gen(i));
        for (std::size_t l = 0; l < dim; ++l) A(e * dim + l, k * dim + i) = col[l];
      }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < dim; ++i)
        A(e * dim + i, zcols + e * m + j) = -R.syzygies.basis(j, i);
  }
  Lattice K = kernel_lattice(A);
  // project onto the z-coordinates and canonicalize
  std::vector<ZElem> proj;
  for (std::size_t r = 0; r < K.basis.rows(); ++r) {
    ZElem row = K.basis.row(r);
    proj.push_back(ZElem(row.begin(), row.begin() + zcols));
  }
  Lattice P = lattice_from_rows(IntMatrix::from_rows(proj, zcols), zcols);
  std::vector<std::vector<ZElem>> out;
  for (std::size_t r = 0; r < P.basis.rows(); ++r) {
    ZElem row = P.basis.row(r);
    std::vector<ZElem> tup;
    for (std::size_t k = 0; k < p; ++k)
      tup.push_back(ZElem(row.begin() + k * dim, row.begin() + (k + 1) * dim));
    out.push_back(std::move(tup));
  }
  return out;
}

inline std::vector<std::vector<ZElem>> solve_linear_over_R(const ExplicitZAlgebra& R,
                                                           const std::vector<ZElem>& f) {
  return solve_linear_system_over_R(R, {f});
}

struct RIdeal {
  std::vector<ZElem> gens;
};

// presentation lattice V with R/J isomorphic to Z^(n+1)/V
inline Lattice quotient_presentation(const ExplicitZAlgebra& R, const RIdeal& J) {
  std::vector<ZElem> rows;
  for (std::size_t r = 0; r < R.syzygies.basis.rows(); ++r)
    rows.push_back(R.syzygies.basis.row(r));
  for (const auto& t : J.gens) {
    if (t.size() != R.ambient())
      throw input_error("quotient_presentation: generator length mismatch");
    rows.push_back(t);
    for (std::size_t i = 0; i <= R.n; ++i) rows.push_back(multiply(R, R.gen(i), t));
  }
  return lattice_from_rows(IntMatrix::from_rows(rows, R.ambient()), R.ambient());
}

inline bool ideal_contains(const ExplicitZAlgebra& R, const RIdeal& inner,
                           const RIdeal& outer) {
  // inner subset of outer iff V_inner subset of V_outer
  return lattice_contains(quotient_presentation(R, outer), quotient_presentation(R, inner));
}

inline bool ideals_equal(const ExplicitZAlgebra& R, const RIdeal& a, const RIdeal& b) {
  return quotient_presentation(R, a) == quotient_presentation(R, b);
}

inline bool is_unit_ideal(const ExplicitZAlgebra& R, const RIdeal& J) {
  if (!R.unital) throw precondition_error("is_unit_ideal: algebra must be unital");
  // J = <1> iff R/J has rank 0 and all invariant factors 1, i.e. V = Z^(n+1)
  return quotient_presentation(R, J) == full_lattice(R.ambient());
}

// generators of J ∩ J' from the syzygy module of (1 f... 0... / 1 0... h...)
inline RIdeal intersect_ideals_R(const ExplicitZAlgebra& R, const RIdeal& J,
                                 const RIdeal& Jp) {
  if (!R.unital) throw precondition_error("intersect_ideals_R: algebra must be unital");
  std::size_t k = J.gens.size(), l = Jp.gens.size();
  std::vector<ZElem> eq1, eq2;
  eq1.push_back(R.one());
  eq2.push_back(R.one());
  for (const auto& f : J.gens) {
    eq1.push_back(scale_elem(-1, f));
    eq2.push_back(R.zero_elem());
  }
  for (const auto& h : Jp.gens) {
    eq1.push_back(R.zero_elem());
    eq2.push_back(scale_elem(-1, h));
  }
  (void)k;
  (void)l;
  auto sols = solve_linear_system_over_R(R, {eq1, eq2});
  RIdeal out;
  for (const auto& tup : sols)
    if (!is_zero_elem(R, tup[0])) out.gens.push_back(canonical_form(R, tup[0]));
  return out;
}

// Chinese remainder preimage: f with f = 1 mod J_i and f = 0 mod J_j (j != i);
// i is 1-based
inline ZElem crt_preimage(const ExplicitZAlgebra& R, const std::vector<RIdeal>& Js,
                          std::size_t i) {
  if (!R.unital) throw precondition_error("crt_preimage: algebra must be unital");
  if (i < 1 || i > Js.size()) throw input_error("crt_preimage: index out of range");
  std::vector<Lattice> V;
  for (const auto& J : Js) V.push_back(quotient_presentation(R, J));
  Lattice Vint = full_lattice(R.ambient());
  for (std::size_t j = 0; j < Js.size(); ++j)
    if (j != i - 1) Vint = intersect_lattices(Vint, V[j]);
  const Lattice& Vi = V[i - 1];
  std::size_t kk = Vint.basis.rows(), ll = Vi.basis.rows();
  // columns v_1..v_k, -w_1..-w_l; right hand side e_0
  IntMatrix A(R.ambient(), kk + ll);
  for (std::size_t col = 0; col < kk; ++col)
    for (std::size_t row = 0; row < R.ambient(); ++row) A(row, col) = Vint.basis(col, row);
  for (std::size_t col = 0; col < ll; ++col)
    for (std::size_t row = 0; row < R.ambient(); ++row)
      A(row, kk + col) = -Vi.basis(col, row);
  std::vector<Int> b(R.ambient(), Int(0));
  b[0] = 1;
  auto sol = solve_diophantine(A, b);
  if (!sol)
    throw precondition_error("crt_preimage: ideals are not comaximal or their intersection is nonzero");
  ZElem h = R.zero_elem();
  for (std::size_t col = 0; col < kk; ++col)
    h = add_elems(h, scale_elem(sol->particular[col], Vint.basis.row(col)));
  // postcondition: h in every V_j (j != i) and h - e_0 in V_i
  for (std::size_t j = 0; j < Js.size(); ++j) {
    ZElem d = h;
    if (j == i - 1) d[0] -= 1;
    if (!lattice_member(V[j], d))
      throw verification_error("crt_preimage: postcondition membership check failed");
  }
  return h;
}

// torsion ideal of R+ together with the torsion exponent tau
struct TorsionSplit {
  RIdeal torsion;
  Int tau = 1;
};

inline TorsionSplit torsion_split(const ExplicitZAlgebra& R) {
  TorsionSplit ts;
  std::size_t m = R.syzygies.basis.rows();
  if (m == 0) return ts;
  SmithDecomposition sd = snf(R.syzygies.basis);
  std::size_t t = sd.invariant_factors.size();
  ts.tau = t == 0 ? Int(1) : sd.invariant_factors.back();
  IntMatrix Tinv = inverse_unimodular(sd.T);
  for (std::size_t idx = 0; idx < t; ++idx)
    if (sd.invariant_factors[idx] > 1)
      ts.torsion.gens.push_back(canonical_form(R, Tinv.row(idx)));
  return ts;
}

// scalar extension to Q: rank-dimensional algebra on the SNF-free coordinates
struct QExtension {
  QAlgebra alg;
  std::vector<std::vector<Rat>> gen_images;  // image of g_i in the Q-basis
};

inline QExtension extend_to_Q(const ExplicitZAlgebra& R) {
  std::size_t dim = R.ambient();
  std::size_t t = 0;
  IntMatrix T = IntMatrix::identity(dim), Tinv = IntMatrix::identity(dim);
  if (R.syzygies.basis.rows() > 0) {
    SmithDecomposition sd = snf(R.syzygies.basis);
    t = sd.invariant_factors.size();
    T = sd.T;
    Tinv = inverse_unimodular(sd.T);
  }
  std::size_t r = dim - t;
  if (r == 0) throw precondition_error("extend_to_Q: algebra has rank 0");
  QExtension ext;
  ext.alg.field = RationalField{};
  ext.alg.dim = r;
  for (std::size_t a = 0; a < r; ++a) {
    std::size_t src = t + a;
    ext.alg.labels.push_back(src < R.labels.size() ? R.labels[src] : "");
  }
  // free coordinates of x are the trailing entries of x*T
  auto free_coords = [&](const ZElem& x) {
    std::vector<Int> y = vec_mat(x, T);
    std::vector<Rat> out;
    for (std::size_t a = 0; a < r; ++a) out.push_back(Rat(y[t + a]));
    return out;
  };
  ext.alg.c.assign(r, std::vector<std::vector<Rat>>(r));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      ext.alg.c[a][b] = free_coords(multiply(R, Tinv.row(t + a), Tinv.row(t + b)));
  for (std::size_t i = 0; i < dim; ++i) ext.gen_images.push_back(free_coords(R.gen(i)));
  ext.alg.unit = R.unital ? ext.gen_images[0] : std::vector<Rat>(r, Rat(0));
  return ext;
}

// reduction modulo a prime: F_p-algebra on the coordinates not pivotal in the
// syzygy matrix mod p, via the right-pivot echelon quotient
struct PReduction {
  PAlgebra ambient;               // F_p^(n+1) with the reduced tensor
  KQuotient<PrimeField> quo;      // quotient by the syzygy rows mod p
};

inline PReduction reduce_mod_p(const ExplicitZAlgebra& R, const Int& p) {
  if (!is_probable_prime(p)) throw precondition_error("reduce_mod_p: p is not prime");
  PReduction red;
  PrimeField F{p};
  red.ambient.field = F;
  red.ambient.dim = R.ambient();
  red.ambient.labels = R.labels;
  red.ambient.c.assign(R.ambient(), std::vector<std::vector<Int>>(R.ambient()));
  for (std::size_t i = 0; i < R.ambient(); ++i)
    for (std::size_t j = 0; j < R.ambient(); ++j) {
      std::vector<Int> v;
      for (const auto& x : R.c[i][j]) v.push_back(fdiv_r(x, p));
      red.ambient.c[i][j] = std::move(v);
    }
  red.ambient.unit = R.unital ? red.ambient.basis_vec(0)
                              : std::vector<Int>(R.ambient(), Int(0));
  IdealSpan<PrimeField> S;
  for (std::size_t r = 0; r < R.syzygies.basis.rows(); ++r) {
    std::vector<Int> row;
    for (const auto& x : R.syzygies.basis.row(r)) row.push_back(fdiv_r(x, p));
    S.rows.push_back(std::move(row));
  }
  S.pivots = rref(S.rows, F, true);
  red.quo = quotient_algebra(red.ambient, std::move(S));
  return red;
}

// contraction of an ideal of the Q-extension back to R
inline RIdeal contract_from_Q(const ExplicitZAlgebra& R, const QExtension& ext,
                              const KIdeal<RationalField>& pbar) {
  RationalField F;
  auto span = ideal_span(ext.alg, pbar.gens);
  auto Q = quotient_algebra(ext.alg, span);
  std::size_t q = Q.alg.dim;
  // left kernel of the (n+1) x q matrix of generator images in (Q tensor R)/pbar
  std::vector<std::vector<Rat>> cols(q, std::vector<Rat>(R.ambient()));
  for (std::size_t i = 0; i < R.ambient(); ++i) {
    auto img = Q.project(ext.gen_images[i], F);
    for (std::size_t cidx = 0; cidx < q; ++cidx) cols[cidx][i] = img[cidx];
  }
  Lattice ker = rational_kernel_lattice(cols, R.ambient());
  RIdeal out;
  for (std::size_t r = 0; r < ker.basis.rows(); ++r) {
    ZElem g = ker.basis.row(r);
    if (!is_zero_elem(R, g)) out.gens.push_back(canonical_form(R, g));
  }
  return out;
}

}  // namespace zalg
