#pragma once

#include <algorithm>
#include <string>

#include "fpfactor.hpp"
#include "qfactor.hpp"
#include "rng.hpp"

namespace zalg {

// coefficient fields for the 0-dimensional algebra layer

struct RationalField {
  using Elem = Rat;
  static constexpr bool is_rational = true;

  Int characteristic() const { return 0; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw precondition_error("division by zero in Q");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
  Int p;
  using Elem = Int;
  static constexpr bool is_rational = false;

  Int characteristic() const { return p; }
  Elem zero() const { return 0; }
  Elem one() const { return fdiv_r(Int(1), p); }
  Elem from_int(const Int& n) const { return fdiv_r(n, p); }
  Elem add(const Elem& a, const Elem& b) const { return fdiv_r(a + b, p); }
  Elem sub(const Elem& a, const Elem& b) const { return fdiv_r(a - b, p); }
  Elem mul(const Elem& a, const Elem& b) const { return fdiv_r(a * b, p); }
  Elem neg(const Elem& a) const { return fdiv_r(-a, p); }
  Elem inv(const Elem& a) const { return inv_mod(a, p); }
  bool is_zero(const Elem& a) const { return fdiv_r(a, p) == 0; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// explicitly given 0-dimensional K-algebra: basis b_1..b_dim, structure
// constants b_i b_j = sum_k c[i][j][k] b_k, distinguished unit vector
template <class F>
struct ExplicitKAlgebra {
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  F field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> c;
  Vec unit;

  Vec zero_vec() const { return Vec(dim, field.zero()); }

  Vec basis_vec(std::size_t i) const {
    Vec v = zero_vec();
    v[i] = field.one();
    return v;
  }

  bool vec_is_zero(const Vec& v) const {
    for (const auto& x : v)
      if (!field.is_zero(x)) return false;
    return true;
  }

  Vec add(const Vec& a, const Vec& b) const {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = field.add(a[i], b[i]);
    return r;
  }

  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = field.sub(a[i], b[i]);
    return r;
  }

  Vec scale(const Elem& s, const Vec& a) const {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = field.mul(s, a[i]);
    return r;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec r = zero_vec();
    for (std::size_t i = 0; i < dim; ++i) {
      if (field.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (field.is_zero(b[j])) continue;
        Elem s = field.mul(a[i], b[j]);
        for (std::size_t k = 0; k < dim; ++k)
          r[k] = field.add(r[k], field.mul(s, c[i][j][k]));
      }
    }
    return r;
  }

  Vec pow(Vec a, Int e) const {
    Vec r = unit;
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // f(a) for a dense univariate f over the field
  Vec eval_poly(const std::vector<Elem>& f, const Vec& a) const {
    Vec r = zero_vec();
    for (std::size_t i = f.size(); i-- > 0;) {
      r = mul(r, a);
      r = add(r, scale(f[i], unit));
    }
    return r;
  }
};

using QAlgebra = ExplicitKAlgebra<RationalField>;
using PAlgebra = ExplicitKAlgebra<PrimeField>;

template <class F>
struct KIdeal {
  std::vector<std::vector<typename F::Elem>> gens;
};

// ---- linear algebra over the field ----

// reduced row echelon form in place; returns pivot columns in processing
// order.  from_right chooses the rightmost coordinate as pivot, used for
// quotient bases so low-index basis elements (the unit) survive.
template <class F>
std::vector<std::size_t> rref(std::vector<std::vector<typename F::Elem>>& rows, const F& field,
                              bool from_right = false) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t ci = 0; ci < n && r < rows.size(); ++ci) {
    std::size_t col = from_right ? n - 1 - ci : ci;
    std::size_t pr = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!field.is_zero(rows[i][col])) {
        pr = i;
        break;
      }
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    auto inv = field.inv(rows[r][col]);
    for (auto& x : rows[r]) x = field.mul(inv, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || field.is_zero(rows[i][col])) continue;
      auto f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// reduce v against rref rows; true when v lies in the row span
template <class F>
bool span_reduce(const std::vector<std::vector<typename F::Elem>>& rows,
                 const std::vector<std::size_t>& pivots, const F& field,
                 std::vector<typename F::Elem>& v) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto f = v[pivots[i]];
    if (field.is_zero(f)) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = field.sub(v[j], field.mul(f, rows[i][j]));
  }
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

// canonical kernel basis of the linear map with the given matrix rows
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(
    std::vector<std::vector<typename F::Elem>> rows, const F& field, std::size_t n) {
  auto pivots = rref(rows, field, false);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename F::Elem> v(n, field.zero());
    v[j] = field.one();
    for (std::size_t i = 0; i < rows.size(); ++i)
      v[pivots[i]] = field.neg(rows[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

// linear span of the ideal generated by gens: closed under multiplication
// by every basis element; rows kept in right-pivot rref
template <class F>
struct IdealSpan {
  std::vector<std::vector<typename F::Elem>> rows;
  std::vector<std::size_t> pivots;
};

template <class F>
IdealSpan<F> ideal_span(const ExplicitKAlgebra<F>& A,
                        const std::vector<std::vector<typename F::Elem>>& gens) {
  IdealSpan<F> S;
  std::vector<std::vector<typename F::Elem>> work = gens;
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    auto red = v;
    if (span_reduce(S.rows, S.pivots, A.field, red)) continue;
    S.rows.push_back(v);
    S.pivots = rref(S.rows, A.field, true);
    for (std::size_t b = 0; b < A.dim; ++b) work.push_back(A.mul(A.basis_vec(b), v));
  }
  return S;
}

// quotient by the span of an ideal: basis = non-pivot coordinates
template <class F>
struct KQuotient {
  ExplicitKAlgebra<F> alg;
  std::vector<std::size_t> lift_idx;  // quotient basis index -> parent coordinate
  IdealSpan<F> span;

  std::vector<typename F::Elem> project(std::vector<typename F::Elem> v,
                                        const F& field) const {
    span_reduce(span.rows, span.pivots, field, v);
    std::vector<typename F::Elem> r;
    r.reserve(lift_idx.size());
    for (auto i : lift_idx) r.push_back(v[i]);
    return r;
  }

  std::vector<typename F::Elem> lift(const std::vector<typename F::Elem>& v,
                                     std::size_t parent_dim, const F& field) const {
    std::vector<typename F::Elem> r(parent_dim, field.zero());
    for (std::size_t i = 0; i < lift_idx.size(); ++i) r[lift_idx[i]] = v[i];
    return r;
  }
};

template <class F>
KQuotient<F> quotient_algebra(const ExplicitKAlgebra<F>& A, IdealSpan<F> S) {
  KQuotient<F> Q;
  Q.span = std::move(S);
  std::vector<bool> is_pivot(A.dim, false);
  for (auto p : Q.span.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < A.dim; ++i)
    if (!is_pivot[i]) Q.lift_idx.push_back(i);
  auto& B = Q.alg;
  B.field = A.field;
  B.dim = Q.lift_idx.size();
  for (auto i : Q.lift_idx) B.labels.push_back(i < A.labels.size() ? A.labels[i] : "");
  B.c.assign(B.dim, std::vector<typename ExplicitKAlgebra<F>::Vec>(B.dim));
  for (std::size_t a = 0; a < B.dim; ++a)
    for (std::size_t b = 0; b < B.dim; ++b)
      B.c[a][b] = Q.project(A.c[Q.lift_idx[a]][Q.lift_idx[b]], A.field);
  B.unit = Q.project(A.unit, A.field);
  return Q;
}

// monic minimal polynomial of a, as dense coefficient vector
template <class F>
std::vector<typename F::Elem> minimal_polynomial(const std::vector<typename F::Elem>& a,
                                                 const ExplicitKAlgebra<F>& A) {
  using Vec = typename ExplicitKAlgebra<F>::Vec;
  std::vector<Vec> rows, tracks;
  std::vector<std::size_t> pivots;
  Vec power = A.unit;
  for (std::size_t k = 0;; ++k) {
    Vec v = power;
    Vec t(k + 1, A.field.zero());
    t[k] = A.field.one();
    for (auto& tr : tracks) tr.resize(k + 1, A.field.zero());
    // eliminate against stored rows, tracking the combination
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto f = v[pivots[i]];
      if (A.field.is_zero(f)) continue;
      for (std::size_t j = 0; j < A.dim; ++j)
        v[j] = A.field.sub(v[j], A.field.mul(f, rows[i][j]));
      for (std::size_t j = 0; j <= k; ++j)
        t[j] = A.field.sub(t[j], A.field.mul(f, tracks[i][j]));
    }
    bool zero = true;
    std::size_t pc = 0;
    for (std::size_t j = 0; j < A.dim; ++j)
      if (!A.field.is_zero(v[j])) {
        zero = false;
        pc = j;
        break;
      }
    if (zero) return t;  // monic by construction: t[k] = 1
    auto inv = A.field.inv(v[pc]);
    for (auto& x : v) x = A.field.mul(inv, x);
    for (auto& x : t) x = A.field.mul(inv, x);
    rows.push_back(v);
    tracks.push_back(t);
    pivots.push_back(pc);
    power = A.mul(power, a);
  }
}

namespace detail {

template <class F>
std::vector<typename F::Elem> squarefree_part_field(const std::vector<typename F::Elem>& f,
                                                    const F& field) {
  if constexpr (F::is_rational) {
    return q_squarefree_part(f);
  } else {
    return p_squarefree_part(f, field.p);
  }
}

}  // namespace detail

// nilradical via iterated squarefree minimal polynomials; also returns the
// reduced quotient A/Rad(0)
template <class F>
struct NilradicalResult {
  KIdeal<F> ideal;        // generators in A coordinates
  KQuotient<F> quotient;  // A/Rad(0)
};

template <class F>
NilradicalResult<F> nilradical(const ExplicitKAlgebra<F>& A) {
  NilradicalResult<F> res;
  std::vector<std::vector<typename F::Elem>> gens;
  KQuotient<F> Q = quotient_algebra(A, ideal_span(A, gens));
  for (std::size_t i = 0; i < A.dim; ++i) {
    auto img = Q.project(A.basis_vec(i), A.field);
    auto mu = minimal_polynomial(img, Q.alg);
    auto g = detail::squarefree_part_field(mu, A.field);
    if (g.size() < mu.size()) {
      auto w = A.eval_poly(g, A.basis_vec(i));
      if (!A.vec_is_zero(w)) {
        gens.push_back(w);
        res.ideal.gens.push_back(w);
        Q = quotient_algebra(A, ideal_span(A, gens));
      }
      mu = g;
    }
    if (mu.size() == Q.alg.dim + 1) break;  // early exit: quotient is K[b_i]
  }
  res.quotient = std::move(Q);
  return res;
}

// ---- characteristic p: Frobenius and primary decomposition ----

struct FrobeniusData {
  std::vector<std::vector<Int>> matrix;  // columns of M_B(phi_p)
  std::vector<std::vector<Int>> fixed;   // canonical basis of ker(M - I)
};

inline FrobeniusData frobenius_space(const PAlgebra& A) {
  FrobeniusData d;
  const Int& p = A.field.p;
  for (std::size_t j = 0; j < A.dim; ++j)
    d.matrix.push_back(A.pow(A.basis_vec(j), p));
  // rows of (M - I)^T are the columns; kernel of the map v -> M v - v
  std::vector<std::vector<Int>> rows(A.dim, std::vector<Int>(A.dim, Int(0)));
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      rows[i][j] = d.matrix[j][i];
      if (i == j) rows[i][j] = fdiv_r(rows[i][j] - 1, p);
    }
  d.fixed = kernel_basis(rows, A.field, A.dim);
  return d;
}

// pairwise comaximal primary components of <0> in characteristic p
inline std::vector<KIdeal<PrimeField>> primary_decomposition_p(const PAlgebra& A,
                                                               RandomSource& rng) {
  const Int& p = A.field.p;
  std::vector<KIdeal<PrimeField>> out;
  std::vector<std::vector<std::vector<Int>>> work = {{}};
  while (!work.empty()) {
    auto gens = work.front();
    work.erase(work.begin());
    KQuotient<PrimeField> Q = quotient_algebra(A, ideal_span(A, gens));
    FrobeniusData fr = frobenius_space(Q.alg);
    if (fr.fixed.size() <= 1) {
      KIdeal<PrimeField> comp;
      comp.gens = gens;
      out.push_back(std::move(comp));
      continue;
    }
    // first fixed vector outside <1>
    std::vector<std::vector<Int>> unit_span = {Q.alg.unit};
    auto up = rref(unit_span, A.field, false);
    std::vector<Int> f;
    for (const auto& v : fr.fixed) {
      auto red = v;
      if (!span_reduce(unit_span, up, A.field, red)) {
        f = v;
        break;
      }
    }
    if (f.empty()) throw verification_error("primary_decomposition_p: no splitting element");
    auto mu = minimal_polynomial(f, Q.alg);
    PFactorList fl = factor_mod_p(mu, p, rng);
    for (const auto& [fac, e] : fl.factors) {
      if (p_deg(fac) != 1 || e != 1)
        throw verification_error(
            "primary_decomposition_p: minimal polynomial of a Frobenius-fixed element "
            "did not split into distinct linear factors");
      Int root = fdiv_r(-fac[0], p);
      auto w = Q.alg.sub(f, Q.alg.scale(root, Q.alg.unit));
      auto next = gens;
      next.push_back(Q.lift(w, A.dim, A.field));
      work.push_back(std::move(next));
    }
  }
  return out;
}

// ---- maximal ideals ----

namespace detail {

// over Q: split a reduced algebra into its field components by factoring
// minimal polynomials; returns generator lists in A coordinates
inline void split_reduced_q(const QAlgebra& A, std::vector<std::vector<Rat>> gens,
                            std::vector<std::vector<std::vector<Rat>>>& out) {
  RationalField F;
  KQuotient<RationalField> Q = quotient_algebra(A, ideal_span(A, gens));
  std::size_t d = Q.alg.dim;
  if (d == 1) {
    out.push_back(std::move(gens));
    return;
  }
  auto split_on = [&](const std::vector<Rat>& elem, const QFactorList& fl) {
    for (const auto& [fac, e] : fl.factors) {
      auto w = Q.alg.eval_poly(fac, elem);
      auto next = gens;
      next.push_back(Q.lift(w, A.dim, F));
      split_reduced_q(A, std::move(next), out);
    }
  };
  bool some_full_degree = false;
  for (std::size_t i = 0; i < d; ++i) {
    auto b = Q.alg.basis_vec(i);
    auto mu = minimal_polynomial(b, Q.alg);
    if (mu.size() == 2) continue;  // scalar element, mu = z - c
    QFactorList fl = factor_over_q(mu);
    if (fl.factors.size() > 1) {
      split_on(b, fl);
      return;
    }
    if (mu.size() == d + 1) some_full_degree = true;
  }
  if (some_full_degree) {
    // single irreducible minimal polynomial of full degree: field
    out.push_back(std::move(gens));
    return;
  }
  // primitive element fallback: c = sum lambda^j b_j over non-scalar basis
  for (Int lambda = 1; lambda <= Int(4 * d * d + 7); ++lambda) {
    auto cvec = Q.alg.zero_vec();
    Rat pw = 1;
    for (std::size_t j = 0; j < d; ++j) {
      cvec = Q.alg.add(cvec, Q.alg.scale(pw, Q.alg.basis_vec(j)));
      pw *= Rat(lambda);
    }
    auto mu = minimal_polynomial(cvec, Q.alg);
    if (mu.size() == d + 1) {
      QFactorList fl = factor_over_q(mu);
      if (fl.factors.size() == 1 && fl.factors[0].second == 1) {
        out.push_back(std::move(gens));
        return;
      }
      split_on(cvec, fl);
      return;
    }
  }
  throw verification_error("maximal_ideals: no primitive element found in reduced Q-algebra");
}

}  // namespace detail

template <class F>
std::vector<KIdeal<F>> maximal_ideals(const ExplicitKAlgebra<F>& A, RandomSource& rng) {
  NilradicalResult<F> nil = nilradical(A);
  std::vector<KIdeal<F>> out;
  if constexpr (F::is_rational) {
    (void)rng;
    std::vector<std::vector<std::vector<Rat>>> leaves;
    detail::split_reduced_q(nil.quotient.alg, {}, leaves);
    for (auto& leaf : leaves) {
      KIdeal<F> m;
      m.gens = nil.ideal.gens;
      for (auto& g : leaf)
        m.gens.push_back(nil.quotient.lift(g, A.dim, A.field));
      out.push_back(std::move(m));
    }
  } else {
    auto comps = primary_decomposition_p(nil.quotient.alg, rng);
    for (auto& comp : comps) {
      KIdeal<F> m;
      m.gens = nil.ideal.gens;
      for (auto& g : comp.gens)
        m.gens.push_back(nil.quotient.lift(g, A.dim, A.field));
      out.push_back(std::move(m));
    }
  }
  // canonical order by the rref span of each ideal
  std::sort(out.begin(), out.end(), [&](const KIdeal<F>& a, const KIdeal<F>& b) {
    auto sa = ideal_span(A, a.gens), sb = ideal_span(A, b.gens);
    if (sa.rows.size() != sb.rows.size()) return sa.rows.size() < sb.rows.size();
    return sa.rows < sb.rows;
  });
  return out;
}

}  // namespace zalg
