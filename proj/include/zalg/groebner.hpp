#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "poly_text.hpp"
#include "reduction.hpp"
#include "zalgebra.hpp"

namespace zalg {

// ideal in Z[x1,...,xn] given by generators; finiteness of the quotient is a
// runtime-checked precondition where required
struct PIdeal {
  std::size_t nvars = 0;
  std::vector<PolyZ> gens;
};

struct StrongGroebnerBasis {
  TermOrdering ord = TermOrdering::DegRevLex;
  std::size_t nvars = 0;
  std::vector<PolyZ> elements;
  std::vector<Term> order_ideal;  // T^n \ {monic leading monomials}, ascending
};

// maps a polynomial to its representation vector over a fixed generator tuple
struct RepresentationOracle {
  std::vector<Term> terms;
  std::function<std::vector<Int>(const PolyZ&)> rv;
};

struct BMInput {
  RepresentationOracle oracle;
  Lattice relations;  // U with P/I isomorphic to Z^mu / U
};

// per-iteration record: the handled term, the Hermite solution row used in
// the append step (empty when none), and what was appended
struct BMStep {
  Term t;
  std::vector<Int> solution;
  bool added_to_basis = false;
  bool added_to_order_ideal = false;
};

// oracle for an ideal already given by a strong Groebner basis: the normal
// form of any polynomial is supported on the order ideal
inline RepresentationOracle oracle_from_gb(const std::vector<PolyZ>& gb,
                                           const std::vector<Term>& order_ideal) {
  RepresentationOracle o;
  o.terms = order_ideal;
  o.rv = [gb, order_ideal](const PolyZ& f) {
    PolyZ r = strong_normal_form(f, gb).remainder;
    std::vector<Int> v(order_ideal.size(), Int(0));
    for (const auto& m : r.mono) {
      auto it = std::find(order_ideal.begin(), order_ideal.end(), m.second);
      if (it == order_ideal.end())
        throw verification_error("oracle_from_gb: normal form leaves the order ideal");
      v[static_cast<std::size_t>(it - order_ideal.begin())] = m.first;
    }
    return v;
  };
  return o;
}

// oracle for an explicitly given algebra over the tuple (1, x1, ..., xn):
// products of indeterminates are rewritten through the structure constants
inline BMInput oracle_from_algebra(const ExplicitZAlgebra& R, TermOrdering ord) {
  if (!R.unital) throw precondition_error("oracle_from_algebra: algebra must be unital");
  BMInput in;
  in.oracle.terms.push_back(Term(R.n));
  for (std::size_t i = 0; i < R.n; ++i) {
    Term t(R.n);
    t.e[i] = 1;
    in.oracle.terms.push_back(t);
  }
  ExplicitZAlgebra A = R;
  in.oracle.rv = [A](const PolyZ& f) {
    ZElem acc = A.zero_elem();
    for (const auto& m : f.mono) {
      ZElem e = A.one();
      for (std::size_t i = 0; i < m.second.nvars(); ++i)
        for (int k = 0; k < m.second.e[i]; ++k) e = multiply(A, e, A.gen(i + 1));
      acc = add_elems(acc, scale_elem(m.first, e));
    }
    return acc;
  };
  in.relations = R.syzygies;
  (void)ord;
  return in;
}

// generalized Buchberger-Moeller intersection over Z: computes the reduced
// strong Groebner basis of the intersection of the input ideals together
// with a generating order ideal of the quotient module
inline StrongGroebnerBasis bm_intersect(const std::vector<BMInput>& inputs, TermOrdering ord,
                                        std::size_t max_order_ideal = 0,
                                        std::vector<BMStep>* trace = nullptr) {
  if (inputs.empty()) throw input_error("bm_intersect: no input ideals");
  if (!is_degree_compatible(ord))
    throw precondition_error("bm_intersect: term ordering must be degree compatible");
  std::size_t n = inputs[0].oracle.terms.at(0).nvars();
  std::size_t mu = 0;
  std::vector<std::size_t> offset;
  for (const auto& in : inputs) {
    offset.push_back(mu);
    mu += in.oracle.terms.size();
    for (const auto& t : in.oracle.terms)
      if (t.nvars() != n) throw input_error("bm_intersect: variable count mismatch");
  }
  if (max_order_ideal == 0) max_order_ideal = 10 * mu;
  // block-embedded relation rows N with Z^mu1/U1 + ... + Z^mus/Us = Z^mu/<N>
  std::vector<std::vector<Int>> N;
  for (std::size_t s = 0; s < inputs.size(); ++s) {
    const Lattice& U = inputs[s].relations;
    for (std::size_t r = 0; r < U.basis.rows(); ++r) {
      std::vector<Int> row(mu, Int(0));
      for (std::size_t j = 0; j < U.basis.cols(); ++j) row[offset[s] + j] = U.basis(r, j);
      N.push_back(std::move(row));
    }
  }
  StrongGroebnerBasis out;
  out.ord = ord;
  out.nvars = n;
  std::vector<std::vector<Int>> M;
  std::set<Term, TermLess> frontier(TermLess{ord});
  frontier.insert(Term(n));
  while (!frontier.empty()) {
    Term t = *frontier.begin();
    frontier.erase(frontier.begin());
    PolyZ tp = PolyZ::monomial(n, ord, Int(1), t);
    std::vector<Int> v(mu, Int(0));
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      std::vector<Int> part = inputs[s].oracle.rv(tp);
      for (std::size_t j = 0; j < part.size(); ++j) v[offset[s] + j] = part[j];
    }
    // solve v x0 - sum m_i x_i + sum n_i x_i = 0; the Hermite basis of the
    // solution module has at most one row with nonzero first component
    std::size_t ell = M.size(), k = N.size();
    IntMatrix B(1 + ell + k, mu);
    for (std::size_t j = 0; j < mu; ++j) B(0, j) = v[j];
    for (std::size_t i = 0; i < ell; ++i)
      for (std::size_t j = 0; j < mu; ++j) B(1 + i, j) = -M[i][j];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < mu; ++j) B(1 + ell + i, j) = N[i][j];
    Lattice sol = kernel_lattice(B.transpose());
    BMStep step;
    step.t = t;
    Int a0 = 0;
    std::vector<Int> arow;
    for (std::size_t r = 0; r < sol.basis.rows(); ++r)
      if (sol.basis(r, 0) != 0) {
        a0 = sol.basis(r, 0);
        arow = sol.basis.row(r);
        break;
      }
    if (a0 != 0) {
      PolyZ f = PolyZ::monomial(n, ord, a0, t);
      for (std::size_t i = 0; i < ell; ++i)
        f = f - PolyZ::monomial(n, ord, arow[1 + i], out.order_ideal[i]);
      out.elements.push_back(f);
      step.solution = arow;
      step.added_to_basis = true;
    }
    if (a0 == 0 || a0 != 1) {
      if (out.order_ideal.size() >= max_order_ideal)
        throw resource_error(
            "bm_intersect: order ideal bound exceeded; a quotient may not be finite");
      M.push_back(v);
      out.order_ideal.push_back(t);
      step.added_to_order_ideal = true;
      for (std::size_t i = 0; i < n; ++i) {
        Term u = t;
        u.e[i] += 1;
        bool skip = false;
        for (const auto& l : frontier)
          if (l.divides(u)) skip = true;
        for (const auto& g : out.elements)
          if (abs_int(g.lc()) == 1 && g.lt().divides(u)) skip = true;
        if (!skip) frontier.insert(u);
      }
    }
    if (trace) trace->push_back(std::move(step));
  }
  return out;
}

// strong Groebner basis of the defining ideal of an explicitly given algebra
inline StrongGroebnerBasis strong_gb_from_explicit(const ExplicitZAlgebra& R,
                                                   TermOrdering ord) {
  return bm_intersect({oracle_from_algebra(R, ord)}, ord);
}

// the terms outside the monic leading monomials of G, enumerated ascending
inline std::vector<Term> macaulay_generators(const StrongGroebnerBasis& G) {
  std::size_t n = G.nvars;
  std::vector<Term> monic;
  for (const auto& g : G.elements)
    if (abs_int(g.lc()) == 1) monic.push_back(g.lt());
  // a monic constant makes the ideal the unit ideal: nothing survives
  for (const auto& m : monic)
    if (m.is_one()) return {};
  // P/I finite requires a monic pure power of every variable
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& m : monic) {
      bool pure = m.e[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j)
        if (j != i && m.e[j] > 0) pure = false;
      if (pure) found = true;
    }
    if (!found)
      throw precondition_error("macaulay_generators: order ideal is infinite");
  }
  std::set<Term, TermLess> seen(TermLess{G.ord});
  std::deque<Term> queue;
  auto blocked = [&](const Term& t) {
    for (const auto& m : monic)
      if (m.divides(t)) return true;
    return false;
  };
  Term one(n);
  if (!blocked(one)) {
    seen.insert(one);
    queue.push_back(one);
  }
  while (!queue.empty()) {
    Term t = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Term u = t;
      u.e[i] += 1;
      if (blocked(u) || seen.count(u)) continue;
      seen.insert(u);
      queue.push_back(u);
    }
  }
  return std::vector<Term>(seen.begin(), seen.end());
}

namespace detail {

inline std::vector<Int> nf_coords(const PolyZ& f, const StrongGroebnerBasis& G,
                                  const std::vector<Term>& O) {
  PolyZ r = strong_normal_form(f, G.elements).remainder;
  std::vector<Int> v(O.size(), Int(0));
  for (const auto& m : r.mono) {
    auto it = std::find(O.begin(), O.end(), m.second);
    if (it == O.end())
      throw verification_error("normal form contains a term outside the order ideal");
    v[static_cast<std::size_t>(it - O.begin())] = m.first;
  }
  return v;
}

}  // namespace detail

// relation lattice U with P/I isomorphic to Z^k/<U> over the order ideal
inline Lattice module_presentation(const StrongGroebnerBasis& G) {
  const std::vector<Term>& O = G.order_ideal;
  std::size_t k = O.size();
  std::vector<std::vector<Int>> rows;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const Term& t = O[idx];
    // smallest l > 1 with l*s a leading monomial of G for some s dividing t
    Int ell = 0;
    for (const auto& g : G.elements) {
      Int c = abs_int(g.lc());
      if (c <= 1) continue;
      if (!g.lt().divides(t)) continue;
      if (ell == 0 || c < ell) ell = c;
    }
    if (ell == 0) continue;
    std::vector<Int> c(k, Int(0));
    c[idx] = ell;
    std::vector<Int> d =
        detail::nf_coords(PolyZ::monomial(G.nvars, G.ord, ell, t), G, O);
    for (std::size_t j = 0; j < k; ++j) c[j] -= d[j];
    rows.push_back(std::move(c));
  }
  return lattice_from_rows(IntMatrix::from_rows(rows, k), k);
}

// explicit representation of P/I on the order-ideal generators, with the
// structure tensor read off from pairwise normal forms
inline ExplicitZAlgebra explicit_rep_from_gb(const StrongGroebnerBasis& G) {
  std::vector<Term> O = G.order_ideal;
  if (O.empty()) {
    // the zero ring
    std::vector<std::vector<ZElem>> c{{{Int(1)}}};
    return make_algebra(0, true, c, {ZElem{Int(1)}}, {"1"});
  }
  if (!O.front().is_one())
    throw precondition_error("explicit_rep_from_gb: order ideal does not contain 1");
  std::size_t k = O.size();
  std::vector<std::vector<ZElem>> c(k, std::vector<ZElem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c[i][j] = detail::nf_coords(
          PolyZ::monomial(G.nvars, G.ord, Int(1), O[i] * O[j]), G, O);
  Lattice U = module_presentation(G);
  std::vector<ZElem> rows;
  for (std::size_t r = 0; r < U.basis.rows(); ++r) rows.push_back(U.basis.row(r));
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < G.nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
  std::vector<std::string> labels;
  for (const auto& t : O)
    labels.push_back(print_poly(PolyZ::monomial(G.nvars, G.ord, Int(1), t), vars));
  return make_algebra(k - 1, true, c, rows, labels);
}

namespace detail {

inline Term term_lcm(const Term& a, const Term& b) {
  Term r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

// S-polynomial and gcd-polynomial of a pair; both leading monomials cancel
// or drop to the coefficient gcd respectively
inline std::pair<PolyZ, PolyZ> critical_pair(const PolyZ& f, const PolyZ& g) {
  Term tau = term_lcm(f.lt(), g.lt());
  Int cf = f.lc(), cg = g.lc();
  Int l = lcm_int(cf, cg);
  PolyZ fs = f.times_term(tau / f.lt());
  PolyZ gs = g.times_term(tau / g.lt());
  PolyZ spoly = fs.scaled(l / cf) - gs.scaled(l / cg);
  Int u, w;
  ext_gcd(cf, cg, u, w);
  PolyZ gpoly = fs.scaled(u) + gs.scaled(w);
  return {spoly, gpoly};
}

inline bool pairs_reduce_to_zero(const std::vector<PolyZ>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto [s, gp] = critical_pair(G[i], G[j]);
      if (!s.is_zero() && !strong_normal_form(s, G).remainder.is_zero()) return false;
      if (!gp.is_zero() && !strong_normal_form(gp, G).remainder.is_zero()) return false;
    }
  return true;
}

// desk-scale strong completion of a generator list, used only by the checker
inline std::vector<PolyZ> complete_basis(const std::vector<PolyZ>& gens,
                                         std::size_t cap = 256) {
  std::vector<PolyZ> H;
  for (const auto& g : gens)
    if (!g.is_zero()) H.push_back(g);
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto [s, gp] = critical_pair(H[i], H[j]);
    for (PolyZ* p : {&s, &gp}) {
      if (p->is_zero()) continue;
      PolyZ r = strong_normal_form(*p, H).remainder;
      if (r.is_zero()) continue;
      if (H.size() >= cap)
        throw resource_error("complete_basis: completion bound exceeded");
      for (std::size_t q = 0; q < H.size(); ++q) pairs.emplace_back(q, H.size());
      H.push_back(r);
    }
  }
  return H;
}

}  // namespace detail

// checker: G is a strong Groebner basis of <G>, the generators of I lie in
// <G>, and the elements of G lie in I (via a completion of I's generators)
inline bool verify_strong_gb(const StrongGroebnerBasis& G, const PIdeal& I) {
  std::vector<PolyZ> elems;
  for (const auto& g : G.elements)
    if (!g.is_zero()) elems.push_back(g);
  if (!detail::pairs_reduce_to_zero(elems)) return false;
  if (!elems.empty())
    for (const auto& f : I.gens)
      if (!f.is_zero() && !strong_normal_form(f, elems).remainder.is_zero()) return false;
  if (elems.empty()) {
    for (const auto& f : I.gens)
      if (!f.is_zero()) return false;
    return true;
  }
  std::vector<PolyZ> H = detail::complete_basis(I.gens);
  if (H.empty()) return false;
  for (const auto& g : elems)
    if (!strong_normal_form(g, H).remainder.is_zero()) return false;
  return true;
}

}  // namespace zalg
