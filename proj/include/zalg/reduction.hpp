#pragma once

#include "poly.hpp"

namespace zalg {

enum class ReductionMode { Full, Partial };

// one step of f -= coeff * t * G[g_index]
struct ReductionStep {
  std::size_t g_index;
  Int coeff;
  Term t;
};

struct ReductionResult {
  PolyZ remainder;
  std::vector<ReductionStep> steps;
};

// Strong division over Z: the monomial c*t reduces by g when LT(g) | t and
// LC(g) | c.  In Partial mode a monomial whose term is divisible may also be
// reduced to a coefficient remainder in [0, |LC(g)|).
inline ReductionResult strong_normal_form(const PolyZ& f, const std::vector<PolyZ>& G,
                                          ReductionMode mode = ReductionMode::Full) {
  ReductionResult res;
  res.remainder = PolyZ::zero(f.nvars, f.ord);
  PolyZ work = f;
  for (const auto& g : G) {
    f.check_compatible(g);
    if (g.is_zero()) throw precondition_error("strong_normal_form: zero divisor in basis");
  }
  while (!work.is_zero()) {
    Int c = work.lc();
    Term t = work.lt();
    bool reduced = false;
    // exact-coefficient division first
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (!G[k].lt().divides(t)) continue;
      if (c % G[k].lc() != 0) continue;
      Int q = c / G[k].lc();
      Term s = t / G[k].lt();
      work = work - G[k].times_term(s).scaled(q);
      res.steps.push_back({k, q, s});
      reduced = true;
      break;
    }
    if (!reduced && mode == ReductionMode::Partial) {
      for (std::size_t k = 0; k < G.size(); ++k) {
        if (!G[k].lt().divides(t)) continue;
        Int lc = G[k].lc();
        Int r = fdiv_r(c, abs_int(lc));
        if (r == c) continue;
        Int q = (c - r) / lc;
        Term s = t / G[k].lt();
        work = work - G[k].times_term(s).scaled(q);
        res.steps.push_back({k, q, s});
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      res.remainder = res.remainder + PolyZ::monomial(f.nvars, f.ord, c, t);
      work = work - PolyZ::monomial(f.nvars, f.ord, c, t);
    }
  }
  return res;
}

// replay the trace: f must equal remainder + sum of the recorded multiples
inline bool replay_reduction(const PolyZ& f, const std::vector<PolyZ>& G,
                             const ReductionResult& r) {
  PolyZ acc = r.remainder;
  for (const auto& s : r.steps)
    acc = acc + G[s.g_index].times_term(s.t).scaled(s.coeff);
  return acc == f;
}

}  // namespace zalg
