#pragma once

#include <algorithm>

#include "intfactor.hpp"
#include "upoly.hpp"

namespace zalg {

struct PFactorList {
  Int unit = 1;
  std::vector<std::pair<UPolyP, int>> factors;  // monic irreducible, multiplicity

  UPolyP product(const Int& p) const {
    UPolyP r = {fdiv_r(unit, p)};
    for (const auto& [f, e] : factors)
      for (int i = 0; i < e; ++i) r = p_mul(r, f, p);
    return r;
  }
};

namespace detail {

// canonical order: by degree, then coefficient vectors lexicographically
inline bool upoly_less(const UPolyP& a, const UPolyP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// squarefree decomposition of a monic polynomial over F_p (char-p Yun)
inline void p_sqfree_decomp(const UPolyP& f, const Int& p, int scale,
                            std::vector<std::pair<UPolyP, int>>& out) {
  if (f.size() <= 1) return;
  UPolyP d = p_derivative(f, p);
  if (d.empty()) {
    p_sqfree_decomp(p_pth_root(f, p), p, scale * static_cast<int>(p), out);
    return;
  }
  UPolyP c = p_gcd(f, d, p);
  UPolyP w = p_quot(f, c, p);
  int i = 1;
  while (w.size() > 1) {
    UPolyP y = p_gcd(w, c, p);
    UPolyP z = p_quot(w, y, p);
    if (z.size() > 1) out.emplace_back(z, i * scale);
    w = std::move(y);
    c = p_quot(c, w, p);
    ++i;
  }
  if (c.size() > 1) p_sqfree_decomp(p_pth_root(c, p), p, scale * static_cast<int>(p), out);
}

inline UPolyP random_upoly(RandomSource& rng, int deg_below, const Int& p) {
  UPolyP a(deg_below);
  for (auto& c : a) c = rng.next_int_below(p);
  p_trim(a);
  return a;
}

// split the product g of irreducibles of equal degree d (Cantor-Zassenhaus)
inline void p_equal_degree(const UPolyP& g, int d, const Int& p, RandomSource& rng,
                           std::vector<UPolyP>& out) {
  if (p_deg(g) == d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    UPolyP a = random_upoly(rng, p_deg(g), p);
    if (a.size() <= (p == 2 ? 0u : 1u)) continue;
    UPolyP h = p_gcd(a, g, p);
    if (h.size() <= 1) {
      if (p == 2) {
        // trace map a + a^2 + ... + a^(2^(d-1))
        UPolyP b = a, cur = a;
        for (int i = 1; i < d; ++i) {
          cur = p_powmod(cur, 2, g, p);
          b = p_add(b, cur, p);
        }
        h = p_gcd(b, g, p);
      } else {
        Int pd = 1;
        for (int i = 0; i < d; ++i) pd *= p;
        Int e = (pd - 1) / 2;
        UPolyP b = p_powmod(a, e, g, p);
        h = p_gcd(p_sub(b, UPolyP{Int(1)}, p), g, p);
      }
    }
    if (h.size() > 1 && p_deg(h) < p_deg(g)) {
      p_equal_degree(h, d, p, rng, out);
      p_equal_degree(p_quot(g, h, p), d, p, rng, out);
      return;
    }
  }
}

// distinct-degree then equal-degree on a monic squarefree polynomial
inline void p_factor_squarefree(UPolyP g, const Int& p, RandomSource& rng,
                                std::vector<UPolyP>& out) {
  UPolyP h = {Int(0), Int(1)};  // z
  UPolyP z = h;
  for (int d = 1; 2 * d <= p_deg(g); ++d) {
    h = p_powmod(h, p, g, p);
    UPolyP gd = p_gcd(p_sub(h, z, p), g, p);
    if (gd.size() > 1) {
      p_equal_degree(gd, d, p, rng, out);
      g = p_quot(g, gd, p);
      h = p_rem(h, g, p);
    }
  }
  if (p_deg(g) > 0) out.push_back(g);
}

}  // namespace detail

// complete irreducible factorization over F_p
inline PFactorList factor_mod_p(const UPolyP& f, const Int& p, RandomSource& rng) {
  UPolyP g = p_normalize(f, p);
  if (g.empty()) throw precondition_error("factor_mod_p: zero polynomial");
  PFactorList out;
  out.unit = g.back();
  g = p_monic(g, p);
  std::vector<std::pair<UPolyP, int>> sqfree;
  detail::p_sqfree_decomp(g, p, 1, sqfree);
  for (const auto& [part, mult] : sqfree) {
    std::vector<UPolyP> irr;
    detail::p_factor_squarefree(part, p, rng, irr);
    for (auto& h : irr) out.factors.emplace_back(std::move(h), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return detail::upoly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

}  // namespace zalg
