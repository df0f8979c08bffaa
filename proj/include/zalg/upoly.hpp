#pragma once

#include <vector>

#include "bigint.hpp"

namespace zalg {

// Dense univariate polynomials, coefficient of z^i at index i.
// Two flavors: over Q (UPolyQ) and over F_p with an explicit modulus
// argument on every operation (UPolyP, coefficients kept in [0, p)).

using UPolyQ = std::vector<Rat>;
using UPolyP = std::vector<Int>;

// ---- rational coefficients ----

inline void q_trim(UPolyQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int q_deg(const UPolyQ& f) { return static_cast<int>(f.size()) - 1; }

inline UPolyQ q_add(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  q_trim(r);
  return r;
}

inline UPolyQ q_sub(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  q_trim(r);
  return r;
}

inline UPolyQ q_mul(const UPolyQ& a, const UPolyQ& b) {
  if (a.empty() || b.empty()) return {};
  UPolyQ r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  q_trim(r);
  return r;
}

inline UPolyQ q_scale(const UPolyQ& a, const Rat& c) {
  if (c == 0) return {};
  UPolyQ r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline UPolyQ q_monic(const UPolyQ& a) {
  if (a.empty()) throw precondition_error("monic of zero polynomial");
  return q_scale(a, Rat(1) / a.back());
}

inline void q_divmod(const UPolyQ& a, const UPolyQ& b, UPolyQ& q, UPolyQ& r) {
  if (b.empty()) throw precondition_error("univariate division by zero");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rat c = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    q_trim(r);
    if (!r.empty() && r.size() >= b.size() && r.back() == 0) q_trim(r);
    if (r.size() < b.size()) break;
  }
  q_trim(q);
}

inline UPolyQ q_rem(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ q, r;
  q_divmod(a, b, q, r);
  return r;
}

inline UPolyQ q_quot(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ q, r;
  q_divmod(a, b, q, r);
  if (!r.empty()) throw precondition_error("univariate division not exact");
  return q;
}

inline UPolyQ q_gcd(UPolyQ a, UPolyQ b) {
  q_trim(a);
  q_trim(b);
  while (!b.empty()) {
    UPolyQ r = q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return q_monic(a);
}

inline UPolyQ q_derivative(const UPolyQ& f) {
  UPolyQ d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rat(static_cast<long>(i)));
  q_trim(d);
  return d;
}

inline Rat q_eval(const UPolyQ& f, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

// monic product of the distinct irreducible factors (char 0)
inline UPolyQ q_squarefree_part(const UPolyQ& f) {
  UPolyQ g = f;
  q_trim(g);
  if (g.empty()) throw precondition_error("squarefree_part of zero polynomial");
  if (g.size() == 1) return {Rat(1)};
  UPolyQ d = q_derivative(g);
  UPolyQ c = q_gcd(g, d);
  if (c.size() <= 1) return q_monic(g);
  return q_monic(q_quot(g, c));
}

// ---- prime field coefficients ----

inline void p_trim(UPolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int p_deg(const UPolyP& f) { return static_cast<int>(f.size()) - 1; }

inline UPolyP p_normalize(UPolyP f, const Int& p) {
  for (auto& x : f) x = fdiv_r(x, p);
  p_trim(f);
  return f;
}

inline UPolyP p_add(const UPolyP& a, const UPolyP& b, const Int& p) {
  UPolyP r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = fdiv_r(r[i] + b[i], p);
  for (auto& x : r) x = fdiv_r(x, p);
  p_trim(r);
  return r;
}

inline UPolyP p_sub(const UPolyP& a, const UPolyP& b, const Int& p) {
  UPolyP r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& x : r) x = fdiv_r(x, p);
  p_trim(r);
  return r;
}

inline UPolyP p_mul(const UPolyP& a, const UPolyP& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  UPolyP r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x = fdiv_r(x, p);
  p_trim(r);
  return r;
}

inline UPolyP p_scale(const UPolyP& a, const Int& c, const Int& p) {
  UPolyP r = a;
  for (auto& x : r) x = fdiv_r(x * c, p);
  p_trim(r);
  return r;
}

inline UPolyP p_monic(const UPolyP& a, const Int& p) {
  if (a.empty()) throw precondition_error("monic of zero polynomial");
  return p_scale(a, inv_mod(a.back(), p), p);
}

inline void p_divmod(const UPolyP& a, const UPolyP& b, const Int& p, UPolyP& q, UPolyP& r) {
  if (b.empty()) throw precondition_error("univariate division by zero");
  Int binv = inv_mod(b.back(), p);
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Int(0));
  while (r.size() >= b.size() && !r.empty()) {
    Int c = fdiv_r(r.back() * binv, p);
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = fdiv_r(r[shift + i] - c * b[i], p);
    p_trim(r);
    if (r.size() < b.size()) break;
  }
  p_trim(q);
}

inline UPolyP p_rem(const UPolyP& a, const UPolyP& b, const Int& p) {
  UPolyP q, r;
  p_divmod(a, b, p, q, r);
  return r;
}

inline UPolyP p_quot(const UPolyP& a, const UPolyP& b, const Int& p) {
  UPolyP q, r;
  p_divmod(a, b, p, q, r);
  if (!r.empty()) throw precondition_error("univariate division not exact");
  return q;
}

inline UPolyP p_gcd(UPolyP a, UPolyP b, const Int& p) {
  a = p_normalize(std::move(a), p);
  b = p_normalize(std::move(b), p);
  while (!b.empty()) {
    UPolyP r = p_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return p_monic(a, p);
}

inline UPolyP p_derivative(const UPolyP& f, const Int& p) {
  UPolyP d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(fdiv_r(f[i] * Int(static_cast<long>(i)), p));
  p_trim(d);
  return d;
}

inline Int p_eval(const UPolyP& f, const Int& x, const Int& p) {
  Int v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = fdiv_r(v * x + f[i], p);
  return v;
}

// g^e mod (f, p)
inline UPolyP p_powmod(UPolyP g, Int e, const UPolyP& f, const Int& p) {
  UPolyP r = {Int(1)};
  g = p_rem(p_normalize(std::move(g), p), f, p);
  while (e > 0) {
    if ((e & 1) != 0) r = p_rem(p_mul(r, g, p), f, p);
    g = p_rem(p_mul(g, g, p), f, p);
    e >>= 1;
  }
  return r;
}

// p-th root of f(z) = g(z^p), valid over F_p where c^(1/p) = c
inline UPolyP p_pth_root(const UPolyP& f, const Int& p) {
  UPolyP r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % static_cast<std::size_t>(p) == 0) {
      r.push_back(f[i]);
    } else if (f[i] != 0) {
      throw precondition_error("p-th root: polynomial is not of the form g(z^p)");
    }
  }
  p_trim(r);
  return r;
}

// monic product of the distinct irreducible factors over F_p,
// including the p-th-power branch f = g(z^p)
inline UPolyP p_squarefree_part(const UPolyP& f, const Int& p) {
  UPolyP g = p_normalize(f, p);
  if (g.empty()) throw precondition_error("squarefree_part of zero polynomial");
  if (g.size() == 1) return {Int(1)};
  g = p_monic(g, p);
  UPolyP d = p_derivative(g, p);
  if (d.empty()) return p_squarefree_part(p_pth_root(g, p), p);
  UPolyP c = p_gcd(g, d, p);
  UPolyP w = p_quot(g, c, p);  // product of factors with multiplicity not divisible by p
  // factors of multiplicity divisible by p survive in c / gcd(c, w^deg)
  UPolyP rest = c;
  for (;;) {
    UPolyP h = p_gcd(rest, w, p);
    if (h.size() <= 1) break;
    rest = p_quot(rest, h, p);
  }
  if (rest.size() <= 1) return w;
  UPolyP other = p_squarefree_part(p_pth_root(rest, p), p);
  return p_quot(p_mul(w, other, p), p_gcd(w, other, p), p);
}

}  // namespace zalg
