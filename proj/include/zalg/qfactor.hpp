#pragma once

#include <algorithm>

#include "fpfactor.hpp"

namespace zalg {

struct QFactorList {
  Rat unit = 1;
  std::vector<std::pair<UPolyQ, int>> factors;  // monic irreducible over Q, multiplicity

  UPolyQ product() const {
    UPolyQ r = {unit};
    for (const auto& [f, e] : factors)
      for (int i = 0; i < e; ++i) r = q_mul(r, f);
    return r;
  }
};

namespace detail {

using UPolyZ = std::vector<Int>;  // dense over Z

inline void z_trim(UPolyZ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline UPolyZ z_mul(const UPolyZ& a, const UPolyZ& b) {
  if (a.empty() || b.empty()) return {};
  UPolyZ r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// division by a monic divisor; true when exact, quotient in q
inline bool z_divide_monic(const UPolyZ& a, const UPolyZ& b, UPolyZ& q) {
  UPolyZ r = a;
  z_trim(r);
  if (b.empty() || b.back() != 1) throw precondition_error("z_divide_monic: divisor not monic");
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
  while (r.size() >= b.size()) {
    Int c = r.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    z_trim(r);
  }
  return r.empty();
}

// linear Hensel lifting of F = g0*h0 (mod p) to modulus p^k; F monic over Z
inline void hensel2(const UPolyZ& F, const UPolyP& g0, const UPolyP& h0, const Int& p,
                    int k, UPolyZ& g, UPolyZ& h) {
  // Bezout: s*g0 + t*h0 = 1 over F_p
  UPolyP old_r = g0, r = h0;
  UPolyP old_s = {Int(1)}, s1 = {};
  UPolyP old_t = {}, t1 = {Int(1)};
  while (!r.empty()) {
    UPolyP quo, rem;
    p_divmod(old_r, r, p, quo, rem);
    old_r = r; r = rem;
    UPolyP ns = p_sub(old_s, p_mul(quo, s1, p), p);
    old_s = s1; s1 = ns;
    UPolyP nt = p_sub(old_t, p_mul(quo, t1, p), p);
    old_t = t1; t1 = nt;
  }
  if (old_r.size() != 1)
    throw precondition_error("hensel2: factors not coprime modulo p");
  Int inv = inv_mod(old_r[0], p);
  UPolyP s = p_scale(old_s, inv, p), t = p_scale(old_t, inv, p);

  g.assign(g0.begin(), g0.end());
  h.assign(h0.begin(), h0.end());
  Int pj = p;
  for (int j = 1; j < k; ++j) {
    // e = (F - g*h) / p^j, taken mod p
    UPolyZ prod = z_mul(g, h);
    UPolyZ diff(std::max(F.size(), prod.size()), Int(0));
    for (std::size_t i = 0; i < F.size(); ++i) diff[i] += F[i];
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    UPolyP e;
    for (auto& x : diff) e.push_back(fdiv_r(x / pj, p));
    p_trim(e);
    if (!e.empty()) {
      UPolyP te = p_mul(t, e, p);
      UPolyP quo, b;
      p_divmod(te, g0, p, quo, b);
      UPolyP a = p_add(p_mul(s, e, p), p_mul(quo, h0, p), p);
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i >= g.size()) g.resize(i + 1, Int(0));
        g[i] += pj * b[i];
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i >= h.size()) h.resize(i + 1, Int(0));
        h[i] += pj * a[i];
      }
    }
    pj *= p;
  }
}

// lift a pairwise-coprime monic factorization of monic F from mod p to mod p^k
inline void hensel_tree(const UPolyZ& F, const std::vector<UPolyP>& fs, const Int& p,
                        int k, std::vector<UPolyZ>& out) {
  if (fs.size() == 1) {
    Int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    UPolyZ f = F;
    for (auto& c : f) c = fdiv_r(c, pk);
    z_trim(f);
    // F is monic mod p^k; restore the exact leading 1
    if (!f.empty()) f.back() = 1;
    out.push_back(f);
    return;
  }
  std::size_t half = fs.size() / 2;
  UPolyP g0 = {Int(1)}, h0 = {Int(1)};
  std::vector<UPolyP> left(fs.begin(), fs.begin() + half), right(fs.begin() + half, fs.end());
  for (const auto& f : left) g0 = p_mul(g0, f, p);
  for (const auto& f : right) h0 = p_mul(h0, f, p);
  UPolyZ g, h;
  hensel2(F, g0, h0, p, k, g, h);
  hensel_tree(g, left, p, k, out);
  hensel_tree(h, right, p, k, out);
}

inline Int sym_residue(const Int& c, const Int& m) {
  Int r = fdiv_r(c, m);
  if (2 * r > m) r -= m;
  return r;
}

// factor a monic squarefree integer polynomial into monic Z-irreducibles
inline std::vector<UPolyZ> zassenhaus_monic_squarefree(UPolyZ G) {
  z_trim(G);
  std::vector<UPolyZ> result;
  if (G.size() <= 2) {
    if (G.size() == 2) result.push_back(G);
    return result;
  }
  // smallest good prime p >= 3: G squarefree modulo p
  Int p = 3;
  for (;;) {
    UPolyP gp = p_normalize(G, p);
    if (p_deg(gp) == static_cast<int>(G.size()) - 1) {
      UPolyP d = p_derivative(gp, p);
      if (!d.empty() && p_gcd(gp, d, p).size() == 1) break;
    }
    do { p += 2; } while (!is_probable_prime(p));
  }
  RandomSource rng(0x5a55e);  // internal, fixed: the whole routine is deterministic
  PFactorList modular = factor_mod_p(p_normalize(G, p), p, rng);
  std::vector<UPolyP> fs;
  for (const auto& [f, e] : modular.factors) fs.push_back(f);
  if (fs.size() == 1) {
    result.push_back(G);
    return result;
  }
  // Mignotte: coefficients of any monic factor bounded by 2^n * sqrt(n+1) * |G|_inf
  int n = static_cast<int>(G.size()) - 1;
  Int maxc = 0;
  for (const auto& c : G) maxc = std::max(maxc, abs_int(c));
  Int bound = (Int(1) << n) * (isqrt(Int(n + 1)) + 1) * maxc;
  int k = 1;
  Int pk = p;
  while (pk < 2 * bound + 1) {
    pk *= p;
    ++k;
  }
  std::vector<UPolyZ> lifted;
  hensel_tree(G, fs, p, k, lifted);
  // subset recombination against exact division
  std::vector<int> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
  UPolyZ rest = G;
  bool found = true;
  while (found && live.size() > 1) {
    found = false;
    for (std::size_t size = 1; size * 2 <= live.size() && !found; ++size) {
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      for (;;) {
        UPolyZ cand = {Int(1)};
        for (std::size_t i : idx) {
          cand = z_mul(cand, lifted[live[i]]);
          for (auto& c : cand) c = fdiv_r(c, pk);
        }
        for (auto& c : cand) c = sym_residue(c, pk);
        z_trim(cand);
        UPolyZ quot;
        if (!cand.empty() && cand.back() == 1 && z_divide_monic(rest, cand, quot)) {
          result.push_back(cand);
          rest = quot;
          std::vector<int> next;
          for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            next.push_back(live[i]);
          }
          live = next;
          found = true;
          break;
        }
        // next combination
        std::size_t i = size;
        while (i-- > 0) {
          if (idx[i] + (size - i) < live.size()) {
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            break;
          }
          if (i == 0) goto combos_done;
        }
        continue;
      combos_done:
        break;
      }
    }
  }
  z_trim(rest);
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

inline bool uq_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return a[i] < b[i];
  return false;
}

}  // namespace detail

// complete factorization into monic Q-irreducibles; deterministic
inline QFactorList factor_over_q(const UPolyQ& f) {
  UPolyQ g = f;
  q_trim(g);
  if (g.empty()) throw precondition_error("factor_over_q: zero polynomial");
  QFactorList out;
  out.unit = g.back();
  if (g.size() == 1) return out;
  g = q_monic(g);
  // irreducible parts of the squarefree part, then multiplicities by division
  UPolyQ s = q_squarefree_part(g);
  // clear denominators: primitive integer form of s, then monicize over Z
  Int den = 1;
  for (const auto& c : s) den = lcm_int(den, boost::multiprecision::denominator(c));
  detail::UPolyZ F;
  for (const auto& c : s) F.push_back(boost::multiprecision::numerator(c * Rat(den)));
  Int cont = 0;
  for (const auto& c : F) cont = gcd_int(cont, c);
  if (F.back() < 0) cont = -cont;
  for (auto& c : F) c /= cont;
  Int lc = F.back();
  int n = static_cast<int>(F.size()) - 1;
  detail::UPolyZ G(F.size());
  // G(x) = lc^(n-1) F(x/lc) is monic over Z: G_i = F_i * lc^(n-1-i)
  G[n] = 1;
  Int powlc = 1;
  for (int i = n - 1; i >= 0; --i) {
    G[i] = F[i] * powlc;
    powlc *= lc;
  }
  std::vector<detail::UPolyZ> zfactors = detail::zassenhaus_monic_squarefree(G);
  for (const auto& H : zfactors) {
    // back-substitute: monic Q-factor H(lc*x) / lc^deg(H)
    UPolyQ h(H.size());
    Int pw = 1;
    for (std::size_t i = 0; i < H.size(); ++i) {
      h[i] = Rat(H[i] * pw);
      pw *= lc;
    }
    h = q_monic(h);
    int mult = 0;
    for (;;) {
      UPolyQ quo, rem;
      q_divmod(g, h, quo, rem);
      if (!rem.empty()) break;
      g = quo;
      ++mult;
    }
    out.factors.emplace_back(std::move(h), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return detail::uq_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

}  // namespace zalg
