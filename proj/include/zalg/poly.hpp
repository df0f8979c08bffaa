#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace zalg {

// power product in n variables, x1 > x2 > ... > xn (exponents[0] is x1)
struct Term {
  std::vector<int> e;

  Term() = default;
  explicit Term(std::size_t n) : e(n, 0) {}
  explicit Term(std::vector<int> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }

  int deg() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  bool is_one() const {
    for (int x : e)
      if (x) return false;
    return true;
  }

  bool divides(const Term& t) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > t.e[i]) return false;
    return true;
  }

  Term operator*(const Term& t) const {
    Term r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += t.e[i];
    return r;
  }

  Term operator/(const Term& t) const {
    Term r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
      r.e[i] -= t.e[i];
      if (r.e[i] < 0) throw precondition_error("term division: not divisible");
    }
    return r;
  }

  bool operator==(const Term& t) const { return e == t.e; }
};

enum class TermOrdering { DegRevLex, DegLex, Lex };

inline bool is_degree_compatible(TermOrdering o) { return o != TermOrdering::Lex; }

inline const char* ordering_name(TermOrdering o) {
  switch (o) {
    case TermOrdering::DegRevLex: return "degrevlex";
    case TermOrdering::DegLex: return "deglex";
    case TermOrdering::Lex: return "lex";
  }
  return "?";
}

// -1, 0, +1 with the convention x1 > x2 > ... > xn
inline int term_cmp(const Term& a, const Term& b, TermOrdering ord) {
  if (a.nvars() != b.nvars()) throw input_error("term_cmp: arity mismatch");
  std::size_t n = a.nvars();
  if (ord != TermOrdering::Lex) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
  }
  if (ord == TermOrdering::DegRevLex) {
    // ties broken by the rightmost nonzero entry of the difference, reversed
    for (std::size_t i = n; i-- > 0;) {
      int d = a.e[i] - b.e[i];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? -1 : 1;
  }
  return 0;
}

struct TermLess {
  TermOrdering ord;
  bool operator()(const Term& a, const Term& b) const { return term_cmp(a, b, ord) < 0; }
};

// sparse multivariate polynomial, monomials strictly decreasing, leading first
template <class C>
struct Polynomial {
  std::size_t nvars = 0;
  TermOrdering ord = TermOrdering::DegRevLex;
  std::vector<std::pair<C, Term>> mono;

  Polynomial() = default;
  Polynomial(std::size_t n, TermOrdering o) : nvars(n), ord(o) {}

  static Polynomial zero(std::size_t n, TermOrdering o) { return Polynomial(n, o); }

  static Polynomial constant(std::size_t n, TermOrdering o, const C& c) {
    Polynomial p(n, o);
    if (!(c == C(0))) p.mono.emplace_back(c, Term(n));
    return p;
  }

  static Polynomial monomial(std::size_t n, TermOrdering o, const C& c, Term t) {
    Polynomial p(n, o);
    if (!(c == C(0))) p.mono.emplace_back(c, std::move(t));
    return p;
  }

  static Polynomial variable(std::size_t n, TermOrdering o, std::size_t i) {
    Term t(n);
    t.e[i] = 1;
    return monomial(n, o, C(1), t);
  }

  bool is_zero() const { return mono.empty(); }

  const C& lc() const {
    if (is_zero()) throw precondition_error("lc of zero polynomial");
    return mono.front().first;
  }

  const Term& lt() const {
    if (is_zero()) throw precondition_error("lt of zero polynomial");
    return mono.front().second;
  }

  int total_deg() const {
    int d = -1;
    for (const auto& m : mono) d = std::max(d, m.second.deg());
    return d;
  }

  bool operator==(const Polynomial& o) const {
    return nvars == o.nvars && ord == o.ord && mono == o.mono;
  }

  void check_compatible(const Polynomial& o) const {
    if (nvars != o.nvars || ord != o.ord)
      throw input_error("polynomial arithmetic: variable count or ordering mismatch");
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& m : r.mono) m.first = -m.first;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(nvars, ord);
    std::size_t i = 0, j = 0;
    while (i < mono.size() || j < o.mono.size()) {
      if (i == mono.size()) {
        r.mono.push_back(o.mono[j++]);
      } else if (j == o.mono.size()) {
        r.mono.push_back(mono[i++]);
      } else {
        int c = term_cmp(mono[i].second, o.mono[j].second, ord);
        if (c > 0) {
          r.mono.push_back(mono[i++]);
        } else if (c < 0) {
          r.mono.push_back(o.mono[j++]);
        } else {
          C s = mono[i].first + o.mono[j].first;
          if (!(s == C(0))) r.mono.emplace_back(std::move(s), mono[i].second);
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::map<Term, C, TermLess> acc(TermLess{ord});
    for (const auto& a : mono)
      for (const auto& b : o.mono) {
        Term t = a.second * b.second;
        auto it = acc.find(t);
        if (it == acc.end())
          acc.emplace(std::move(t), a.first * b.first);
        else
          it->second += a.first * b.first;
      }
    Polynomial r(nvars, ord);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!(it->second == C(0))) r.mono.emplace_back(it->second, it->first);
    return r;
  }

  Polynomial scaled(const C& c) const {
    Polynomial r(nvars, ord);
    if (c == C(0)) return r;
    for (const auto& m : mono) r.mono.emplace_back(c * m.first, m.second);
    return r;
  }

  Polynomial times_term(const Term& t) const {
    Polynomial r(nvars, ord);
    for (const auto& m : mono) r.mono.emplace_back(m.first, m.second * t);
    return r;
  }

  // same monomials resorted under a different ordering
  Polynomial with_order(TermOrdering o) const {
    Polynomial r(nvars, o);
    r.mono = mono;
    std::sort(r.mono.begin(), r.mono.end(), [&](const auto& a, const auto& b) {
      return term_cmp(a.second, b.second, o) > 0;
    });
    return r;
  }
};

using PolyZ = Polynomial<Int>;
using PolyQ = Polynomial<Rat>;

}  // namespace zalg
