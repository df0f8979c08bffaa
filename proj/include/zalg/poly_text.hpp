#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "poly.hpp"

namespace zalg {

// Text syntax: integer or rational coefficients, '^' exponents, '*' optional
// between factors, variables from a declared name list.  The printer output
// parses back to the identical polynomial.

class PolyParser {
 public:
  PolyParser(std::string src, std::vector<std::string> vars, TermOrdering ord)
      : s_(std::move(src)), vars_(std::move(vars)), ord_(ord) {}

  PolyQ parse() {
    pos_ = 0;
    PolyQ p = parse_expr();
    skip_ws();
    if (pos_ != s_.size())
      throw input_error("polynomial parse error at offset " + std::to_string(pos_) +
                        " in \"" + s_ + "\"");
    return p;
  }

 private:
  std::string s_;
  std::vector<std::string> vars_;
  TermOrdering ord_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  PolyQ parse_expr() {
    PolyQ acc = eat('-') ? -parse_term() : (eat('+'), parse_term());
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  PolyQ parse_term() {
    PolyQ acc = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  PolyQ parse_factor() {
    PolyQ base = parse_base();
    if (eat('^')) {
      long long e = parse_uint();
      PolyQ r = PolyQ::constant(vars_.size(), ord_, Rat(1));
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long long parse_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw input_error("polynomial parse error: expected exponent in \"" + s_ + "\"");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) throw input_error("polynomial parse error: exponent too large");
      ++pos_;
    }
    return v;
  }

  PolyQ parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) throw input_error("polynomial parse error: unexpected end of \"" + s_ + "\"");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyQ e = parse_expr();
      if (!eat(')')) throw input_error("polynomial parse error: missing ')' in \"" + s_ + "\"");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        num += s_[pos_++];
      Rat v{Int(num)};
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        // rational literal only when followed by digits
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          std::string den;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            den += s_[pos_++];
          if (Int(den) == 0) throw input_error("polynomial parse error: zero denominator");
          v /= Rat(Int(den));
        } else {
          pos_ = save;
        }
      }
      return PolyQ::constant(vars_.size(), ord_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return PolyQ::variable(vars_.size(), ord_, i);
      throw input_error("polynomial parse error: unknown variable \"" + name + "\"");
    }
    throw input_error(std::string("polynomial parse error: unexpected character '") + c +
                      "' in \"" + s_ + "\"");
  }
};

inline PolyQ parse_poly_q(const std::string& s, const std::vector<std::string>& vars,
                          TermOrdering ord) {
  return PolyParser(s, vars, ord).parse();
}

inline PolyZ parse_poly_z(const std::string& s, const std::vector<std::string>& vars,
                          TermOrdering ord) {
  PolyQ q = parse_poly_q(s, vars, ord);
  PolyZ z(q.nvars, q.ord);
  for (const auto& m : q.mono) {
    if (boost::multiprecision::denominator(m.first) != 1)
      throw input_error("integer polynomial expected, found rational coefficient");
    z.mono.emplace_back(boost::multiprecision::numerator(m.first), m.second);
  }
  return z;
}

template <class C>
std::string print_poly(const Polynomial<C>& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& m : p.mono) {
    C c = m.first;
    bool neg = c < C(0);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool has_vars = !m.second.is_one();
    bool coeff_shown = !(c == C(1)) || !has_vars;
    if (coeff_shown) out << c;
    bool need_star = coeff_shown;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = m.second.e[i];
      if (e == 0) continue;
      if (need_star) out << "*";
      out << vars[i];
      if (e > 1) out << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace zalg
