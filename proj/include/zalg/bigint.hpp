#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <stdexcept>
#include <string>

namespace zalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// error categories; the CLI maps these to distinct exit codes
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// floor division: quotient rounded toward -inf, remainder in [0, |d|)
inline Int fdiv_q(const Int& a, const Int& d) {
  Int q = a / d, r = a % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

inline Int fdiv_r(const Int& a, const Int& d) {
  Int r = a % d;
  if (r != 0 && ((r < 0) != (d < 0))) r += d;
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

// g = gcd(a,b) = s*a + t*b, g >= 0
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s = 1, s1 = 0;
  Int old_t = 0, t1 = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s1; old_s = s1; s1 = tmp;
    tmp = old_t - q * t1; old_t = t1; t1 = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  s = old_s; t = old_t;
  return old_r;
}

// a^e mod m, m > 1, e >= 0
inline Int pow_mod(const Int& a, const Int& e, const Int& m) {
  Int base = fdiv_r(a, m);
  return boost::multiprecision::powm(base, e, m);
}

inline Int inv_mod(const Int& a, const Int& m) {
  Int s, t;
  Int g = ext_gcd(fdiv_r(a, m), m, s, t);
  if (g != 1) throw precondition_error("inv_mod: element not invertible modulo " + m.str());
  return fdiv_r(s, m);
}

inline std::size_t bit_length(const Int& a) {
  if (a == 0) return 0;
  return boost::multiprecision::msb(abs_int(a)) + 1;
}

inline Int isqrt(const Int& a) { return boost::multiprecision::sqrt(a); }

}  // namespace zalg
