#pragma once

#include <algorithm>
#include <vector>

#include "rng.hpp"

namespace zalg {

struct IntFactorList {
  std::vector<std::pair<Int, int>> factors;  // (prime, multiplicity), primes ascending

  Int product() const {
    Int n = 1;
    for (const auto& [p, e] : factors)
      for (int i = 0; i < e; ++i) n *= p;
    return n;
  }
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> ps;
    std::vector<bool> sieve(10000, true);
    for (std::uint32_t i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (std::uint32_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

inline bool miller_rabin_witness(const Int& n, const Int& a) {
  // returns true when a proves n composite
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = fdiv_r(x * x, n);
    if (x == n - 1) return false;
  }
  return true;
}

inline int jacobi(Int a, Int n) {
  a = fdiv_r(a, n);
  int r = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      Int m = n & 7;
      if (m == 3 || m == 5) r = -r;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) r = -r;
    a = fdiv_r(a, n);
  }
  return n == 1 ? r : 0;
}

// strong Lucas probable-prime test with Selfridge's parameter choice
inline bool strong_lucas(const Int& n) {
  Int d = 5;
  for (;;) {
    int j = jacobi(d, n);
    if (j == -1) break;
    if (j == 0 && abs_int(d) != n) return false;
    d = d > 0 ? Int(-(d + 2)) : Int(-(d - 2));
  }
  Int p = 1, q = (1 - d) / 4;
  Int k = n + 1;
  int s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }
  // compute U_k, V_k by binary expansion of k
  Int u = 1, v = p, qk = q;
  std::vector<int> bits;
  for (Int t = k; t > 0; t >>= 1) bits.push_back(static_cast<int>(t & 1));
  std::reverse(bits.begin(), bits.end());
  bits.erase(bits.begin());  // leading bit gives the (U_1, V_1) start
  Int inv2 = inv_mod(2, n);
  for (int b : bits) {
    // double
    u = fdiv_r(u * v, n);
    v = fdiv_r(v * v - 2 * qk, n);
    qk = fdiv_r(qk * qk, n);
    if (b) {
      Int u2 = fdiv_r((p * u + v) * inv2, n);
      Int v2 = fdiv_r((d * u + p * v) * inv2, n);
      u = u2;
      v = v2;
      qk = fdiv_r(qk * q, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (int i = 1; i < s; ++i) {
    v = fdiv_r(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = fdiv_r(qk * qk, n);
  }
  return false;
}

}  // namespace detail

// deterministic Miller-Rabin base set below 2^64, BPSW above
inline bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  static const Int two64 = Int(1) << 64;
  if (n < two64) {
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
      if (detail::miller_rabin_witness(n, a)) return false;
    return true;
  }
  if (detail::miller_rabin_witness(n, 2)) return false;
  // perfect squares never pass the Lucas parameter search
  Int r = isqrt(n);
  if (r * r == n) return false;
  return detail::strong_lucas(n);
}

namespace detail {

inline Int pollard_brent(const Int& n, RandomSource& rng) {
  if ((n & 1) == 0) return 2;
  for (;;) {
    Int y = rng.next_int_below(n - 1) + 1;
    Int c = rng.next_int_below(n - 1) + 1;
    Int m = 64, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = fdiv_r(y * y + c, n);
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          y = fdiv_r(y * y + c, n);
          q = fdiv_r(q * abs_int(x - y), n);
        }
        g = gcd_int(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = fdiv_r(ys * ys + c, n);
        g = gcd_int(abs_int(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

inline void factor_rec(const Int& n, RandomSource& rng, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_rec(d, rng, out);
  factor_rec(n / d, rng, out);
}

}  // namespace detail

// complete prime factorization of n >= 1
inline IntFactorList factor_integer(Int n, RandomSource& rng) {
  if (n < 1) throw precondition_error("factor_integer: n must be positive");
  IntFactorList out;
  std::vector<Int> primes;
  for (std::uint32_t p : detail::small_primes()) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) detail::factor_rec(n, rng, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.factors.empty() && out.factors.back().first == p)
      ++out.factors.back().second;
    else
      out.factors.emplace_back(p, 1);
  }
  return out;
}

}  // namespace zalg
