#pragma once

#include "zalg/zalgebra.hpp"

// shared Z-algebra fixtures used across the test suite

namespace fixtures {

using zalg::ExplicitZAlgebra;
using zalg::Int;
using zalg::ZElem;

inline std::vector<std::vector<ZElem>> tensor_from_ints(
    const std::vector<std::vector<std::vector<int>>>& t) {
  std::vector<std::vector<ZElem>> c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& row : t[i]) {
      ZElem v;
      for (int x : row) v.push_back(Int(x));
      c[i].push_back(std::move(v));
    }
  return c;
}

// non-unital, generators g1, g2, g3:
// g1^2 = 3g1, g1g3 = 2g2, g2^2 = g1+g2, other products zero;
// relation rows (3,0,0) and (-1,0,4)
inline ExplicitZAlgebra alg1() {
  auto c = tensor_from_ints({{{3, 0, 0}, {0, 0, 0}, {0, 2, 0}},
                             {{0, 0, 0}, {1, 1, 0}, {0, 0, 0}},
                             {{0, 2, 0}, {0, 0, 0}, {0, 0, 0}}});
  return zalg::make_algebra(2, false, c, {{3, 0, 0}, {-1, 0, 4}}, {"g1", "g2", "g3"});
}

// Z[x,y]/<x^3+x^2, 3x^2+3x, xy+y, y^2, 2y> with module generators (1, x^2, x, y)
inline ExplicitZAlgebra alg2() {
  auto c = tensor_from_ints({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                             {{0, 1, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}},
                             {{0, 0, 1, 0}, {0, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}},
                             {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 0, 0}}});
  return zalg::make_algebra(3, true, c, {{0, 0, 0, 2}, {0, 3, 3, 0}},
                            {"1", "x^2", "x", "y"});
}

// Z[x,y,z]/<6z, 6y, x^2+x-6, z^2, y^2, xy-y, xz-y, yz> with generators (1, x, y, z).
// Expanding x^2*z two ways (x*(xz) = y versus (x^2)z = 6z - y) shows the ideal
// also contains 2y - 6z, so that row is part of the module relations.
inline ExplicitZAlgebra zxyz() {
  auto c = tensor_from_ints(
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
       {{0, 1, 0, 0}, {6, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}},
       {{0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
       {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
  return zalg::make_algebra(3, true, c, {{0, 0, 6, 0}, {0, 0, 0, 6}, {0, 0, 2, -6}},
                            {"1", "x", "y", "z"});
}

// Z[x,y]/<x^2+5x, xy, y^2-y, 6y> with generators (1, x, y)
inline ExplicitZAlgebra idem() {
  auto c = tensor_from_ints({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                             {{0, 1, 0}, {0, -5, 0}, {0, 0, 0}},
                             {{0, 0, 1}, {0, 0, 0}, {0, 0, 1}}});
  return zalg::make_algebra(2, true, c, {{0, 0, 6}}, {"1", "x", "y"});
}

// generators (1, g1, ..., g5), relation ideal <6, 3g1, 3g2, 3g3>;
// nontrivial products g4^2 = g5, g5^2 = g4, g4g5 = 1, all others zero.
// Note: the printed product table is not associative modulo the relations
// (e.g. (g4g5)g1 vs g4(g5g1)); the idempotent-lifting path never multiplies
// through the inconsistent triples, so the fixture is kept as printed.
inline ExplicitZAlgebra lift() {
  std::vector<std::vector<std::vector<int>>> t(6);
  auto unit = [](std::size_t k) {
    std::vector<int> v(6, 0);
    v[k] = 1;
    return v;
  };
  std::vector<int> zero(6, 0);
  for (std::size_t i = 0; i < 6; ++i) t[i].assign(6, zero);
  for (std::size_t j = 0; j < 6; ++j) {
    t[0][j] = unit(j);
    t[j][0] = unit(j);
  }
  t[4][4] = unit(5);
  t[5][5] = unit(4);
  t[4][5] = unit(0);
  t[5][4] = unit(0);
  auto c = tensor_from_ints(t);
  return zalg::make_algebra(5, true, c,
                            {{6, 0, 0, 0, 0, 0},
                             {0, 3, 0, 0, 0, 0},
                             {0, 0, 3, 0, 0, 0},
                             {0, 0, 0, 3, 0, 0}},
                            {"1", "g1", "g2", "g3", "g4", "g5"});
}

// small finite algebra Z[y]/<y^2, 2y, 4> with generators (1, y); 8 elements
inline ExplicitZAlgebra fin8() {
  auto c = tensor_from_ints({{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
  return zalg::make_algebra(1, true, c, {{4, 0}, {0, 2}}, {"1", "y"});
}

// trivial algebra: Z itself (n = 0, 1*1 = 1)
inline ExplicitZAlgebra zring() {
  auto c = tensor_from_ints({{{1}}});
  return zalg::make_algebra(0, true, c, {}, {"1"});
}

// free quadratic algebra Z[t]/<t^2-2>, torsion-free
inline ExplicitZAlgebra sqrt2() {
  auto c = tensor_from_ints({{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}});
  return zalg::make_algebra(1, true, c, {}, {"1", "t"});
}

}  // namespace fixtures
