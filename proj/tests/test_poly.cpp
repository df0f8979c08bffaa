#include <catch2/catch_amalgamated.hpp>

#include "zalg/poly.hpp"
#include "zalg/poly_text.hpp"
#include "zalg/reduction.hpp"
#include "zalg/rng.hpp"
#include "zalg/upoly.hpp"

using namespace zalg;

namespace {

PolyZ pz(const std::string& s, const std::vector<std::string>& vars,
         TermOrdering ord = TermOrdering::DegRevLex) {
  return parse_poly_z(s, vars, ord);
}

PolyZ random_poly(RandomSource& rng, std::size_t nvars, TermOrdering ord) {
  PolyZ p = PolyZ::zero(nvars, ord);
  int terms = 1 + static_cast<int>(rng.next_below(4));
  for (int t = 0; t < terms; ++t) {
    Term tm(nvars);
    for (auto& e : tm.e) e = static_cast<int>(rng.next_below(3));
    p = p + PolyZ::monomial(nvars, ord, Int(rng.next_range(-5, 5)), tm);
  }
  return p;
}

}  // namespace

TEST_CASE("term ordering conventions") {
  Term x({1, 0}), y({0, 1}), one({0, 0});
  Term x2({2, 0}), xy({1, 1}), y2({0, 2});

  // x1 > x2 > ... for every ordering
  for (auto ord : {TermOrdering::DegRevLex, TermOrdering::DegLex, TermOrdering::Lex})
    CHECK(term_cmp(x, y, ord) > 0);

  // degree compatibility
  CHECK(term_cmp(x2, y, TermOrdering::DegRevLex) > 0);
  CHECK(term_cmp(xy, x, TermOrdering::DegRevLex) > 0);

  // ascending chain 1 < y < x < y^2 < xy < x^2 under DegRevLex
  std::vector<Term> chain = {one, y, x, y2, xy, x2};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(term_cmp(chain[i], chain[i + 1], TermOrdering::DegRevLex) < 0);

  // lex ignores degree: x > y^5
  CHECK(term_cmp(x, Term({0, 5}), TermOrdering::Lex) > 0);
  CHECK_THROWS_AS(term_cmp(x, Term({1, 0, 0}), TermOrdering::DegRevLex), input_error);
}

TEST_CASE("polynomial ring arithmetic") {
  std::vector<std::string> v = {"x", "y"};
  PolyZ f = pz("x+y", v);
  CHECK(f * f == pz("x^2+2x*y+y^2", v));
  CHECK(f + PolyZ::zero(2, TermOrdering::DegRevLex) == f);
  CHECK((f - f).is_zero());
  CHECK(pz("(x-y)*(x+y)", v) == pz("x^2-y^2", v));

  RandomSource rng(11);
  for (int iter = 0; iter < 120; ++iter) {
    PolyZ a = random_poly(rng, 2, TermOrdering::DegRevLex);
    PolyZ b = random_poly(rng, 2, TermOrdering::DegRevLex);
    PolyZ c = random_poly(rng, 2, TermOrdering::DegRevLex);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }

  PolyZ mixed = PolyZ::zero(3, TermOrdering::DegLex);
  CHECK_THROWS_AS(f + mixed, input_error);
}

TEST_CASE("monomial sorting follows the active ordering") {
  std::vector<std::string> v = {"x", "y"};
  PolyZ f = pz("y^3 + x^2 + x + 1", v, TermOrdering::DegRevLex);
  CHECK(f.lt() == Term({0, 3}));
  PolyZ g = f.with_order(TermOrdering::Lex);
  CHECK(g.lt() == Term({2, 0}));
  for (std::size_t i = 0; i + 1 < g.mono.size(); ++i)
    CHECK(term_cmp(g.mono[i].second, g.mono[i + 1].second, TermOrdering::Lex) > 0);
}

TEST_CASE("strong normal form") {
  std::vector<std::string> v = {"x", "y"};
  PolyZ g1 = pz("4x-2y", v);

  SECTION("member of basis reduces to zero") {
    auto r = strong_normal_form(g1, {g1});
    CHECK(r.remainder.is_zero());
    CHECK(replay_reduction(g1, {g1}, r));
  }

  SECTION("full mode requires coefficient divisibility") {
    auto r = strong_normal_form(pz("5x", v), {g1});
    CHECK(r.remainder == pz("5x", v));
    auto r8 = strong_normal_form(pz("8x", v), {g1});
    CHECK(r8.remainder == pz("4y", v));
    CHECK(replay_reduction(pz("8x", v), {g1}, r8));
  }

  SECTION("partial mode leaves a coefficient remainder") {
    auto r = strong_normal_form(pz("5x", v), {g1}, ReductionMode::Partial);
    CHECK(r.remainder == pz("x+2y", v));
    CHECK(replay_reduction(pz("5x", v), {g1}, r));
  }

  SECTION("coefficient blocks the term divisor") {
    std::vector<PolyZ> gbx = {pz("4x-2y", v), pz("y^2", v), pz("2x*y", v), pz("x^2", v)};
    auto r = strong_normal_form(pz("x*y", v), gbx);
    CHECK(r.remainder == pz("x*y", v));
  }

  SECTION("stability and trace replay on random inputs") {
    RandomSource rng(12);
    std::vector<PolyZ> G = {pz("4x-2y", v), pz("y^2", v), pz("2x*y", v), pz("x^2", v)};
    for (int iter = 0; iter < 100; ++iter) {
      PolyZ f = random_poly(rng, 2, TermOrdering::DegRevLex);
      for (auto mode : {ReductionMode::Full, ReductionMode::Partial}) {
        auto r = strong_normal_form(f, G, mode);
        CHECK(replay_reduction(f, G, r));
        auto again = strong_normal_form(r.remainder, G, mode);
        CHECK(again.remainder == r.remainder);
        CHECK(again.steps.empty());
      }
    }
  }
}

TEST_CASE("squarefree part over Q") {
  // (z-1)^2 -> z-1
  UPolyQ f = {Rat(1), Rat(-2), Rat(1)};
  CHECK(q_squarefree_part(f) == UPolyQ({Rat(-1), Rat(1)}));
  // squarefree input unchanged (monic)
  UPolyQ g = {Rat(-6), Rat(1), Rat(1)};
  CHECK(q_squarefree_part(g) == g);
  // (z-1)^2 (z+2) -> (z-1)(z+2)
  UPolyQ h = q_mul(f, UPolyQ{Rat(2), Rat(1)});
  CHECK(q_squarefree_part(h) == q_mul(UPolyQ{Rat(-1), Rat(1)}, UPolyQ{Rat(2), Rat(1)}));
}

TEST_CASE("squarefree part over F_p") {
  // z^2 over F_2 -> z (p-th power branch)
  CHECK(p_squarefree_part(UPolyP{0, 0, 1}, 2) == UPolyP({0, 1}));

  // root multisets agree, exhaustively over small fields
  RandomSource rng(13);
  for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
    for (int iter = 0; iter < 30; ++iter) {
      int d = 1 + static_cast<int>(rng.next_below(6));
      UPolyP f(d + 1);
      for (auto& c : f) c = rng.next_int_below(p);
      f.back() = 1;
      UPolyP s = p_squarefree_part(f, p);
      CHECK(p_rem(f, s, p).empty());  // s divides f
      if (s.size() > 1) {
        UPolyP d1 = p_derivative(s, p);
        CHECK(p_gcd(s, d1.empty() ? UPolyP{Int(1)} : d1, p).size() == 1);
      }
      for (Int a = 0; a < p; ++a)
        CHECK((p_eval(f, a, p) == 0) == (p_eval(s, a, p) == 0));
    }
  }
}

TEST_CASE("polynomial text round trip") {
  std::vector<std::string> v = {"x", "y"};
  for (const char* s : {"0", "1", "-1", "x", "-x", "x + y", "x^2 - y^2", "2*x*y",
                        "4*x - 2*y", "x^2 + 5*x", "3*x^2 + 3*x", "x*y + y", "-7*x^2*y^3 + 2"}) {
    PolyZ p = pz(s, v);
    std::string printed = print_poly(p, v);
    CHECK(parse_poly_z(printed, v, TermOrdering::DegRevLex) == p);
  }
  // printer output is stable under reprint
  PolyZ p = pz("2y - 4x + x^2*y", v);
  CHECK(print_poly(parse_poly_z(print_poly(p, v), v, TermOrdering::DegRevLex), v) ==
        print_poly(p, v));

  // rationals and implicit '*'
  PolyQ q = parse_poly_q("1/2x^2 - 3/4", v, TermOrdering::DegRevLex);
  CHECK(q.lc() == Rat(1, 2));
  CHECK_THROWS_AS(parse_poly_z("1/2x", v, TermOrdering::DegRevLex), input_error);
  CHECK_THROWS_AS(parse_poly_z("x+z", v, TermOrdering::DegRevLex), input_error);
  CHECK_THROWS_AS(parse_poly_z("x+", v, TermOrdering::DegRevLex), input_error);
}
