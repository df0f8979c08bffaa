#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "zalg/io.hpp"

using namespace zalg;

namespace {

std::string round_trip_zalg(const AlgebraDocument& d) {
  std::string text = print_zalg(d);
  AlgebraDocument back = parse_zalg(text);
  REQUIRE(back.name == d.name);
  REQUIRE(back.algebra.n == d.algebra.n);
  REQUIRE(back.algebra.unital == d.algebra.unital);
  REQUIRE(back.algebra.syzygies == d.algebra.syzygies);
  for (std::size_t i = 0; i <= d.algebra.n; ++i)
    for (std::size_t j = 0; j <= d.algebra.n; ++j)
      REQUIRE(back.algebra.c[i][j] == d.algebra.c[i][j]);
  return text;
}

}  // namespace

TEST_CASE("zalg documents round trip byte for byte") {
  for (const auto& [name, R] :
       {std::pair<std::string, ExplicitZAlgebra>{"alg2", fixtures::alg2()},
        {"zxyz", fixtures::zxyz()},
        {"idem", fixtures::idem()},
        {"fin8", fixtures::fin8()},
        {"sqrt2", fixtures::sqrt2()},
        {"zring", fixtures::zring()},
        {"alg1", fixtures::alg1()}}) {
    AlgebraDocument d{name, R};
    std::string text = round_trip_zalg(d);
    CHECK(print_zalg(parse_zalg(text)) == text);
  }
}

TEST_CASE("zalg parser reports broken documents") {
  AlgebraDocument d{"idem", fixtures::idem()};
  json j = json::parse(print_zalg(d));

  SECTION("bad schema") {
    j["schema"] = "zalg/9";
    CHECK_THROWS_AS(parse_zalg(j.dump()), input_error);
  }
  SECTION("not JSON at all") {
    CHECK_THROWS_AS(parse_zalg("{"), input_error);
  }
  SECTION("missing field") {
    j.erase("tensor");
    CHECK_THROWS_AS(parse_zalg(j.dump()), input_error);
  }
  SECTION("tensor row of wrong length") {
    j["tensor"][0][2] = json::array({1, 0});
    CHECK_THROWS_AS(parse_zalg(j.dump()), input_error);
  }
  SECTION("tensor index out of range") {
    j["tensor"][0][0] = 7;
    CHECK_THROWS_AS(parse_zalg(j.dump()), input_error);
  }
  SECTION("missing mirror entry is named in the message") {
    // drop (1, 0) but keep (0, 1)
    json kept = json::array();
    for (const auto& e : j["tensor"])
      if (!(e[0] == 1 && e[1] == 0)) kept.push_back(e);
    j["tensor"] = kept;
    try {
      parse_zalg(j.dump());
      FAIL("expected rejection");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    }
  }
  SECTION("asymmetric mirror entry") {
    for (auto& e : j["tensor"])
      if (e[0] == 1 && e[1] == 0) e[2] = json::array({0, 0, 1});
    CHECK_THROWS_AS(parse_zalg(j.dump()), input_error);
  }
}

TEST_CASE("large integers serialize as strings") {
  Int big("123456789012345678901234567890");
  auto c = fixtures::tensor_from_ints({{{1}}});
  ExplicitZAlgebra R = make_algebra(0, true, c, {{big}}, {"1"});
  AlgebraDocument d{"big", R};
  std::string text = print_zalg(d);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  AlgebraDocument back = parse_zalg(text);
  CHECK(back.algebra.syzygies.basis(0, 0) == big);
  CHECK(print_zalg(back) == text);
}

TEST_CASE("small integers stay numeric") {
  AlgebraDocument d{"fin8", fixtures::fin8()};
  std::string text = print_zalg(d);
  CHECK(text.find("\"4\"") == std::string::npos);
}

TEST_CASE("kalg documents round trip") {
  KAlgebraDocument d;
  d.name = "qdual";
  d.rational = true;
  auto& A = d.q;
  A.field = RationalField{};
  A.dim = 2;
  A.labels = {"1", "e"};
  A.c = {{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
         {{Rat(0), Rat(1)}, {Rat(1, 2), Rat(0)}}};
  A.unit = A.basis_vec(0);
  std::string text = print_kalg(d);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  KAlgebraDocument back = parse_kalg(text);
  REQUIRE(back.rational);
  CHECK(back.q.c[1][1][0] == Rat(1, 2));
  CHECK(print_kalg(back) == text);
}

TEST_CASE("kalg prime field documents reduce entries mod p") {
  KAlgebraDocument d;
  d.name = "fp";
  d.rational = false;
  auto& A = d.f;
  A.field = PrimeField{5};
  A.dim = 2;
  A.labels = {"1", "t"};
  A.c = {{{Int(1), Int(0)}, {Int(0), Int(1)}}, {{Int(0), Int(1)}, {Int(2), Int(0)}}};
  A.unit = A.basis_vec(0);
  std::string text = print_kalg(d);
  json j = json::parse(text);
  j["tensor"][3][2][0] = -3;  // -3 = 2 mod 5, entry (1,1)
  KAlgebraDocument back = parse_kalg(j.dump());
  CHECK(back.f.c[1][1][0] == Int(2));

  j["field"] = 6;
  CHECK_THROWS_AS(parse_kalg(j.dump()), input_error);
}

TEST_CASE("ideal documents: polynomial and element forms") {
  IdealDocument p;
  p.name = "pi";
  p.polynomial = true;
  p.variables = {"x", "y"};
  p.gens = {parse_poly_z("x^2 - 2*y", p.variables, TermOrdering::DegRevLex),
            parse_poly_z("3", p.variables, TermOrdering::DegRevLex)};
  std::string text = print_ideal(p);
  IdealDocument back = parse_ideal(text);
  REQUIRE(back.polynomial);
  REQUIRE(back.gens.size() == 2);
  CHECK(back.gens[0] == p.gens[0]);
  CHECK(print_ideal(back) == text);

  IdealDocument e;
  e.name = "ei";
  e.elements = {{Int(0), Int(1), Int(0)}};
  IdealDocument eback = parse_ideal(print_ideal(e));
  REQUIRE_FALSE(eback.polynomial);
  CHECK(eback.elements == e.elements);

  CHECK_THROWS_AS(parse_ideal("{\"schema\": \"ideal/1\", \"name\": \"x\"}"),
                  input_error);
}
