#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/error.hpp"
#include "diamond/poly.hpp"
#include "support.hpp"

using namespace diamond;
using namespace diamond::testing;

namespace {

const Alphabet xyz = letters(3);
const Field Q = Field::rationals();

Word w(const std::string& text) { return parse_word(text, xyz); }
Poly p(const std::string& text, Field f = Field::rationals()) { return parse_poly(text, xyz, f); }

}  // namespace

TEST_CASE("scalars over Q and F_p") {
  Field F5 = Field::prime(5);
  CHECK(Scalar(F5, 7) == Scalar(F5, 2));
  CHECK(Scalar(F5, -1) == Scalar(F5, 4));
  CHECK((Scalar(F5, 2) * Scalar(F5, 3)).is_one());
  CHECK((Scalar(F5, 3).inverse() * Scalar(F5, 3)).is_one());
  CHECK(Scalar::fraction(Q, 2, 4) == Scalar::fraction(Q, 1, 2));
  CHECK(Scalar::fraction(F5, 1, 2) == Scalar(F5, 3));
  CHECK_THROWS_AS(Scalar::fraction(Field::prime(2), 1, 2), ParseError);
  CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(F5, 1), FieldMismatch);
  CHECK_THROWS_AS(Scalar(F5, 0).inverse(), PreconditionError);
  CHECK_THROWS_AS(Field::prime(4), PreconditionError);
  CHECK(Scalar::fraction(Q, -3, 6).to_string() == "-1/2");
}

TEST_CASE("concatenation") {
  CHECK(w("x*y") * w("z") == w("x*y*z"));
  CHECK(Word{} * w("x*y*z") == w("x*y*z"));
  CHECK(w("x") * w("x") == w("x^2"));
}

TEST_CASE("occurrences") {
  auto occ = occurrences(w("x^3"), w("x^4"));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].prefix == Word{});
  CHECK(occ[0].suffix == w("x"));
  CHECK(occ[1].prefix == w("x"));
  CHECK(occ[1].suffix == Word{});

  occ = occurrences(w("x*y*z"), w("x*y*z"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].prefix.empty());
  CHECK(occ[0].suffix.empty());

  CHECK(occurrences(w("x*y*z"), w("y*z*x")).empty());
  CHECK_THROWS_AS(occurrences(Word{}, w("x")), PreconditionError);
}

TEST_CASE("occurrences agree with a sliding-window scan") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = uniform(rng, 1, 3);
    Word pattern = random_word(rng, n, 1, 3);
    Word host = random_word(rng, n, 0, 9);
    std::size_t naive = 0;
    for (std::size_t i = 0; i + pattern.size() <= host.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < pattern.size(); ++j) match = match && host[i + j] == pattern[j];
      naive += match;
    }
    auto occ = occurrences(pattern, host);
    REQUIRE(occ.size() == naive);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      CHECK(occ[i].prefix * pattern * occ[i].suffix == host);
      if (i) CHECK(occ[i - 1].position() < occ[i].position());
    }
  }
}

TEST_CASE("polynomial ring operations") {
  CHECK(poly_add(p("x - y"), p("y")) == p("x"));
  CHECK(poly_mul_sandwich(w("x"), p("x*y*z - y^3"), w("z")) == p("x^2*y*z^2 - x*y^3*z"));
  CHECK(poly_scale(Scalar(Q, 0), p("x + 3*y")).is_zero());
  CHECK(p("2*x - 2*x").is_zero());
  CHECK_THROWS_AS(p("x") + p("x", Field::prime(3)), FieldMismatch);
}

TEST_CASE("parsing") {
  Poly f = p("x^3 + y^3 + z^3");
  CHECK(f.size() == 3);
  CHECK(f.coefficient(w("x^3")).is_one());
  CHECK(f.coefficient(w("z^3")).is_one());

  Poly g = p("x*y - y*x");
  CHECK(g.coefficient(w("x*y")) == Scalar(Q, 1));
  CHECK(g.coefficient(w("y*x")) == Scalar(Q, -1));

  CHECK(p(" 1/2 * x ^ 2 ").coefficient(w("x^2")) == Scalar::fraction(Q, 1, 2));
  CHECK(p("3").coefficient(Word{}) == Scalar(Q, 3));
  CHECK(p("-x + 1").coefficient(w("x")) == Scalar(Q, -1));

  CHECK_THROWS_AS(p("x*w"), ParseError);
  CHECK_THROWS_AS(p("x +"), ParseError);
  CHECK_THROWS_AS(p("x^0"), ParseError);
  CHECK_THROWS_AS(p("x**y"), ParseError);
  CHECK_THROWS_AS(p("1/0*x"), ParseError);
  CHECK_THROWS_AS(p("1/2*x", Field::prime(2)), ParseError);
  CHECK_THROWS_AS(parse_word("2*x", xyz), ParseError);
  CHECK_THROWS_AS(parse_word("x + y", xyz), ParseError);
}

TEST_CASE("printing") {
  CHECK(format_poly(p("z^3 + x^3 + y^3"), xyz) == "x^3 + y^3 + z^3");
  CHECK(format_poly(p("x*y - y*x"), xyz) == "x*y - y*x");
  CHECK(format_poly(Poly(Q), xyz) == "0");
  CHECK(format_poly(p("-1/2*x*x*y + 1"), xyz) == "-1/2*x^2*y + 1");
  CHECK(format_poly(p("2*x - y", Field::prime(3)), xyz) == "2*x + 2*y");
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ParseError);
  CHECK_THROWS_AS(Alphabet({"1x"}), ParseError);
  CHECK(Alphabet({"a_1", "B2"}).index("B2") == 1);
  CHECK(is_valid_generator_name("x_0"));
  CHECK_FALSE(is_valid_generator_name("_x"));
}

TEST_CASE("print/parse round trip on random polynomials") {
  Rng rng(5);
  for (Field f : {Q, Field::prime(2), Field::prime(7)}) {
    for (int trial = 0; trial < 500; ++trial) {
      Poly q = random_poly(rng, f, 3, 6, 5);
      CHECK(parse_poly(format_poly(q, xyz), xyz, f) == q);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(7);
  for (Field f : {Q, Field::prime(3)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Poly a = random_poly(rng, f, 3, 4, 3);
      Poly b = random_poly(rng, f, 3, 4, 3);
      Poly c = random_poly(rng, f, 3, 4, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      Word u = random_word(rng, 3, 0, 2), v = random_word(rng, 3, 0, 2);
      Word s = random_word(rng, 3, 0, 2), t = random_word(rng, 3, 0, 2);
      Poly left = a.sandwiched(u, v) * b.sandwiched(s, t);
      Poly flat = Poly::monomial(f, u) * a * Poly::monomial(f, v * s) * b * Poly::monomial(f, t);
      CHECK(left == flat);
      Scalar k = random_scalar(rng, f);
      CHECK(poly_scale(k, a + b) == poly_scale(k, a) + poly_scale(k, b));
    }
  }
}
