#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diamond/ambiguity.hpp"
#include "diamond/chains.hpp"
#include "diamond/error.hpp"
#include "diamond/rewrite.hpp"
#include "support.hpp"

using namespace diamond;
using namespace diamond::testing;

namespace {

System monomial_x3() { return make_system({"x"}, Field::rationals(), {{"x^3", "0"}}); }

// Power series in t truncated at degree L, integer coefficients.
using Series = std::vector<long>;

Series multiply(const Series& a, const Series& b, std::size_t L) {
  Series out(L + 1, 0);
  for (std::size_t i = 0; i <= L; ++i)
    for (std::size_t j = 0; i + j <= L; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("chains of x^3") {
  System s = monomial_x3();
  auto chains = anick_chains(s, 4, 20);
  std::vector<std::pair<std::size_t, std::size_t>> got;  // (degree, length)
  for (const Chain& c : chains) got.emplace_back(c.degree, c.word.size());
  CHECK(got == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 3}, {2, 4}, {3, 6}, {4, 7}});
  CHECK(chains[1].tail == W(s, "x^2"));
  CHECK(chains[2].tail == W(s, "x"));
  CHECK(chains[3].tail == W(s, "x^2"));
  for (const Chain& c : chains)
    if (c.degree > 0) CHECK(chains[*c.parent].word * c.tail == c.word);
}

TEST_CASE("chains of xyz") {
  System s = xyz_system().monomial_part();
  auto chains = anick_chains(s, 4, 20);
  REQUIRE(chains.size() == 4);
  CHECK(chains[3].word == W(s, "x*y*z"));
  CHECK(chains[3].degree == 1);
}

TEST_CASE("non-minimal systems are refused") {
  System s = make_system({"x"}, Field::rationals(), {{"x^3", "0"}, {"x^5", "0"}});
  CHECK_THROWS_AS(anick_chains(s, 3, 10), PreconditionError);
  CHECK_THROWS_AS(chain_structure(s, W(s, "x^4")), PreconditionError);
  System letter = make_system({"x", "y"}, Field::rationals(), {{"x", "0"}});
  CHECK_THROWS_AS(anick_chains(letter, 3, 10), PreconditionError);
}

TEST_CASE("chain structure") {
  System s = monomial_x3();
  CHECK_FALSE(chain_structure(s, W(s, "x^5")).has_value());
  auto four = chain_structure(s, W(s, "x^4"));
  REQUIRE(four.has_value());
  CHECK(four->degree == 2);
  CHECK(four->tail == W(s, "x"));
  auto one = chain_structure(s, W(s, "x"));
  REQUIRE(one.has_value());
  CHECK(one->degree == 0);
  CHECK(one->tail == W(s, "x"));
}

TEST_CASE("differentials of x^3 chains") {
  System s = monomial_x3();
  AnickModel model(s, 4, 20);
  Field Q = Field::rationals();
  Word x = W(s, "x"), x3 = W(s, "x^3"), x4 = W(s, "x^4");

  ChainPoly d3(Q);
  d3.add_term({x, x, x}, Scalar(Q, 1));
  CHECK(model.differential(*model.find(x3)) == d3);

  ChainPoly d4(Q);
  d4.add_term({x, x3}, Scalar(Q, 1));
  d4.add_term({x3, x}, Scalar(Q, -1));
  CHECK(model.differential(*model.find(x4)) == d4);
  CHECK(model.differential(*model.find(x4)).to_string(s.alphabet()) == "[x|x^3] - [x^3|x]");

  CHECK(model.verify_d_squared().ok());
  CHECK(chain_differential(s, *model.find(x4)) == d4);
}

TEST_CASE("d^2 = 0 on small fixed systems") {
  for (auto rules : std::vector<std::vector<std::pair<std::string, std::string>>>{
           {{"x^2", "0"}}, {{"x^3", "0"}}, {{"x*y", "0"}, {"y*x", "0"}}, {{"x*y*x", "0"}, {"y^2", "0"}}}) {
    System s = make_system({"x", "y"}, Field::rationals(), rules);
    DSquaredReport r = verify_d_squared(s, 6, 14);
    CHECK(r.ok());
    CHECK(r.chains_checked > 2);
  }
}

TEST_CASE("every degree-1 differential is a single factorization into letters") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    System s = random_minimal_monomial(rng);
    AnickModel model(s, 1, 8);
    for (const Chain& c : model.chains()) {
      if (c.degree != 1) continue;
      ChainPoly d = model.differential(c);
      REQUIRE(d.terms().size() == 1);
      CHECK(d.terms().begin()->first.size() == c.word.size());
      CHECK(d.terms().begin()->second.is_one());
    }
  }
}

TEST_CASE("random minimal monomial systems") {
  Rng rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    System s = random_minimal_monomial(rng, trial % 2 ? Field::prime(2) : Field::rationals());
    AnickModel model(s, 4, 10);

    std::set<Word> two_chains, minimal_overlaps, lhs, one_chains;
    for (const Chain& c : model.chains()) {
      if (c.degree == 2) two_chains.insert(c.word);
      if (c.degree == 1) one_chains.insert(c.word);
      auto structure = chain_structure(s, c.word);
      REQUIRE(structure.has_value());
      CHECK(structure->degree == c.degree);
      CHECK(structure->tail == c.tail);
    }
    for (const auto& amb : find_overlaps(s))
      if (amb.minimal && amb.grade.size() <= 10) minimal_overlaps.insert(amb.grade);
    for (const Rule& r : s.rules()) lhs.insert(r.lhs);
    CHECK(two_chains == minimal_overlaps);
    CHECK(one_chains == lhs);

    // Words up to length 8 that are not enumerated carry no chain structure.
    std::set<Word> enumerated;
    for (const Chain& c : model.chains()) enumerated.insert(c.word);
    for (const Word& w : words_up_to(s.alphabet().size(), 8)) {
      if (w.empty() || enumerated.count(w)) continue;
      auto structure = chain_structure(s, w);
      if (structure) CHECK(structure->degree > 4);
    }

    DSquaredReport r = model.verify_d_squared();
    CHECK(r.ok());
  }
}

TEST_CASE("chains and irreducible words satisfy the Euler characteristic identity") {
  // With A(t) the series of irreducible words and V_n(t) the length series
  // of n-chains, A(t) * (1 - sum_n (-1)^n V_n(t)) = 1.
  Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    System s = trial == 0 ? monomial_x3() : random_minimal_monomial(rng);
    const std::size_t L = 9;
    Series a(L + 1, 0);
    for (const Word& w : irreducible_words(s, L)) a[w.size()] += 1;
    Series chain_series(L + 1, 0);
    chain_series[0] = 1;
    for (const Chain& c : anick_chains(s, L, L)) chain_series[c.word.size()] -= (c.degree % 2 == 0 ? 1 : -1);
    Series product = multiply(a, chain_series, L);
    Series one(L + 1, 0);
    one[0] = 1;
    CHECK(product == one);
  }
}
