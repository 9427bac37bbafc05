#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diamond/order.hpp"
#include "diamond/poly.hpp"
#include "diamond/system.hpp"

namespace diamond::testing {

inline Alphabet letters(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  return Alphabet(std::vector<std::string>(names, names + n));
}

inline System make_system(std::vector<std::string> names, Field field,
                          const std::vector<std::pair<std::string, std::string>>& rules) {
  Alphabet alphabet(std::move(names));
  std::vector<Rule> out;
  for (const auto& [lhs, rhs] : rules)
    out.push_back({parse_word(lhs, alphabet), parse_poly(rhs, alphabet, field)});
  return System(alphabet, field, std::move(out));
}

inline System xyz_system() {
  return make_system({"x", "y", "z"}, Field::rationals(), {{"x*y*z", "x^3 + y^3 + z^3"}});
}

inline MeasureCertificate xyz_measure(const System& s) {
  return MeasureCertificate({{parse_word("x*y*z", s.alphabet()), 3}, {parse_word("y", s.alphabet()), 1}});
}

inline System x3_system() {
  return make_system({"x", "y", "z"}, Field::rationals(), {{"x^3", "x*y*z - y^3 - z^3"}});
}

// deglex with z < y < x
inline DeglexOrder zyx_order() { return DeglexOrder({1, 1, 1}, {2, 1, 0}); }

inline Poly P(const System& s, const std::string& text) { return parse_poly(text, s.alphabet(), s.field()); }
inline Word W(const System& s, const std::string& text) { return parse_word(text, s.alphabet()); }

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t min_len, std::size_t max_len) {
  std::vector<Letter> letters(uniform(rng, min_len, max_len));
  for (auto& x : letters) x = static_cast<Letter>(uniform(rng, 0, alphabet_size - 1));
  return Word(std::move(letters));
}

inline Scalar random_scalar(Rng& rng, Field field) {
  if (field.is_rational()) {
    long num = static_cast<long>(uniform(rng, 0, 10)) - 5;
    long den = static_cast<long>(uniform(rng, 1, 4));
    return Scalar::fraction(field, num, den);
  }
  return Scalar(field, static_cast<long>(uniform(rng, 0, field.characteristic() - 1)));
}

inline Poly random_poly(Rng& rng, Field field, std::size_t alphabet_size, std::size_t max_terms,
                        std::size_t max_len) {
  Poly p(field);
  std::size_t n = uniform(rng, 0, max_terms);
  for (std::size_t i = 0; i < n; ++i) p.add_term(random_word(rng, alphabet_size, 0, max_len), random_scalar(rng, field));
  return p;
}

inline std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Letter x = 0; x < alphabet_size; ++x) next.push_back(w * Word{x});
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_len; ++l) {
    auto level = words_of_length(alphabet_size, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline DeglexOrder random_order(Rng& rng, std::size_t alphabet_size) {
  std::vector<Letter> asc(alphabet_size);
  for (Letter i = 0; i < alphabet_size; ++i) asc[i] = i;
  std::shuffle(asc.begin(), asc.end(), rng);
  return DeglexOrder(std::vector<std::uint64_t>(alphabet_size, 1), asc);
}

struct RandomSystem {
  System system;
  DeglexOrder order;
};

// Length-homogeneous system over `field`: every rhs word has the length of
// its lhs and is deglex-smaller, so the order certifies termination.
inline RandomSystem random_homogeneous_system(Rng& rng, Field field, std::size_t max_alphabet = 3,
                                              std::size_t max_rules = 3, std::size_t max_lhs = 4) {
  std::size_t n = uniform(rng, 1, max_alphabet);
  DeglexOrder order = random_order(rng, n);
  std::size_t rule_count = uniform(rng, 1, max_rules);
  std::vector<Rule> rules;
  std::vector<Word> seen;
  for (std::size_t attempt = 0; rules.size() < rule_count && attempt < 50; ++attempt) {
    Word lhs = random_word(rng, n, 1, max_lhs);
    if (std::find(seen.begin(), seen.end(), lhs) != seen.end()) continue;
    std::vector<Word> smaller;
    for (const Word& w : words_of_length(n, lhs.size()))
      if (order.less(w, lhs)) smaller.push_back(w);
    Poly rhs(field);
    std::size_t terms = smaller.empty() ? 0 : uniform(rng, 0, std::min<std::size_t>(3, smaller.size()));
    for (std::size_t t = 0; t < terms; ++t) {
      Scalar c = random_scalar(rng, field);
      if (c.is_zero()) c = Scalar::one(field);
      rhs.add_term(smaller[uniform(rng, 0, smaller.size() - 1)], c);
    }
    seen.push_back(lhs);
    rules.push_back({std::move(lhs), std::move(rhs)});
  }
  return {System(letters(n), field, std::move(rules)), order};
}

// Monomial system with no lhs of length one and no lhs dividing another.
inline System random_minimal_monomial(Rng& rng, Field field = Field::rationals(), std::size_t max_alphabet = 3,
                                      std::size_t max_rules = 3, std::size_t max_lhs = 4) {
  for (;;) {
    std::size_t n = uniform(rng, 1, max_alphabet);
    std::size_t count = uniform(rng, 1, max_rules);
    std::vector<Word> lhs;
    for (std::size_t i = 0; i < count; ++i) {
      Word w = random_word(rng, n, 2, max_lhs);
      bool ok = true;
      for (const Word& v : lhs) ok = ok && !v.contains(w) && !w.contains(v);
      if (ok) lhs.push_back(std::move(w));
    }
    std::vector<Rule> rules;
    for (auto& w : lhs) rules.push_back({w, Poly(field)});
    System s(letters(n), field, std::move(rules));
    if (s.is_minimal()) return s;
  }
}

}  // namespace diamond::testing
