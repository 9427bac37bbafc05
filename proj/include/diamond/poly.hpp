#pragma once

#include <map>
#include <string>
#include <vector>

#include "diamond/scalar.hpp"
#include "diamond/word.hpp"

namespace diamond {

/// A noncommutative polynomial: finitely many words with nonzero exact
/// coefficients. Terms are kept in printing order (see PrintOrder); zero
/// coefficients are never stored, so equality is term-wise equality.
class Poly {
 public:
  using Terms = std::map<Word, Scalar, PrintOrder>;

  /// The zero polynomial over `field`.
  explicit Poly(Field field = Field::rationals()) : field_(field) {}

  static Poly monomial(Field field, Word w, const Scalar& coeff);
  static Poly monomial(Field field, Word w) { return monomial(field, std::move(w), Scalar::one(field)); }

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Zero when `w` is not in the support.
  Scalar coefficient(const Word& w) const;
  bool contains(const Word& w) const { return terms_.count(w) != 0; }
  std::vector<Word> support() const;
  std::size_t max_length() const;

  /// Adds c * w in place, dropping the term if it cancels.
  void add_term(const Word& w, const Scalar& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator-() const;
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  /// Product in the free algebra.
  friend Poly operator*(const Poly& p, const Poly& q);

  Poly scaled(const Scalar& c) const;
  /// a * this * b.
  Poly sandwiched(const Word& a, const Word& b) const;

  friend bool operator==(const Poly& p, const Poly& q) {
    return p.field_ == q.field_ && p.terms_ == q.terms_;
  }

  std::size_t hash() const;

 private:
  Field field_;
  Terms terms_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_scale(const Scalar& c, const Poly& p);
Poly poly_mul_sandwich(const Word& a, const Poly& p, const Word& b);

/// Prints `p` in printing order, e.g. "x^3 + y^3 - 2*x*y*z"; zero prints "0".
/// Prime-field coefficients print as residues in [0, p).
std::string format_poly(const Poly& p, const Alphabet& alphabet);

/// Parses the polynomial grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff | [coeff '*'] factor ('*' factor)*
///   factor := name ['^' posint]
///   coeff  := integer | integer '/' posint
/// Whitespace is insignificant. Throws ParseError.
Poly parse_poly(std::string_view text, const Alphabet& alphabet, Field field);

/// Parses a single monic monomial such as "x*y^2*z".
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace diamond

template <>
struct std::hash<diamond::Poly> {
  std::size_t operator()(const diamond::Poly& p) const noexcept { return p.hash(); }
};
