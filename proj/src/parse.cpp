#include <cctype>

#include "diamond/error.hpp"
#include "diamond/poly.hpp"

namespace diamond {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Alphabet& alphabet, Field field)
      : text_(text), alphabet_(alphabet), field_(field) {}

  Poly parse_poly() {
    Poly result(field_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    add_term(result, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      add_term(result, c == '-');
    }
    return result;
  }

 private:
  void add_term(Poly& result, bool negative) {
    skip_ws();
    Scalar coeff = Scalar::one(field_);
    Word word;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      if (peek() != '*') {
        result.add_term(word, negative ? -coeff : coeff);
        return;
      }
      get();
    }
    for (;;) {
      skip_ws();
      word *= parse_factor();
      skip_ws();
      if (peek() != '*') break;
      get();
    }
    result.add_term(word, negative ? -coeff : coeff);
  }

  Scalar parse_coeff() {
    mpz_class num(parse_digits());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = mpz_class(parse_digits());
      if (den == 0) fail("zero denominator");
    }
    try {
      return Scalar::fraction(field_, num, den);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Word parse_factor() {
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected generator name");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (!alphabet_.has(name)) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    Letter x = alphabet_.index(name);
    skip_ws();
    std::size_t power = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::string digits = parse_digits();
      if (digits.size() > 6) fail("exponent too large");
      power = std::stoul(digits);
      if (power == 0) fail("exponent must be positive");
    }
    return Word::power(x, power);
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    if (at_end()) fail("unexpected end of input");
    return text_[pos_++];
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Alphabet& alphabet, Field field) {
  return PolyParser(text, alphabet, field).parse_poly();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Poly p = parse_poly(text, alphabet, Field::rationals());
  if (p.size() != 1 || !p.terms().begin()->second.is_one())
    throw ParseError("expected a single monic monomial, got \"" + std::string(text) + "\"");
  return p.terms().begin()->first;
}

std::string format_poly(const Poly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    bool negative = p.field().is_rational() && sgn(c.to_rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += alphabet.format(w);
    } else {
      out += magnitude.to_string() + "*" + alphabet.format(w);
    }
  }
  return out;
}

}  // namespace diamond
