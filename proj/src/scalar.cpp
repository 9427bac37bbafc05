#include "diamond/scalar.hpp"

#include <functional>
#include <ostream>

#include "diamond/error.hpp"

namespace diamond {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& n, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(value);
  else
    value_ = reduce(mpz_class(value), field.characteristic());
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
  } else {
    *this = fraction(field, value.get_num(), value.get_den());
  }
}

Scalar Scalar::fraction(Field field, const mpz_class& numerator,
                        const mpz_class& denominator) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    if (denominator == 0) throw ParseError("zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    s.value_ = std::move(q);
    return s;
  }
  std::uint32_t p = field.characteristic();
  std::uint32_t den = reduce(denominator, p);
  if (den == 0)
    throw ParseError("denominator " + denominator.get_str() +
                     " is not invertible in " + field.to_string());
  std::uint64_t num = reduce(numerator, p);
  s.value_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
  return s;
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

mpq_class Scalar::to_rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  return mpq_class(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw PreconditionError("residue() called on a rational scalar");
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar r = *this;
  if (auto q = std::get_if<mpq_class>(&r.value_)) {
    *q = 1 / *q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    v = pow_mod(v, field_.characteristic() - 2, field_.characteristic());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(other.value_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) +
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(other.value_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) *
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::size_t Scalar::hash() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return std::hash<std::uint32_t>{}(*r);
  return std::hash<std::string>{}(std::get<mpq_class>(value_).get_str());
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace diamond
