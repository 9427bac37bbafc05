#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace diamond {

/// The ground field: the rationals, or the prime field F_p.
class Field {
 public:
  /// The rational numbers.
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return characteristic_ == 0; }
  constexpr std::uint32_t characteristic() const { return characteristic_; }

  friend constexpr bool operator==(Field, Field) = default;

  std::string to_string() const;

 private:
  constexpr explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

/// An exact element of a Field. Arithmetic between scalars of different
/// fields throws FieldMismatch.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  /// numerator / denominator interpreted in `field`; throws ParseError if the
  /// denominator is zero in the field.
  static Scalar fraction(Field field, const mpz_class& numerator,
                         const mpz_class& denominator);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over the rationals; residues are reported as integers.
  mpq_class to_rational() const;
  /// Residue in [0, p) for prime fields.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace diamond
