#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qcurve {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "a/b" or "a"; b must be nonzero. Result is reduced.
  static Rational parse(std::string_view text);

  /// Always "a/b" with b > 0 and gcd(|a|, b) = 1.
  std::string str() const;

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;
  /// Largest integer not exceeding this value.
  Integer floor() const;
  /// Representative of this value modulo 1, in [0, 1).
  Rational fractionalPart() const;

  double toDouble() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Parses a base-10 integer, throwing ParseError on junk.
Integer parseInteger(std::string_view text);

}  // namespace qcurve
