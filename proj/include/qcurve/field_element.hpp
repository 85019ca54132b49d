#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "qcurve/radical.hpp"
#include "qcurve/rational.hpp"

namespace qcurve {

/// Square class of a squarefree integer, stored as its sorted set of
/// indices: -1 for the sign, then the primes dividing it. The empty class
/// is the class of 1. Addition over the two-element field is symmetric
/// difference.
class SquareClass {
 public:
  SquareClass() = default;
  explicit SquareClass(std::vector<std::int64_t> indices);
  /// Class of a nonzero integer (squarefree part taken).
  static SquareClass ofInteger(std::int64_t n);

  const std::vector<std::int64_t>& indices() const { return indices_; }
  bool isTrivial() const { return indices_.empty(); }
  bool isNegative() const { return !indices_.empty() && indices_.front() == -1; }
  bool contains(std::int64_t index) const;
  /// Largest index, the pivot used by the reduced basis.
  std::int64_t pivot() const { return indices_.back(); }

  /// The squarefree integer representing this class; throws InvalidInput on
  /// overflow.
  std::int64_t squarefree() const;

  friend SquareClass operator+(const SquareClass& a, const SquareClass& b);
  friend auto operator<=>(const SquareClass&, const SquareClass&) = default;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;

 private:
  std::vector<std::int64_t> indices_;
};

/// Element of a multiquadratic field, sum of q_d * sqrt(d) over squarefree
/// d, with sqrt(-s) = i*sqrt(s) for s > 0.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& q);  // NOLINT(google-explicit-constructor)
  FieldElement(const SquareClass& cls, const Rational& coefficient);

  /// sqrt(d) for a nonzero integer d.
  static FieldElement sqrtOf(std::int64_t d);
  /// Requires half-integral exponents and torsion with denominator dividing
  /// 8; throws UnsupportedDegree otherwise.
  static FieldElement fromRadical(const RadicalElement& x);
  static FieldElement fromRootOfUnity(const RootOfUnity& zeta);

  const std::map<SquareClass, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isRational() const;
  Rational coefficient(const SquareClass& cls) const;
  std::vector<SquareClass> support() const;

  /// Complex conjugation: sqrt(d) -> -sqrt(d) for d < 0. This is the
  /// canonical involution on every multiquadratic field.
  FieldElement conjugate() const;

  std::complex<long double> toComplex() const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  void addTerm(const SquareClass& cls, const Rational& q);

  std::map<SquareClass, Rational> terms_;
};

/// a + b*sqrt(d) with d squarefree, d != 1 (d = -1 gives Q(i)).
class QuadraticElement {
 public:
  QuadraticElement(const Rational& a, const Rational& b, std::int64_t d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  QuadraticElement conjugate() const { return {a_, -b_, d_}; }
  FieldElement toFieldElement() const;

  friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y);
  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_;
};

}  // namespace qcurve
