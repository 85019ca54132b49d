#pragma once

#include <map>
#include <optional>
#include <ostream>

#include "qcurve/arith.hpp"
#include "qcurve/rational.hpp"

namespace qcurve {

/// Root of unity e^(2 pi i t), t in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  explicit RootOfUnity(const Rational& torsion);

  static RootOfUnity minusOne() { return RootOfUnity(Rational(1, 2)); }

  const Rational& torsion() const { return torsion_; }
  bool isOne() const { return torsion_.isZero(); }
  /// Multiplicative order (the reduced denominator of the torsion).
  std::uint64_t order() const;

  RootOfUnity inverse() const;
  RootOfUnity pow(long k) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    return RootOfUnity(a.torsion_ + b.torsion_);
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  Rational torsion_;
};

/// Element zeta * prod p^(r_p) of the subgroup of nonzero algebraic numbers
/// generated by roots of unity and rational powers of primes. Its canonical
/// complex value takes p^(r_p) positive real.
///
/// -1 is stored as torsion 1/2, never as a sign. Exponent maps never hold
/// zero entries, so structural equality is equality of values.
class RadicalElement {
 public:
  RadicalElement() = default;
  RadicalElement(const Rational& torsion, std::map<Prime, Rational> exponents);
  explicit RadicalElement(const RootOfUnity& zeta) : torsion_(zeta.torsion()) {}

  /// Nonzero rational; factors numerator and denominator by trial division.
  static RadicalElement fromRational(const Rational& q);
  static RadicalElement fromInteger(long n) { return fromRational(Rational(n)); }

  const Rational& torsion() const { return torsion_; }
  const std::map<Prime, Rational>& exponents() const { return exponents_; }

  bool isOne() const { return torsion_.isZero() && exponents_.empty(); }
  bool isRootOfUnity() const { return exponents_.empty(); }
  std::optional<RootOfUnity> asRootOfUnity() const;
  /// The value as a rational number, if it is one (torsion 0 or 1/2 and
  /// integral exponents).
  std::optional<Rational> toRational() const;
  bool isRational() const { return toRational().has_value(); }

  RadicalElement inverse() const;
  RadicalElement pow(const Rational& k) const;

  friend bool operator==(const RadicalElement&, const RadicalElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RadicalElement& x);
  friend RadicalElement radMul(const RadicalElement& x, const RadicalElement& y);
  friend RadicalElement radRoot(const RadicalElement& x, unsigned n);

 private:
  // Skips the primality check; callers guarantee keys came from a valid element.
  struct Trusted {};
  RadicalElement(Trusted, const Rational& torsion, std::map<Prime, Rational> exponents)
      : torsion_(torsion.fractionalPart()), exponents_(std::move(exponents)) {}

  Rational torsion_;
  std::map<Prime, Rational> exponents_;
};

RadicalElement radMul(const RadicalElement& x, const RadicalElement& y);

/// Canonical n-th root: torsion divided into [0, 1/n), every exponent / n.
RadicalElement radRoot(const RadicalElement& x, unsigned n);

inline RadicalElement operator*(const RadicalElement& x, const RadicalElement& y) { return radMul(x, y); }
inline RadicalElement operator/(const RadicalElement& x, const RadicalElement& y) { return radMul(x, y.inverse()); }

}  // namespace qcurve
