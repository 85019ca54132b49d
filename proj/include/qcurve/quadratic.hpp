#pragma once

#include <cstdint>

#include "qcurve/pipeline.hpp"
#include "qcurve/radical.hpp"

namespace qcurve {

enum class FieldSignature { Real, Imaginary };

/// Q-curve over a quadratic field K with mu o sigma(mu) = m.
struct QuadraticQCurveInput {
  std::int64_t m = 1;
  FieldSignature kSignature = FieldSignature::Real;

  std::uint64_t degree() const;  // |m|
};

struct AlgebraShape {
  bool splitQxQ = true;
  std::int64_t d = 1;  // squarefree, meaningful when !splitQxQ

  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};

enum class CharacterOrder { Trivial, OrderTwo };
enum class ESignature { Rational, Real, Imaginary };
enum class SerreVerdict { Ok, Violation };

struct QuadraticReport {
  AlgebraShape algebraShape;
  CharacterOrder theta = CharacterOrder::Trivial;
  CharacterOrder epsilon = CharacterOrder::Trivial;
  ESignature eSignature = ESignature::Rational;
  bool modelOverQ = true;
  bool serreConstraintOk = true;
};

/// Z/2 datum with deg mu_sigma = |m| and c(sigma,sigma) = m.
QCurveDatum quadraticDatum(std::int64_t m);

/// Throws InvalidInput for m = 0.
QuadraticReport classifyQuadratic(const QuadraticQCurveInput& in);

/// Violation iff m < 0 and K imaginary. Square m (E = Q) is always Ok.
SerreVerdict validateSerreConstraint(const QuadraticQCurveInput& in);

/// epsilon read as a character of Gal(K/Q) evaluated at complex
/// conjugation: -1 only when epsilon is nontrivial and K is imaginary.
RootOfUnity epsilonAtMinusOne(const QuadraticReport& r, FieldSignature kSignature);

}  // namespace qcurve
