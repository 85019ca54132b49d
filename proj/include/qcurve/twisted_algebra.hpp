#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qcurve/cohomology.hpp"
#include "qcurve/field_element.hpp"
#include "qcurve/multiquadratic.hpp"

namespace qcurve {

/// Sparse formal sum x_s * lambda_s with rational coefficients, keyed by
/// group element index.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(std::size_t s, const Rational& coefficient = Rational(1));

  const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t s) const;
  bool isZero() const { return coeffs_.empty(); }
  void add(std::size_t s, const Rational& q);

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& q, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<std::size_t, Rational> coeffs_;
};

/// Q^c[G]: basis lambda_s with lambda_s lambda_t = c(s,t) lambda_st.
///
/// The table is taken as given (after normalization) so that broken tables
/// can be studied; isAssociative() holds exactly when c is a cocycle.
class TwistedGroupAlgebra {
 public:
  /// Throws InvalidInput unless every value of c is rational.
  explicit TwistedGroupAlgebra(TwoCocycle cocycle);

  const FiniteAbelianGroup& group() const { return cocycle_.group(); }
  const TwoCocycle& cocycle() const { return cocycle_; }
  const Rational& structureConstant(std::size_t s, std::size_t t) const { return table_[s * group().order() + t]; }
  std::size_t dimension() const { return group().order(); }
  bool isCommutative() const { return commutative_; }
  bool isAssociative() const;

  AlgebraElement one() const { return AlgebraElement::basis(group().identity()); }

 private:
  TwoCocycle cocycle_;
  std::vector<Rational> table_;
  bool commutative_ = true;
};

AlgebraElement algebraMultiply(const AlgebraElement& x, const AlgebraElement& y, const TwistedGroupAlgebra& R);

/// Monic minimal polynomial of x over Q, coefficients from degree 0 up.
std::vector<Rational> minimalPolynomial(const AlgebraElement& x, const TwistedGroupAlgebra& R);

/// Q-algebra map R -> E, lambda_s -> image(s).
class AlgebraHom {
 public:
  AlgebraHom(TwistedGroupAlgebra source, MultiquadraticField target, std::vector<RadicalElement> basisImages);

  const TwistedGroupAlgebra& source() const { return source_; }
  const MultiquadraticField& target() const { return target_; }
  const std::vector<RadicalElement>& basisImages() const { return images_; }

  FieldElement operator()(const AlgebraElement& x) const;
  /// image(s) image(t) = c(s,t) image(st) for every basis pair.
  bool isMultiplicative() const;

 private:
  TwistedGroupAlgebra source_;
  MultiquadraticField target_;
  std::vector<RadicalElement> images_;
  std::vector<FieldElement> imageValues_;
};

/// omega: lambda_s -> a(s) onto Q(values of a). Throws NotASplitting when
/// coboundaryOf(a) != R.cocycle(), UnsupportedDegree outside the
/// multiquadratic regime.
AlgebraHom homFromSplitting(const TwistedGroupAlgebra& R, const OneCochain& a);

/// Idempotent pi of the factor of R that omega maps onto: pi annihilates
/// ker(omega) and omega(pi) = 1. Throws NoProjector if the linear system
/// has no idempotent solution.
AlgebraElement kernelProjector(const TwistedGroupAlgebra& R, const AlgebraHom& omega);

struct EndAlgebraDescriptor {
  std::uint64_t n = 1;               // matrix size
  std::uint64_t divisionDegree = 1;  // t: 1 for D = F, 2 for quaternionic D
  std::uint64_t centerDegree = 1;    // [F:Q]
  std::uint64_t maximalFieldDegree = 1;  // [E:Q]
  std::uint64_t abelianVarietyDim = 1;
};

enum class DivisionType { MatrixOverField, Quaternionic };

struct EndAlgebraClass {
  bool primitive = true;
  std::uint64_t n = 1;  // NonPrimitive(n) when n > 1
  DivisionType division = DivisionType::MatrixOverField;

  friend bool operator==(const EndAlgebraClass&, const EndAlgebraClass&) = default;
};

/// Primitive iff n = 1. Throws InconsistentDescriptor unless
/// n t [F:Q] = [E:Q] and [E:Q] divides dim A.
EndAlgebraClass classifyEndAlgebra(const EndAlgebraDescriptor& d);

}  // namespace qcurve
