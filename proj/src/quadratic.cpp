#include "qcurve/quadratic.hpp"

#include <string>

#include "qcurve/arith.hpp"
#include "qcurve/errors.hpp"
#include "qcurve/multiquadratic.hpp"

namespace qcurve {

namespace {

CharacterOrder orderOf(const RootOfUnity& z) {
  return z.isOne() ? CharacterOrder::Trivial : CharacterOrder::OrderTwo;
}

}  // namespace

std::uint64_t QuadraticQCurveInput::degree() const {
  return m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
}

QCurveDatum quadraticDatum(std::int64_t m) {
  if (m == 0) throw InvalidInput("m must be nonzero");
  FiniteAbelianGroup g({2});
  const std::uint64_t deg = QuadraticQCurveInput{m}.degree();
  std::vector<RadicalElement> c(4, RadicalElement());
  c[3] = RadicalElement::fromRational(Rational(m));
  return {g, {1, deg}, TwoCocycle(g, std::move(c))};
}

QuadraticReport classifyQuadratic(const QuadraticQCurveInput& in) {
  if (in.m == 0) throw InvalidInput("m must be nonzero");
  const RadicalElement m = RadicalElement::fromRational(Rational(in.m));
  const RadicalElement deg = RadicalElement::fromRational(Rational(static_cast<long>(in.degree())));

  QuadraticReport r;
  // R = Q[X]/(X^2 - m) splits exactly when m is a square.
  if (isPerfectSquare(in.m)) {
    r.algebraShape = {true, 1};
  } else {
    r.algebraShape = {false, squarefreePart(in.m)};
  }

  // alpha(sigma) = sqrt m splits c; theta(sigma) = alpha^2 / deg = sign(m).
  const RadicalElement alpha = radRoot(m, 2);
  const auto theta = (alpha.pow(Rational(2)) / deg).asRootOfUnity();
  r.theta = orderOf(*theta);
  r.epsilon = r.theta;

  const RadicalElement gens[] = {alpha};
  const MultiquadraticField E = fieldOfRadicals(gens);
  if (E.degree() == 1) {
    r.eSignature = ESignature::Rational;
  } else {
    r.eSignature = signatureClassify(E) == Signature::TotallyReal ? ESignature::Real : ESignature::Imaginary;
  }
  r.modelOverQ = r.algebraShape.splitQxQ;
  r.serreConstraintOk = validateSerreConstraint(in) == SerreVerdict::Ok;
  return r;
}

SerreVerdict validateSerreConstraint(const QuadraticQCurveInput& in) {
  return in.m < 0 && in.kSignature == FieldSignature::Imaginary ? SerreVerdict::Violation : SerreVerdict::Ok;
}

RootOfUnity epsilonAtMinusOne(const QuadraticReport& r, FieldSignature kSignature) {
  if (r.epsilon == CharacterOrder::OrderTwo && kSignature == FieldSignature::Imaginary) {
    return RootOfUnity::minusOne();
  }
  return RootOfUnity();
}

}  // namespace qcurve
