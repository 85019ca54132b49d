#include <doctest.h>

#include <cmath>

#include "qcurve/errors.hpp"
#include "qcurve/quadratic.hpp"

using namespace qcurve;

namespace {

bool squareOracle(long m) {
  if (m < 0) return false;
  const long r = std::lround(std::sqrt(static_cast<double>(m)));
  return r * r == m;
}

constexpr FieldSignature kBoth[] = {FieldSignature::Real, FieldSignature::Imaginary};

}  // namespace

TEST_CASE("classifyQuadratic examples") {
  const auto a = classifyQuadratic({4, FieldSignature::Real});
  CHECK(a.modelOverQ);
  CHECK(a.eSignature == ESignature::Rational);
  CHECK(a.algebraShape.splitQxQ);

  const auto b = classifyQuadratic({2, FieldSignature::Imaginary});
  CHECK(b.algebraShape == AlgebraShape{false, 2});
  CHECK(b.theta == CharacterOrder::Trivial);
  CHECK(b.epsilon == CharacterOrder::Trivial);
  CHECK(b.eSignature == ESignature::Real);
  CHECK(b.serreConstraintOk);

  const auto c = classifyQuadratic({-2, FieldSignature::Real});
  CHECK(c.algebraShape == AlgebraShape{false, -2});
  CHECK(c.theta == CharacterOrder::OrderTwo);
  CHECK(c.epsilon == CharacterOrder::OrderTwo);
  CHECK(c.eSignature == ESignature::Imaginary);
  CHECK(c.serreConstraintOk);

  CHECK(classifyQuadratic({12, FieldSignature::Real}).algebraShape == AlgebraShape{false, 3});
  CHECK(classifyQuadratic({-4, FieldSignature::Real}).algebraShape == AlgebraShape{false, -1});
  CHECK_THROWS_AS(classifyQuadratic({0, FieldSignature::Real}), InvalidInput);
}

TEST_CASE("validateSerreConstraint examples") {
  CHECK(validateSerreConstraint({-3, FieldSignature::Imaginary}) == SerreVerdict::Violation);
  CHECK(validateSerreConstraint({-3, FieldSignature::Real}) == SerreVerdict::Ok);
  CHECK(validateSerreConstraint({5, FieldSignature::Imaginary}) == SerreVerdict::Ok);
}

TEST_CASE("sweep over m in [-100, 100]") {
  for (long m = -100; m <= 100; ++m) {
    if (m == 0) continue;
    for (auto k : kBoth) {
      const auto r = classifyQuadratic({m, k});
      CHECK((r.theta == CharacterOrder::Trivial) == (m > 0));
      CHECK((r.eSignature == ESignature::Imaginary) == (m < 0 && !squareOracle(m)));
      CHECK((r.eSignature == ESignature::Real) == (m > 0 && !squareOracle(m)));
      CHECK(r.modelOverQ == squareOracle(m));
      CHECK(r.theta == r.epsilon);
      CHECK(r.serreConstraintOk == !(m < 0 && k == FieldSignature::Imaginary));
    }
  }
}

TEST_CASE("agreement with the general pipeline") {
  for (long m = -100; m <= 100; ++m) {
    if (m == 0) continue;
    const auto r = classifyQuadratic({m, FieldSignature::Real});
    const auto built = constructGL2Type(quadraticDatum(m));
    if (squareOracle(m)) {
      CHECK(built.descriptor.dimension == 1);
      continue;
    }
    CHECK(built.descriptor.E.degree() == 2);
    CHECK(built.descriptor.E.contains(SquareClass::ofInteger(r.algebraShape.d)));
    CHECK((built.descriptor.epsilon.order() == 2) == (r.epsilon == CharacterOrder::OrderTwo));
  }
}

TEST_CASE("epsilon parity matches the Serre constraint") {
  for (long m = -100; m <= 100; ++m) {
    if (m == 0) continue;
    for (auto k : kBoth) {
      const QuadraticQCurveInput in{m, k};
      const auto r = classifyQuadratic(in);
      CHECK(epsilonAtMinusOne(r, k).isOne() == r.serreConstraintOk);
    }
  }
}

TEST_CASE("degree is |m|") {
  CHECK(QuadraticQCurveInput{-7, FieldSignature::Real}.degree() == 7);
  CHECK(QuadraticQCurveInput{INT64_MIN, FieldSignature::Real}.degree() == 9223372036854775808ULL);
  const QCurveDatum d = quadraticDatum(-6);
  CHECK(d.degrees[1] == 6);
  CHECK(validateQCurveDatum(d).isValid());
}
