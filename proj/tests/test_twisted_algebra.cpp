#include <doctest.h>

#include "oracles.hpp"
#include "qcurve/errors.hpp"
#include "qcurve/twisted_algebra.hpp"

using namespace qcurve;

namespace {

TwoCocycle z2Cocycle(long m) {
  FiniteAbelianGroup g({2});
  std::vector<RadicalElement> v(4);
  v[3] = RadicalElement::fromInteger(m);
  return TwoCocycle(g, v);
}

AlgebraElement lam(std::size_t s, const Rational& q = 1) { return AlgebraElement::basis(s, q); }

// Rational cochain on G with small random values.
OneCochain rationalCochain(const FiniteAbelianGroup& G, std::mt19937_64& rng) {
  std::vector<RadicalElement> v(G.order());
  for (std::size_t g = 1; g < G.order(); ++g) v[g] = RadicalElement::fromRational(oracle::randomNonzeroRational(rng, 6));
  return OneCochain(G, v);
}

AlgebraElement randomElement(const TwistedGroupAlgebra& R, std::mt19937_64& rng) {
  AlgebraElement x;
  for (std::size_t s = 0; s < R.dimension(); ++s) x.add(s, oracle::randomRational(rng, 5));
  return x;
}

}  // namespace

TEST_CASE("algebraMultiply examples") {
  const TwistedGroupAlgebra R(z2Cocycle(2));
  const AlgebraElement x = lam(0, 3) + lam(1, Rational(-1, 2));
  CHECK(algebraMultiply(R.one(), x, R) == x);
  CHECK(algebraMultiply(lam(1), lam(1), R) == lam(0, 2));
  CHECK(algebraMultiply(lam(0) + lam(1), lam(0) - lam(1), R) == lam(0, -1));
  const TwistedGroupAlgebra S(z2Cocycle(-7));
  CHECK(algebraMultiply(lam(1), lam(1), S) == lam(0, -7));
}

TEST_CASE("associativity matches the cocycle identity") {
  std::mt19937_64 rng(31);
  for (const auto& orders : {std::vector<long>{2}, std::vector<long>{4}, std::vector<long>{2, 2}, std::vector<long>{3}}) {
    FiniteAbelianGroup G(orders);
    const TwistedGroupAlgebra R(coboundaryOf(rationalCochain(G, rng)));
    CHECK(R.isAssociative());
    for (int t = 0; t < 10; ++t) {
      const auto a = randomElement(R, rng), b = randomElement(R, rng), c = randomElement(R, rng);
      CHECK(algebraMultiply(algebraMultiply(a, b, R), c, R) == algebraMultiply(a, algebraMultiply(b, c, R), R));
    }
  }
  FiniteAbelianGroup g({3});
  std::vector<RadicalElement> v(9);
  v[4] = RadicalElement::fromInteger(2);  // c(s, s) = 2 only
  const TwistedGroupAlgebra broken{TwoCocycle(g, v)};
  CHECK_FALSE(broken.isAssociative());
  CHECK(algebraMultiply(algebraMultiply(lam(1), lam(1), broken), lam(2), broken) !=
        algebraMultiply(lam(1), algebraMultiply(lam(1), lam(2), broken), broken));
}

TEST_CASE("commutative iff symmetric") {
  std::mt19937_64 rng(32);
  FiniteAbelianGroup k({2, 2});
  const TwoCocycle sym = coboundaryOf(rationalCochain(k, rng));
  CHECK(TwistedGroupAlgebra(sym).isCommutative() == sym.isSymmetric());
  std::vector<RadicalElement> v(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (k.element(a)[0] * k.element(b)[1] % 2) v[a * 4 + b] = RadicalElement::fromInteger(-1);
  const TwoCocycle alt(k, v);
  CHECK_FALSE(alt.isSymmetric());
  CHECK_FALSE(TwistedGroupAlgebra(alt).isCommutative());
  CHECK(TwistedGroupAlgebra(alt).isAssociative());
}

TEST_CASE("minimal polynomial of lambda_sigma is X^2 - m") {
  for (long m : {2L, 3L, 5L, -1L, -2L, -6L, 1L, 4L, 9L, -4L}) {
    const TwistedGroupAlgebra R(z2Cocycle(m));
    CHECK(minimalPolynomial(lam(1), R) == std::vector<Rational>{-m, 0, 1});
  }
  const TwistedGroupAlgebra R(z2Cocycle(2));
  CHECK(minimalPolynomial(lam(0, 3), R) == std::vector<Rational>{-3, 1});
  CHECK(minimalPolynomial(lam(0) + lam(1), R) == std::vector<Rational>{-1, -2, 1});
}

TEST_CASE("homFromSplitting examples") {
  const TwistedGroupAlgebra R(z2Cocycle(2));
  const OneCochain a(R.group(), {RadicalElement(), radRoot(RadicalElement::fromInteger(2), 2)});
  const AlgebraHom w = homFromSplitting(R, a);
  CHECK(w.target().degree() == 2);
  CHECK(w.target().contains(SquareClass::ofInteger(2)));
  CHECK(w.isMultiplicative());
  CHECK(w(lam(1)) == FieldElement::sqrtOf(2));

  FiniteAbelianGroup z2({2});
  const TwistedGroupAlgebra T(TwoCocycle::trivial(z2));
  const AlgebraHom aug = homFromSplitting(T, OneCochain::trivial(z2));
  CHECK(aug.target().degree() == 1);
  CHECK(aug(lam(0, 2) + lam(1, 3)) == FieldElement(Rational(5)));

  const TwistedGroupAlgebra I(z2Cocycle(-1));
  const AlgebraHom wi = homFromSplitting(I, OneCochain(z2, {RadicalElement(), radRoot(RadicalElement::fromInteger(-1), 2)}));
  CHECK(wi.target().contains(SquareClass::ofInteger(-1)));
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      CHECK(wi(lam(s)) * wi(lam(t)) == wi(algebraMultiply(lam(s), lam(t), I)));
    }

  CHECK_THROWS_AS(homFromSplitting(R, OneCochain::trivial(z2)), NotASplitting);
}

TEST_CASE("twisting a splitting keeps the image field") {
  const TwistedGroupAlgebra R(z2Cocycle(2));
  const OneCochain a(R.group(), {RadicalElement(), radRoot(RadicalElement::fromInteger(2), 2)});
  const AlgebraHom w = homFromSplitting(R, a);
  for (const auto& t : twistSplittings(a)) {
    const AlgebraHom v = homFromSplitting(R, t);
    CHECK(v.target().sameField(w.target()));
    CHECK(v(R.one()) == w(R.one()));
  }
}

TEST_CASE("kernelProjector examples") {
  FiniteAbelianGroup z2({2});
  const TwistedGroupAlgebra T(TwoCocycle::trivial(z2));
  const AlgebraElement p = kernelProjector(T, homFromSplitting(T, OneCochain::trivial(z2)));
  CHECK(p == lam(0, Rational(1, 2)) + lam(1, Rational(1, 2)));
  CHECK(algebraMultiply(p, p, T) == p);

  const TwistedGroupAlgebra R(z2Cocycle(2));
  const OneCochain a(z2, {RadicalElement(), radRoot(RadicalElement::fromInteger(2), 2)});
  CHECK(kernelProjector(R, homFromSplitting(R, a)) == lam(0));

  FiniteAbelianGroup k({2, 2});
  const TwistedGroupAlgebra K(TwoCocycle::trivial(k));
  AlgebraElement avg;
  for (std::size_t s = 0; s < 4; ++s) avg.add(s, Rational(1, 4));
  CHECK(kernelProjector(K, homFromSplitting(K, OneCochain::trivial(k))) == avg);
}

TEST_CASE("projectors for square m split Q x Q") {
  for (long m : {1L, 4L, 9L, 25L}) {
    const TwistedGroupAlgebra R(z2Cocycle(m));
    const SplitResult s = splitCocycle(R.cocycle());
    REQUIRE(s.isSplit());
    const AlgebraHom w = homFromSplitting(R, *s.splitting);
    CHECK(w.target().degree() == 1);
    const AlgebraElement p = kernelProjector(R, w);
    CHECK(algebraMultiply(p, p, R) == p);
    CHECK(w(p) == FieldElement(Rational(1)));
    // Q x Q: p and 1 - p are orthogonal idempotents.
    CHECK(algebraMultiply(p, R.one() - p, R).isZero());
    CHECK_FALSE((R.one() - p).isZero());
  }
}

TEST_CASE("projector properties on random rational data") {
  std::mt19937_64 rng(33);
  for (const auto& orders : {std::vector<long>{2}, std::vector<long>{4}, std::vector<long>{2, 2}}) {
    FiniteAbelianGroup G(orders);
    for (int t = 0; t < 5; ++t) {
      const TwistedGroupAlgebra R(coboundaryOf(rationalCochain(G, rng)));
      const SplitResult s = splitCocycle(R.cocycle());
      REQUIRE(s.isSplit());
      const AlgebraHom w = homFromSplitting(R, *s.splitting);
      const AlgebraElement p = kernelProjector(R, w);
      CHECK(algebraMultiply(p, p, R) == p);
      CHECK(w(p) == FieldElement(Rational(1)));
      for (std::size_t g = 0; g < G.order(); ++g) {
        CHECK(algebraMultiply(lam(g), p, R) == algebraMultiply(p, lam(g), R));
        CHECK(w(algebraMultiply(lam(g), p, R)) == w(lam(g)));
      }
    }
  }
}

TEST_CASE("classifyEndAlgebra") {
  CHECK(classifyEndAlgebra({1, 1, 1, 1, 1}) == EndAlgebraClass{true, 1, DivisionType::MatrixOverField});
  CHECK(classifyEndAlgebra({2, 1, 1, 2, 2}) == EndAlgebraClass{false, 2, DivisionType::MatrixOverField});
  CHECK(classifyEndAlgebra({1, 2, 1, 2, 2}) == EndAlgebraClass{true, 1, DivisionType::Quaternionic});
  CHECK_THROWS_AS(classifyEndAlgebra({1, 2, 1, 4, 4}), InconsistentDescriptor);
  CHECK_THROWS_AS(classifyEndAlgebra({1, 1, 1, 2, 3}), InconsistentDescriptor);
  CHECK_THROWS_AS(classifyEndAlgebra({1, 3, 1, 3, 3}), InconsistentDescriptor);
}

TEST_CASE("irrational tables are rejected") {
  FiniteAbelianGroup z2({2});
  const OneCochain a(z2, {RadicalElement(), radRoot(RadicalElement::fromInteger(3), 4)});
  CHECK_THROWS_AS(TwistedGroupAlgebra(coboundaryOf(a)), InvalidInput);
}
