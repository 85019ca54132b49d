#include <doctest.h>

#include "oracles.hpp"
#include "qcurve/cohomology.hpp"
#include "qcurve/errors.hpp"

using namespace qcurve;

namespace {

TwoCocycle z2Cocycle(long m) {
  FiniteAbelianGroup g({2});
  std::vector<RadicalElement> v(4);
  v[3] = RadicalElement::fromInteger(m);
  return TwoCocycle(g, v);
}

// (g, h) -> (-1)^(g_1 h_2) on Z/2 x Z/2.
TwoCocycle alternatingKlein() {
  FiniteAbelianGroup g({2, 2});
  std::vector<RadicalElement> v(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (g.element(a)[0] * g.element(b)[1] % 2) v[a * 4 + b] = RadicalElement::fromInteger(-1);
    }
  return TwoCocycle(g, v);
}

// a / b is a character of the group.
bool differByCharacter(const OneCochain& a, const OneCochain& b) {
  const auto& G = a.group();
  std::vector<RadicalElement> q;
  for (std::size_t g = 0; g < G.order(); ++g) q.push_back(a(g) / b(g));
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h) {
      if (!(q[g] * q[h] == q[G.multiply(g, h)])) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("finite abelian groups") {
  FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.index(g.element(i)) == i);
    CHECK(g.multiply(i, g.inverse(i)) == g.identity());
  }
  CHECK(g.element(g.multiply(g.index({1, 3}), g.index({1, 2}))) == GroupElement{0, 1});
  CHECK(g.index({3, -1}) == g.index({1, 3}));
  CHECK(g.power(g.index({0, 1}), 4) == 0);
  CHECK(g.format(g.index({1, 2})) == "(1,2)");
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), InvalidInput);
  CHECK_THROWS_AS(g.index({1}), InvalidInput);
  CHECK(FiniteAbelianGroup().order() == 1);
}

TEST_CASE("validateCocycle examples") {
  CHECK_FALSE(validateCocycle(TwoCocycle::trivial(FiniteAbelianGroup({2}))));
  for (long m : {2L, -3L, 7L, -1L, 12L}) CHECK_FALSE(validateCocycle(z2Cocycle(m)));

  FiniteAbelianGroup g({2});
  std::vector<RadicalElement> v(4);
  v[1] = RadicalElement::fromInteger(2);  // c(1, s) = 2
  const TwoCocycle bad(g, v);
  const auto viol = validateCocycle(bad);
  REQUIRE(viol.has_value());
  CHECK_FALSE(oracle::isCocycle(bad));
  // The reported triple really violates the identity.
  const auto& [a, b, k] = *viol;
  CHECK_FALSE(bad(a, b) * bad(g.multiply(a, b), k) == bad(b, k) * bad(a, g.multiply(b, k)));
}

TEST_CASE("cocycle tables are normalized by c(1,1)") {
  FiniteAbelianGroup g({2});
  std::vector<RadicalElement> v(4, RadicalElement::fromInteger(3));
  const TwoCocycle c(g, v);
  CHECK(c(0, 0) == RadicalElement());
  CHECK(c(1, 1) == RadicalElement());
}

TEST_CASE("coboundaryOf examples") {
  FiniteAbelianGroup z2({2});
  CHECK(coboundaryOf(OneCochain::trivial(z2)) == TwoCocycle::trivial(z2));
  const OneCochain a(z2, {RadicalElement(), radRoot(RadicalElement::fromInteger(2), 2)});
  CHECK(coboundaryOf(a)(1, 1) == RadicalElement::fromInteger(2));
  CHECK_THROWS_AS(OneCochain(z2, {RadicalElement::fromInteger(2), RadicalElement()}), InvalidInput);

  std::mt19937_64 rng(21);
  for (const auto& orders : {std::vector<long>{4}, std::vector<long>{2, 2}, std::vector<long>{3, 3}, std::vector<long>{2, 4}}) {
    FiniteAbelianGroup G(orders);
    for (int t = 0; t < 20; ++t) {
      const TwoCocycle c = coboundaryOf(oracle::randomCochain(G, rng));
      CHECK(oracle::isCocycle(c));
      CHECK_FALSE(validateCocycle(c));
      CHECK(c.isSymmetric());
    }
  }
}

TEST_CASE("splitCocycle on Z/2 takes the canonical square root") {
  for (long m : {2L, -2L, 5L, -1L, 4L, -12L}) {
    const SplitResult s = splitCocycle(z2Cocycle(m));
    REQUIRE(s.isSplit());
    CHECK((*s.splitting)(0) == RadicalElement());
    CHECK((*s.splitting)(1) == radRoot(RadicalElement::fromInteger(m), 2));
  }
}

TEST_CASE("split round trip on random coboundaries") {
  std::mt19937_64 rng(22);
  for (const auto& orders : {std::vector<long>{2}, std::vector<long>{3}, std::vector<long>{4}, std::vector<long>{6},
                             std::vector<long>{2, 2}, std::vector<long>{2, 4}, std::vector<long>{3, 3},
                             std::vector<long>{2, 2, 2}}) {
    FiniteAbelianGroup G(orders);
    for (int t = 0; t < 15; ++t) {
      const OneCochain a = oracle::randomCochain(G, rng);
      const TwoCocycle c = coboundaryOf(a);
      const SplitResult s = splitCocycle(c);
      REQUIRE(s.isSplit());
      CHECK(coboundaryOf(*s.splitting) == c);
      CHECK(differByCharacter(*s.splitting, a));
    }
  }
}

TEST_CASE("cyclic groups are never obstructed") {
  std::mt19937_64 rng(23);
  for (long n : {2L, 3L, 4L, 5L, 8L}) {
    FiniteAbelianGroup G({n});
    // c(s^i, s^j) = m when i + j wraps around: a cocycle that is not
    // presented as a coboundary.
    for (int t = 0; t < 5; ++t) {
      const RadicalElement m = oracle::randomRadical(rng);
      std::vector<RadicalElement> v(G.order() * G.order());
      for (std::size_t i = 0; i < G.order(); ++i)
        for (std::size_t j = 0; j < G.order(); ++j) {
          if (G.element(i)[0] + G.element(j)[0] >= n) v[i * G.order() + j] = m;
        }
      const TwoCocycle c(G, v);
      REQUIRE(oracle::isCocycle(c));
      const SplitResult s = splitCocycle(c);
      REQUIRE(s.isSplit());
      CHECK(coboundaryOf(*s.splitting) == c);
    }
  }
}

TEST_CASE("alternating Klein cocycle is obstructed") {
  const TwoCocycle c = alternatingKlein();
  REQUIRE(oracle::isCocycle(c));
  const SplitResult s = splitCocycle(c);
  REQUIRE_FALSE(s.isSplit());
  const ObstructionPairing& p = *s.obstruction;
  CHECK_FALSE(p.isTrivial());
  CHECK(p.isAlternating());
  CHECK(p.isBimultiplicative());
  const auto& G = c.group();
  CHECK(p(G.index({1, 0}), G.index({0, 1})) == RadicalElement::fromInteger(-1));

  // Brute force over cochains valued in mu_8 * {1, sqrt 2}.
  std::vector<RadicalElement> pool;
  for (long k = 0; k < 8; ++k) {
    pool.push_back(RadicalElement(RootOfUnity(Rational(k, 8))));
    pool.push_back(RadicalElement(Rational(k, 8), {{2, Rational(1, 2)}}));
  }
  bool found = false;
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool) {
        if (coboundaryOf(OneCochain(G, {RadicalElement(), x, y, z})) == c) found = true;
      }
  CHECK_FALSE(found);
}

TEST_CASE("obstruction pairing is a cohomological invariant") {
  std::mt19937_64 rng(24);
  const TwoCocycle c = alternatingKlein();
  const ObstructionPairing p(c);
  for (int t = 0; t < 50; ++t) {
    const TwoCocycle d = c * coboundaryOf(oracle::randomCochain(c.group(), rng));
    CHECK(ObstructionPairing(d) == p);
    CHECK_FALSE(splitCocycle(d).isSplit());
  }
}

TEST_CASE("splitCocycle rejects non-cocycles") {
  FiniteAbelianGroup g({3});
  std::vector<RadicalElement> v(9);
  v[4] = RadicalElement::fromInteger(2);
  CHECK_THROWS_AS(splitCocycle(TwoCocycle(g, v)), InvalidCocycle);
}

TEST_CASE("twistSplittings") {
  FiniteAbelianGroup z2({2});
  const OneCochain a(z2, {RadicalElement(), radRoot(RadicalElement::fromInteger(2), 2)});
  const auto twists = twistSplittings(a);
  REQUIRE(twists.size() == 2);
  CHECK(twists[0](1) == radRoot(RadicalElement::fromInteger(2), 2));
  CHECK(twists[1](1) == RadicalElement(Rational(1, 2), {{2, Rational(1, 2)}}));

  FiniteAbelianGroup z3({3});
  const auto t3 = twistSplittings(OneCochain::trivial(z3));
  REQUIRE(t3.size() == 3);
  for (const auto& t : t3) {
    CHECK(t(1).isRootOfUnity());
    CHECK(t(1).pow(Rational(3)) == RadicalElement());
    CHECK(coboundaryOf(t) == TwoCocycle::trivial(z3));
  }

  std::mt19937_64 rng(25);
  FiniteAbelianGroup k({2, 2});
  const OneCochain b = oracle::randomCochain(k, rng);
  for (const auto& t : twistSplittings(b)) CHECK(coboundaryOf(t) == coboundaryOf(b));
}

TEST_CASE("group characters") {
  FiniteAbelianGroup g({2, 3});
  const auto all = GroupCharacter::all(g);
  CHECK(all.size() == 6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  for (const auto& chi : all) CHECK(g.exponent() % static_cast<long>(chi.order()) == 0);
  CHECK_THROWS_AS(GroupCharacter(FiniteAbelianGroup({2}), {RootOfUnity(), RootOfUnity(Rational(1, 4))}), InvalidInput);
}

TEST_CASE("classOrderOverRationals") {
  CHECK(classOrderOverRationals(z2Cocycle(2), 2));
  CHECK_FALSE(classOrderOverRationals(z2Cocycle(2), 1));
  CHECK(classOrderOverRationals(z2Cocycle(4), 1));
  CHECK(classOrderOverRationals(z2Cocycle(-1), 2));
  CHECK_FALSE(classOrderOverRationals(z2Cocycle(-1), 1));
  CHECK_FALSE(classOrderOverRationals(z2Cocycle(-4), 1));

  FiniteAbelianGroup k({2, 2});
  const OneCochain a(k, {RadicalElement(), RadicalElement::fromInteger(-3), RadicalElement::fromInteger(6),
                         RadicalElement::fromRational(Rational(5, 7))});
  CHECK(classOrderOverRationals(coboundaryOf(a), 1));
  CHECK_THROWS_AS(classOrderOverRationals(coboundaryOf(OneCochain(z2Cocycle(2).group(),
                                                                  {RadicalElement(), radRoot(RadicalElement::fromInteger(3), 4)})),
                                          1),
                  InvalidInput);
}
