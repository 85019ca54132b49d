#include <doctest.h>

#include "qcurve/errors.hpp"
#include "trace_oracle.hpp"

using namespace qcurve;

namespace {

MultiquadraticField fieldOf(std::initializer_list<std::int64_t> ds) {
  std::vector<SquareClass> c;
  for (auto d : ds) c.push_back(SquareClass::ofInteger(d));
  return MultiquadraticField::fromSquareClasses(c);
}

FieldElement q(long a, long b = 1) { return FieldElement(Rational(a, b)); }
FieldElement r(std::int64_t d, long a = 1) { return FieldElement(SquareClass::ofInteger(d), Rational(a)); }

// Character mod 4 sending 3 to -1.
DirichletCharacterData mod4() { return DirichletCharacterData::kronecker(-4); }

}  // namespace

TEST_CASE("Dirichlet character data") {
  const auto k5 = DirichletCharacterData::kronecker(5);
  CHECK(k5.modulus() == 5);
  CHECK(k5.at(2)->torsion() == Rational(1, 2));
  CHECK(k5.at(11)->isOne());
  CHECK_FALSE(k5.at(10).has_value());
  CHECK(k5.order() == 2);

  const auto k8 = DirichletCharacterData::kronecker(8);
  CHECK(k8.at(7)->isOne());
  CHECK(k8.at(3)->torsion() == Rational(1, 2));

  const auto q17 = DirichletCharacterData::fromPrimitiveRoot(17, RootOfUnity(Rational(1, 4)));
  CHECK(q17.order() == 4);
  CHECK(q17.at(3)->torsion() == Rational(1, 4));
  CHECK(q17.valueAtMinusOne().isOne());

  CHECK_THROWS_AS(DirichletCharacterData::kronecker(6), InvalidInput);
  CHECK_THROWS_AS(DirichletCharacterData::kronecker(3), InvalidInput);
  CHECK_THROWS_AS(DirichletCharacterData(4, {{1, RootOfUnity()}}, RootOfUnity()), InvalidInput);
  CHECK_THROWS_AS(DirichletCharacterData(4, {{1, RootOfUnity()}, {3, RootOfUnity(Rational(1, 2))}}, RootOfUnity()), InvalidInput);
  CHECK_THROWS_AS(DirichletCharacterData(5, {{1, RootOfUnity()}, {2, RootOfUnity(Rational(1, 2))}, {3, RootOfUnity()},
                                             {4, RootOfUnity()}},
                                         RootOfUnity()),
                  InvalidInput);
  CHECK_THROWS_AS(DirichletCharacterData(4, {{1, RootOfUnity()}, {2, RootOfUnity()}, {3, RootOfUnity()}}, RootOfUnity()),
                  InvalidInput);
}

TEST_CASE("checkEvenness") {
  CHECK(checkEvenness(DirichletCharacterData::trivial()));
  CHECK_FALSE(checkEvenness(mod4()));
  CHECK(checkEvenness(DirichletCharacterData::kronecker(8)));
  CHECK(checkEvenness(DirichletCharacterData::kronecker(5)));
  CHECK_FALSE(checkEvenness(DirichletCharacterData::kronecker(-3)));
}

TEST_CASE("checkConjugationSymmetry examples") {
  TraceTable real{fieldOf({2}), {}, {{5, q(3) + r(2, 4), true}, {7, r(2, -1), true}, {11, q(0), true}}, {}};
  for (const auto& e : checkConjugationSymmetry(real)) CHECK(e.holds);

  // E = Q(i), eps(3) = -1 mod 4.
  TraceTable gi{fieldOf({-1}), mod4(), {{3, q(2) - r(-1, 2), true}}, {}};
  auto out = checkConjugationSymmetry(gi);
  REQUIRE(out.size() == 1);
  CHECK_FALSE(out[0].holds);
  gi.entries[0].ap = r(-1, 5);
  CHECK(checkConjugationSymmetry(gi)[0].holds);
  gi.entries[0].ap = q(0);
  CHECK(checkConjugationSymmetry(gi)[0].holds);

  TraceTable outside{fieldOf({2}), {}, {{5, r(3), true}}, {}};
  CHECK_THROWS_AS(checkConjugationSymmetry(outside), ValueOutsideField);
}

TEST_CASE("reports are in ascending p and skip excluded entries") {
  TraceTable t{fieldOf({}), {}, {{13, q(1), true}, {5, q(2), true}, {7, r(-5), false}, {11, q(3), true}}, {11}};
  const auto out = checkConjugationSymmetry(t);
  REQUIRE(out.size() == 2);
  CHECK(out[0].p == 5);
  CHECK(out[1].p == 13);

  t.entries.push_back({5, q(1), true});
  CHECK_THROWS_AS(checkConjugationSymmetry(t), InvalidInput);
  TraceTable div{fieldOf({-1}), mod4(), {{2, q(1), true}}, {}};
  CHECK_THROWS_AS(checkConjugationSymmetry(div), InvalidInput);
  div.badPrimes.insert(2);
  CHECK(checkConjugationSymmetry(div).empty());
}

TEST_CASE("generatedFieldE examples") {
  TraceTable t{fieldOf({}), {}, {{5, q(1), true}, {7, q(-3, 2), true}}, {}};
  CHECK(generatedFieldE(t).field.degree() == 1);
  CHECK_FALSE(generatedFieldE(t).emptyGenerators);

  TraceTable u{fieldOf({2, 3}), {}, {{5, r(2), true}, {7, q(1) + r(3, 2), true}}, {}};
  const auto e = generatedFieldE(u);
  CHECK(e.field.degree() == 4);
  CHECK(e.field.sameField(fieldOf({2, 3})));

  TraceTable empty{fieldOf({}), {}, {{5, r(7), false}}, {}};
  CHECK(generatedFieldE(empty).emptyGenerators);
  CHECK(generatedFieldE(empty).field.degree() == 1);
}

TEST_CASE("generatedFieldF examples") {
  TraceTable a{fieldOf({2}), {}, {{5, r(2, 3), true}, {7, q(4), true}, {11, r(2, -1), true}}, {}};
  auto f = generatedFieldF(a);
  CHECK(f.F.degree() == 1);
  CHECK(f.insideE);
  CHECK(f.abelianContainment);

  // E = Q(i), eps the character mod 4: compliant a_p are rational at
  // p = 1 mod 4 and in Q i at p = 3 mod 4.
  TraceTable b{fieldOf({-1}), mod4(), {{3, r(-1, 2), true}, {5, q(6), true}, {7, r(-1, -1), true}}, {}};
  for (const auto& e : checkConjugationSymmetry(b)) CHECK(e.holds);
  f = generatedFieldF(b);
  CHECK(f.F.degree() == 1);
  CHECK(f.F.isTotallyReal());
  CHECK(f.witness.contains(SquareClass::ofInteger(-1)));
  CHECK(f.abelianContainment);

  TraceTable c{fieldOf({2}), {}, {{5, q(1) + r(2), true}}, {}};
  f = generatedFieldF(c);
  CHECK(f.F.sameField(fieldOf({2})));
  CHECK(f.F.isTotallyReal());
  CHECK(f.abelianContainment);

  TraceTable bad{fieldOf({-1}), {}, {{5, q(1) + r(-1), true}}, {}};
  CHECK_THROWS_AS(generatedFieldF(bad), NotTotallyReal);

  // E larger than the a_p generate: containment fails.
  TraceTable big{fieldOf({2, 3}), {}, {{5, r(2), true}}, {}};
  CHECK_FALSE(generatedFieldF(big).abelianContainment);
}

TEST_CASE("frobeniusCharpoly examples") {
  const auto triv = DirichletCharacterData::trivial();
  auto c = frobeniusCharpoly({5, q(2), true}, triv);
  CHECK(c.coefficients == std::vector<FieldElement>{q(1), q(-2), q(5)});
  CHECK(c.weilBoundOk);

  c = frobeniusCharpoly({5, q(1) + r(2), true}, triv);
  CHECK(c.determinant == q(5));
  CHECK(c.weilBoundOk);
  CHECK(c.maxAbs > 2.41L);

  c = frobeniusCharpoly({2, q(10), true}, triv);
  CHECK_FALSE(c.weilBoundOk);

  c = frobeniusCharpoly({3, r(-1, 2), true}, mod4());
  CHECK(c.determinant == q(-3));
  CHECK(c.weilBoundOk);
  CHECK_THROWS_AS(frobeniusCharpoly({2, q(1), true}, mod4()), InvalidInput);
}

TEST_CASE("galois conjugates") {
  const auto xs = galoisConjugates(q(1) + r(2) + r(3));
  CHECK(xs.size() == 4);
  CHECK(std::find(xs.begin(), xs.end(), q(1) - r(2) - r(3)) != xs.end());
  CHECK(galoisConjugates(q(4)).size() == 1);
}

TEST_CASE("oracle tables pass and perturbations are caught") {
  std::mt19937_64 rng(51);
  using oracle::TraceField;
  for (auto f : {TraceField::Q, TraceField::Sqrt2, TraceField::Sqrt5, TraceField::GaussianQuadratic, TraceField::GaussianQuartic}) {
    const TraceTable t = oracle::compliantTable(f, 25, rng);
    CHECK(checkEvenness(t.epsilon));
    for (const auto& e : t.entries) {
      if (!t.isUsed(e)) continue;
      const auto eo = oracle::epsOracle(f, static_cast<long>(e.p));
      const auto z = oracle::value(e.ap);
      CHECK(oracle::close(z, std::conj(z) * oracle::Complex(eo.re, eo.im)));
      CHECK(*t.epsilon.at(static_cast<std::int64_t>(e.p)) == RootOfUnity(Rational(eo.im == 0 ? (eo.re == 1 ? 0 : 2) : (eo.im == 1 ? 1 : 3), 4)));
    }
    for (const auto& e : checkConjugationSymmetry(t)) CHECK(e.holds);
    const auto F = generatedFieldF(t);
    CHECK(F.F.isTotallyReal());
    CHECK(F.insideE);
    CHECK(F.abelianContainment);
    CHECK(generatedFieldE(t).field.sameField(t.fieldE));

    TraceTable bent = t;
    for (auto& e : bent.entries) {
      if (!bent.isUsed(e)) continue;
      e.ap += oracle::nonCompliantShift(f, static_cast<long>(e.p), Rational(1, 2));
      break;
    }
    bool detected = false;
    try {
      for (const auto& e : checkConjugationSymmetry(bent)) detected = detected || !e.holds;
    } catch (const ValueOutsideField&) {
      detected = true;
    }
    CHECK(detected);
  }
}
