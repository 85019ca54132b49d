#include "qcurve/traces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcurve/arith.hpp"
#include "qcurve/errors.hpp"

namespace qcurve {

DirichletCharacterData::DirichletCharacterData(std::int64_t modulus, std::map<std::int64_t, RootOfUnity> values,
                                               RootOfUnity valueAtMinusOne)
    : modulus_(modulus), values_(std::move(values)), atMinusOne_(valueAtMinusOne) {
  if (modulus_ < 1 || modulus_ > kMaxModulus) {
    throw InvalidInput("modulus must lie in [1, " + std::to_string(kMaxModulus) + "]");
  }
  for (const auto& [r, _] : values_) {
    if (r < 0 || r >= modulus_ || std::gcd(r, modulus_) != 1) {
      throw InvalidInput("residue " + std::to_string(r) + " is not a unit mod " + std::to_string(modulus_));
    }
  }
  for (std::int64_t r = 0; r < modulus_; ++r) {
    if (std::gcd(r, modulus_) == 1 && !values_.count(r)) throw InvalidInput("missing value at residue " + std::to_string(r));
  }
  if (!values_.at(1 % modulus_).isOne()) throw InvalidInput("character value at 1 must be 1");
  for (const auto& [a, x] : values_) {
    for (const auto& [b, y] : values_) {
      if (b < a) continue;
      if (!(values_.at(a * b % modulus_) == x * y)) {
        throw InvalidInput("character is not multiplicative at " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  if (!(values_.at(modulus_ - 1) == atMinusOne_)) throw InvalidInput("value at -1 disagrees with the value at N-1");
}

DirichletCharacterData DirichletCharacterData::kronecker(std::int64_t discriminant) {
  const std::int64_t D = discriminant;
  const std::int64_t r4 = floorMod(D, 4);
  const bool fundamental = D == 1 || (r4 == 1 && squarefreePart(D) == D) ||
                           (r4 == 0 && (floorMod(D / 4, 4) == 2 || floorMod(D / 4, 4) == 3) && squarefreePart(D / 4) == D / 4);
  if (D == 0 || !fundamental) throw InvalidInput(std::to_string(D) + " is not a fundamental discriminant");
  const std::int64_t N = D < 0 ? -D : D;
  const mpz_class d(static_cast<long>(D));
  std::map<std::int64_t, RootOfUnity> values;
  for (std::int64_t r = 0; r < N; ++r) {
    if (std::gcd(r, N) != 1) continue;
    const int k = mpz_kronecker_si(d.get_mpz_t(), static_cast<long>(r));
    values[r] = k == 1 ? RootOfUnity() : RootOfUnity::minusOne();
  }
  return {N, std::move(values), D > 0 ? RootOfUnity() : RootOfUnity::minusOne()};
}

DirichletCharacterData DirichletCharacterData::fromPrimitiveRoot(std::int64_t p, const RootOfUnity& zeta) {
  if (p < 3 || !isPrime(static_cast<std::uint64_t>(p))) throw InvalidInput("modulus must be an odd prime");
  if (!zeta.pow(p - 1).isOne()) throw InvalidInput("zeta^(p-1) must be 1");
  const auto factors = factorize(static_cast<std::uint64_t>(p - 1));
  auto powMod = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (b %= p; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::int64_t g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (const auto& [q, _] : factors) primitive = primitive && powMod(g, (p - 1) / static_cast<std::int64_t>(q)) != 1;
    if (primitive) break;
  }
  std::map<std::int64_t, RootOfUnity> values;
  std::int64_t x = 1;
  for (long k = 0; k < p - 1; ++k, x = x * g % p) values[x] = zeta.pow(k);
  const RootOfUnity minus = values.at(p - 1);
  return {p, std::move(values), minus};
}

std::optional<RootOfUnity> DirichletCharacterData::at(std::int64_t n) const {
  const std::int64_t r = floorMod(n, modulus_);
  const auto it = values_.find(r);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t DirichletCharacterData::order() const {
  std::uint64_t o = 1;
  for (const auto& [_, z] : values_) o = std::lcm(o, z.order());
  return o;
}

void validateTraceTable(const TraceTable& t) {
  std::set<Prime> seen;
  for (const auto& e : t.entries) {
    if (!isPrime(e.p)) throw InvalidInput(std::to_string(e.p) + " is not prime");
    if (!seen.insert(e.p).second) throw InvalidInput("duplicate prime " + std::to_string(e.p));
    if (t.isUsed(e) && !t.epsilon.at(static_cast<std::int64_t>(e.p))) {
      throw InvalidInput("good prime " + std::to_string(e.p) + " divides the character modulus");
    }
  }
}

namespace {

std::vector<const TraceEntry*> usedEntries(const TraceTable& t) {
  validateTraceTable(t);
  std::vector<const TraceEntry*> out;
  for (const auto& e : t.entries) {
    if (t.isUsed(e)) out.push_back(&e);
  }
  std::sort(out.begin(), out.end(), [](const TraceEntry* a, const TraceEntry* b) { return a->p < b->p; });
  return out;
}

RootOfUnity epsAt(const DirichletCharacterData& eps, Prime p) {
  auto z = eps.at(static_cast<std::int64_t>(p));
  if (!z) throw InvalidInput("epsilon(" + std::to_string(p) + ") is undefined");
  return *z;
}

MultiquadraticField fieldOfSupports(const std::vector<FieldElement>& xs) {
  std::vector<SquareClass> classes;
  for (const auto& x : xs) {
    for (const auto& cls : x.support()) classes.push_back(cls);
  }
  return MultiquadraticField::fromSquareClasses(classes);
}

}  // namespace

std::vector<SymmetryEntry> checkConjugationSymmetry(const TraceTable& t) {
  std::vector<SymmetryEntry> out;
  for (const TraceEntry* e : usedEntries(t)) {
    if (!t.fieldE.contains(e->ap)) throw ValueOutsideField("a_" + std::to_string(e->p) + " is not in E");
    const FieldElement eps = FieldElement::fromRootOfUnity(epsAt(t.epsilon, e->p));
    out.push_back({e->p, e->ap == e->ap.conjugate() * eps});
  }
  return out;
}

GeneratedField generatedFieldE(const TraceTable& t) {
  std::vector<FieldElement> aps;
  for (const TraceEntry* e : usedEntries(t)) aps.push_back(e->ap);
  return {fieldOfSupports(aps), aps.empty()};
}

InnerFieldReport generatedFieldF(const TraceTable& t) {
  const std::uint64_t ord = t.epsilon.order();
  if (8 % (2 * ord) != 0) throw UnsupportedDegree("roots of unity of order " + std::to_string(2 * ord) + " are not multiquadratic");

  std::vector<FieldElement> tps;
  std::vector<FieldElement> witnessGens;
  for (const TraceEntry* e : usedEntries(t)) {
    if (e->ap.isZero()) continue;
    const RootOfUnity z = epsAt(t.epsilon, e->p);
    tps.push_back(e->ap * e->ap * FieldElement::fromRootOfUnity(z.inverse()));
    // a_p epsilon(p)^(-1/2) squares to t_p.
    witnessGens.push_back(e->ap * FieldElement::fromRootOfUnity(RootOfUnity(-z.torsion() / Rational(2))));
  }
  InnerFieldReport r;
  r.F = fieldOfSupports(tps);
  if (!r.F.isTotallyReal()) throw NotTotallyReal("the field generated by a_p^2/epsilon(p) is not totally real");
  r.insideE = t.fieldE.contains(r.F);

  witnessGens.push_back(FieldElement::fromRootOfUnity(RootOfUnity(Rational(1, static_cast<long>(2 * ord)))));
  std::vector<SquareClass> classes = r.F.squareClasses().basis();
  for (const auto& x : witnessGens) {
    for (const auto& cls : x.support()) classes.push_back(cls);
  }
  r.witness = MultiquadraticField::fromSquareClasses(classes);
  r.abelianContainment = r.witness.contains(t.fieldE);
  return r;
}

bool checkEvenness(const DirichletCharacterData& eps) { return eps.valueAtMinusOne().isOne(); }

std::vector<FieldElement> galoisConjugates(const FieldElement& x) {
  SquareClassSpace space;
  for (const auto& cls : x.support()) space.insert(cls);
  const auto& basis = space.basis();
  std::vector<FieldElement> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    FieldElement y;
    for (const auto& [cls, q] : x.terms()) {
      // The basis is fully reduced, so cls involves basis[i] iff it
      // contains basis[i]'s pivot.
      bool flip = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((mask >> i & 1) && cls.contains(basis[i].pivot())) flip = !flip;
      }
      y += FieldElement(cls, flip ? -q : q);
    }
    out.push_back(std::move(y));
  }
  return out;
}

FrobeniusCharpoly frobeniusCharpoly(const TraceEntry& entry, const DirichletCharacterData& eps) {
  if (!isPrime(entry.p)) throw InvalidInput(std::to_string(entry.p) + " is not prime");
  const RootOfUnity z = epsAt(eps, entry.p);
  FrobeniusCharpoly c;
  c.p = entry.p;
  c.trace = entry.ap;
  c.determinant = FieldElement::fromRootOfUnity(z) * FieldElement(Rational(Integer(std::to_string(entry.p))));
  c.coefficients = {FieldElement(Rational(1)), -entry.ap, c.determinant};
  const long double bound = 2 * std::sqrt(static_cast<long double>(entry.p));
  for (const auto& y : galoisConjugates(entry.ap)) c.maxAbs = std::max(c.maxAbs, std::abs(y.toComplex()));
  c.weilBoundOk = c.maxAbs <= bound * (1 + 1e-15L);
  return c;
}

}  // namespace qcurve
