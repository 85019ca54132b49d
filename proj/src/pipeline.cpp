#include "qcurve/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcurve/errors.hpp"

namespace qcurve {

DatumCheck validateQCurveDatum(const QCurveDatum& d) {
  const auto& G = d.group;
  if (!(d.cocycle.group() == G) || d.degrees.size() != G.order()) {
    throw InvalidInput("datum tables do not match the group");
  }
  if (auto v = validateCocycle(d.cocycle)) {
    return {DatumCheck::Kind::CocycleViolation, v->g, v->h, v->k};
  }
  if (d.degrees[G.identity()] != 1) return {DatumCheck::Kind::DegreeIdentityViolation, 0, 0, 0};
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (std::size_t h = 0; h < G.order(); ++h) {
      const auto c = d.cocycle(g, h).toRational();
      const Rational rhs = Rational(Integer(std::to_string(d.degrees[g]))) * Rational(Integer(std::to_string(d.degrees[h]))) /
                           Rational(Integer(std::to_string(d.degrees[G.multiply(g, h)])));
      if (!c || *c * *c != rhs) return {DatumCheck::Kind::DegreeIdentityViolation, g, h, 0};
    }
  }
  return {};
}

GroupCharacter epsilonFromSplitting(const OneCochain& alpha, const std::vector<std::uint64_t>& degrees) {
  const auto& G = alpha.group();
  if (degrees.size() != G.order()) throw InvalidInput("degree table does not match the group");
  std::vector<RootOfUnity> values;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (degrees[g] == 0) throw InvalidInput("isogeny degrees must be positive");
    const RadicalElement e = alpha(g).pow(Rational(2)) / RadicalElement::fromRational(Rational(Integer(std::to_string(degrees[g]))));
    auto zeta = e.asRootOfUnity();
    if (!zeta) throw InvalidInput("alpha^2 / deg is not a root of unity at " + G.format(g));
    values.push_back(*zeta);
  }
  return GroupCharacter(G, std::move(values));
}

GL2TypeConstruction constructGL2Type(const QCurveDatum& d) {
  const DatumCheck check = validateQCurveDatum(d);
  if (!check.isValid()) throw InvalidInput("invalid Q-curve datum");

  SplitResult split = splitCocycle(d.cocycle);
  if (!split.isSplit()) throw SplittingObstructed("cocycle has a nontrivial alternating pairing on this group");
  OneCochain alpha = std::move(*split.splitting);

  GL2TypeDescriptor desc;
  desc.E = fieldOfRadicals(alpha.values());
  desc.epsilon = epsilonFromSplitting(alpha, d.degrees);
  desc.dimension = desc.E.degree();
  desc.F = MultiquadraticField();
  desc.epsilonInversionAmbiguous = desc.epsilon.order() > 2;
  desc.alpha = alpha;

  TwistedGroupAlgebra R(d.cocycle);
  AlgebraHom omega = homFromSplitting(R, alpha);
  AlgebraElement pi = kernelProjector(R, omega);
  return {std::move(desc), std::move(R), std::move(omega), std::move(pi)};
}

bool checkAlphaEpsilonCongruence(const GL2TypeDescriptor& desc) {
  const auto& G = desc.alpha.group();
  if (!(desc.epsilon.group() == G)) return false;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const RadicalElement ratio = desc.alpha(g).pow(Rational(2)) / RadicalElement(desc.epsilon(g));
    const auto q = ratio.toRational();
    if (!q || q->sign() <= 0) return false;
  }
  return true;
}

std::vector<FrobeniusCongruence> checkFrobeniusCongruence(const GL2TypeDescriptor& desc, const FrobeniusAssignment& f) {
  const auto& G = desc.alpha.group();
  std::set<Prime> seen;
  for (const auto& e : f.entries) {
    if (!seen.insert(e.p).second) throw InvalidInput("duplicate prime " + std::to_string(e.p) + " in Frobenius assignment");
    if (e.frobClass >= G.order()) throw InvalidInput("Frobenius class outside the group");
  }
  std::vector<FrobeniusCongruence> out;
  for (const auto& e : f.entries) {
    if (!e.goodReduction || e.ap.isZero()) {
      out.push_back({e.p, CongruenceVerdict::Skipped});
      continue;
    }
    // a_p = q * alpha(Frob_p) for some q in Q*?
    const FieldElement a = FieldElement::fromRadical(desc.alpha(e.frobClass));
    const auto& [cls, coef] = *a.terms().begin();
    const Rational q = e.ap.coefficient(cls) / coef;
    const bool holds = !q.isZero() && e.ap == FieldElement(q) * a;
    out.push_back({e.p, holds ? CongruenceVerdict::Holds : CongruenceVerdict::Fails});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.p < y.p; });
  return out;
}

BrauerOrder brauerOrderReport(const QCurveDatum& d) {
  if (classOrderOverRationals(d.cocycle, 1)) return BrauerOrder::OrderOne;
  if (!classOrderOverRationals(d.cocycle, 2)) {
    throw std::logic_error("class of c^2 is nontrivial over Q*; the degree identity should split it");
  }
  return BrauerOrder::OrderTwo;
}

}  // namespace qcurve
