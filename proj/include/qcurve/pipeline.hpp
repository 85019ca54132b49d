#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcurve/cohomology.hpp"
#include "qcurve/field_element.hpp"
#include "qcurve/multiquadratic.hpp"
#include "qcurve/twisted_algebra.hpp"

namespace qcurve {

/// Abstract Q-curve data over K/Q: the Galois group, the degrees of the
/// isogenies mu_g : gC -> C, and the rational cocycle
/// c(g,h) = mu_g g(mu_h) mu_gh^-1.
struct QCurveDatum {
  FiniteAbelianGroup group;
  std::vector<std::uint64_t> degrees;  // indexed by group element
  TwoCocycle cocycle;
};

struct DatumCheck {
  enum class Kind { Valid, DegreeIdentityViolation, CocycleViolation };
  Kind kind = Kind::Valid;
  std::size_t g = 0;
  std::size_t h = 0;
  std::size_t k = 0;

  bool isValid() const { return kind == Kind::Valid; }
};

/// Checks the cocycle identity, deg mu_1 = 1, rationality of c, and
/// c(g,h)^2 = deg mu_g deg mu_h / deg mu_gh.
DatumCheck validateQCurveDatum(const QCurveDatum& d);

struct GL2TypeDescriptor {
  MultiquadraticField E;
  GroupCharacter epsilon;
  OneCochain alpha;
  std::uint64_t dimension = 1;
  MultiquadraticField F;  // inner field, Q in this construction
  // epsilon has order > 2, so epsilon and its inverse differ and the
  // normalization against the l-adic epsilon is undecided.
  bool epsilonInversionAmbiguous = false;
};

/// Descriptor plus the algebra attachments R, omega and pi.
struct GL2TypeConstruction {
  GL2TypeDescriptor descriptor;
  TwistedGroupAlgebra R;
  AlgebraHom omega;
  AlgebraElement projector;
};

/// g -> alpha(g)^2 / deg mu_g. Throws InvalidInput if some value is not a
/// root of unity or the result is not a character.
GroupCharacter epsilonFromSplitting(const OneCochain& alpha, const std::vector<std::uint64_t>& degrees);

/// Splits c, forms E, epsilon, R, omega and pi. Throws InvalidInput for an
/// invalid datum, SplittingObstructed, or UnsupportedDegree.
GL2TypeConstruction constructGL2Type(const QCurveDatum& d);

/// alpha(g)^2 / epsilon(g) is a positive rational for every g.
bool checkAlphaEpsilonCongruence(const GL2TypeDescriptor& desc);

struct FrobeniusEntry {
  Prime p = 2;
  std::size_t frobClass = 0;
  FieldElement ap;
  bool goodReduction = true;
};

/// Entries must have distinct primes and classes inside the group.
struct FrobeniusAssignment {
  std::vector<FrobeniusEntry> entries;
};

enum class CongruenceVerdict { Holds, Fails, Skipped };

struct FrobeniusCongruence {
  Prime p;
  CongruenceVerdict verdict;
};

/// Per entry: alpha(Frob_p) / a_p in Q*. Entries with a_p = 0 or bad
/// reduction are Skipped. Output is sorted by p.
std::vector<FrobeniusCongruence> checkFrobeniusCongruence(const GL2TypeDescriptor& desc, const FrobeniusAssignment& f);

enum class BrauerOrder { OrderOne, OrderTwo };

/// OrderOne iff c is split by a rational cochain; otherwise c^2 must be,
/// and std::logic_error signals that it is not.
BrauerOrder brauerOrderReport(const QCurveDatum& d);

}  // namespace qcurve
