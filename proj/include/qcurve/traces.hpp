#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qcurve/field_element.hpp"
#include "qcurve/multiquadratic.hpp"
#include "qcurve/radical.hpp"

namespace qcurve {

/// Dirichlet character given by its values on the residues coprime to the
/// modulus. Validated on construction: every such residue has a value, the
/// value at 1 is 1, the assignment is multiplicative and valueAtMinusOne
/// agrees with the value at N-1.
class DirichletCharacterData {
 public:
  static constexpr std::int64_t kMaxModulus = 2000;

  DirichletCharacterData() : DirichletCharacterData(1, {{0, RootOfUnity()}}, RootOfUnity()) {}
  DirichletCharacterData(std::int64_t modulus, std::map<std::int64_t, RootOfUnity> values, RootOfUnity valueAtMinusOne);

  static DirichletCharacterData trivial() { return {}; }
  /// n -> (D/n) for a fundamental discriminant D, modulus |D|.
  static DirichletCharacterData kronecker(std::int64_t discriminant);
  /// Character mod an odd prime p sending the least primitive root to zeta.
  static DirichletCharacterData fromPrimitiveRoot(std::int64_t p, const RootOfUnity& zeta);

  std::int64_t modulus() const { return modulus_; }
  const std::map<std::int64_t, RootOfUnity>& values() const { return values_; }
  const RootOfUnity& valueAtMinusOne() const { return atMinusOne_; }
  /// nullopt when gcd(n, N) > 1.
  std::optional<RootOfUnity> at(std::int64_t n) const;
  std::uint64_t order() const;

  friend bool operator==(const DirichletCharacterData&, const DirichletCharacterData&) = default;

 private:
  std::int64_t modulus_;
  std::map<std::int64_t, RootOfUnity> values_;
  RootOfUnity atMinusOne_;
};

struct TraceEntry {
  Prime p = 2;
  FieldElement ap;
  bool good = true;
};

/// Frobenius traces of an abelian variety of GL2-type. An entry takes part
/// in the checks only when it is good and its prime is outside badPrimes.
struct TraceTable {
  MultiquadraticField fieldE;
  DirichletCharacterData epsilon;
  std::vector<TraceEntry> entries;
  std::set<Prime> badPrimes;

  bool isUsed(const TraceEntry& e) const { return e.good && !badPrimes.count(e.p); }
};

/// Distinct primes; epsilon(p) defined on every used entry. Throws
/// InvalidInput.
void validateTraceTable(const TraceTable& t);

struct SymmetryEntry {
  Prime p;
  bool holds;
};

/// a_p = conj(a_p) epsilon(p) per used entry, ascending p. Throws
/// ValueOutsideField when some a_p is not in E.
std::vector<SymmetryEntry> checkConjugationSymmetry(const TraceTable& t);

struct GeneratedField {
  MultiquadraticField field;
  bool emptyGenerators = false;
};

/// Field generated by the used a_p.
GeneratedField generatedFieldE(const TraceTable& t);

struct InnerFieldReport {
  MultiquadraticField F;  // generated by t_p = a_p^2 / epsilon(p)
  bool insideE = false;
  /// F adjoined square roots of the t_p and the roots of unity of order
  /// 2 ord(epsilon).
  MultiquadraticField witness;
  bool abelianContainment = false;  // E inside the witness
};

/// Throws NotTotallyReal when F is not totally real, UnsupportedDegree when
/// the needed roots of unity leave the multiquadratic range.
InnerFieldReport generatedFieldF(const TraceTable& t);

bool checkEvenness(const DirichletCharacterData& eps);

struct FrobeniusCharpoly {
  Prime p;
  FieldElement trace;
  FieldElement determinant;
  std::vector<FieldElement> coefficients;  // 1, -a_p, epsilon(p) p
  /// Advisory: |s(a_p)| <= 2 sqrt(p) under every embedding s.
  bool weilBoundOk = true;
  long double maxAbs = 0;
};

/// Throws InvalidInput when epsilon(p) is undefined.
FrobeniusCharpoly frobeniusCharpoly(const TraceEntry& entry, const DirichletCharacterData& eps);

/// Every image of x under an automorphism of Q(x), flipping sqrt(d) along
/// the characters of the square classes in x's support.
std::vector<FieldElement> galoisConjugates(const FieldElement& x);

}  // namespace qcurve
