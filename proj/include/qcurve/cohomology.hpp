#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcurve/group.hpp"
#include "qcurve/radical.hpp"

namespace qcurve {

/// Function G -> radical group with value 1 at the identity.
class OneCochain {
 public:
  OneCochain() = default;
  /// values indexed by group element index; throws InvalidInput unless
  /// normalized and of the right size.
  OneCochain(FiniteAbelianGroup group, std::vector<RadicalElement> values);
  static OneCochain trivial(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const RadicalElement& operator()(std::size_t g) const { return values_.at(g); }
  const std::vector<RadicalElement>& values() const { return values_; }

  friend OneCochain operator*(const OneCochain& a, const OneCochain& b);
  friend bool operator==(const OneCochain&, const OneCochain&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<RadicalElement> values_;
};

/// Table G x G -> radical group. The constructor normalizes by dividing
/// every entry by c(1,1); the cocycle identity itself is checked by
/// validateCocycle, so a TwoCocycle may hold a broken table.
class TwoCocycle {
 public:
  TwoCocycle() = default;
  /// values in row-major order: values[g * |G| + h] = c(g, h).
  TwoCocycle(FiniteAbelianGroup group, std::vector<RadicalElement> values);
  static TwoCocycle trivial(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const RadicalElement& operator()(std::size_t g, std::size_t h) const { return values_.at(g * group_.order() + h); }
  const std::vector<RadicalElement>& values() const { return values_; }

  bool isSymmetric() const;
  /// All values lie in Q*.
  bool isRational() const;
  TwoCocycle pow(long k) const;

  friend TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b);
  friend bool operator==(const TwoCocycle&, const TwoCocycle&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<RadicalElement> values_;
};

/// Homomorphism G -> roots of unity.
class GroupCharacter {
 public:
  GroupCharacter() = default;
  /// Throws InvalidInput unless multiplicative.
  GroupCharacter(FiniteAbelianGroup group, std::vector<RootOfUnity> values);
  static GroupCharacter trivial(const FiniteAbelianGroup& group);
  /// All |G| characters, g -> exp(2 pi i sum k_j g_j / n_j), in the index
  /// order of k.
  static std::vector<GroupCharacter> all(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const RootOfUnity& operator()(std::size_t g) const { return values_.at(g); }
  const std::vector<RootOfUnity>& values() const { return values_; }
  std::uint64_t order() const;
  bool isTrivial() const { return order() == 1; }

  friend bool operator==(const GroupCharacter&, const GroupCharacter&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<RootOfUnity> values_;
};

struct CocycleViolation {
  std::size_t g;
  std::size_t h;
  std::size_t k;
};

/// nullopt when c(g,h) c(gh,k) = c(h,k) c(g,hk) for all triples; otherwise
/// the first violating triple in index order.
std::optional<CocycleViolation> validateCocycle(const TwoCocycle& c);

/// (g, h) -> a(g) a(h) / a(gh).
TwoCocycle coboundaryOf(const OneCochain& a);

/// Alternating pairing (g, h) -> c(g,h) / c(h,g), the obstruction to
/// splitting over a divisible value group.
class ObstructionPairing {
 public:
  explicit ObstructionPairing(const TwoCocycle& c);

  const FiniteAbelianGroup& group() const { return group_; }
  const RadicalElement& operator()(std::size_t g, std::size_t h) const { return values_.at(g * group_.order() + h); }
  bool isTrivial() const;
  bool isAlternating() const;
  bool isBimultiplicative() const;

  friend bool operator==(const ObstructionPairing&, const ObstructionPairing&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<RadicalElement> values_;
};

struct SplitResult {
  std::optional<OneCochain> splitting;
  std::optional<ObstructionPairing> obstruction;

  bool isSplit() const { return splitting.has_value(); }
};

/// Finds a with coboundaryOf(a) = c using canonical roots on each cyclic
/// factor, or reports the alternating pairing when none exists at this
/// level. Throws InvalidCocycle if c fails validateCocycle.
SplitResult splitCocycle(const TwoCocycle& c);

/// {a * chi : chi a character of the group}, in GroupCharacter::all order.
std::vector<OneCochain> twistSplittings(const OneCochain& a);

/// True iff c^k is the coboundary of a cochain with values in Q*. Requires
/// a valid cocycle with rational values (InvalidInput otherwise).
bool classOrderOverRationals(const TwoCocycle& c, long k);

}  // namespace qcurve
