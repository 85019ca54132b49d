#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcurve/group.hpp"
#include "qcurve/matrix.hpp"
#include "qcurve/pipeline.hpp"

namespace qcurve {

/// Product of |G| factors, one per group element, each modelled by a
/// block of rank n. Slot i carries the factor labelled labels[i].
struct FactorProduct {
  std::vector<std::size_t> labels;
  std::size_t blockRank = 1;

  /// Slot i labelled by group element i.
  static FactorProduct standard(const FiniteAbelianGroup& g, std::size_t blockRank);
  std::size_t slots() const { return labels.size(); }
  std::size_t dimension() const { return labels.size() * blockRank; }
  /// Slot holding the factor labelled by `label`.
  std::size_t slotOf(std::size_t label) const;

  friend bool operator==(const FactorProduct&, const FactorProduct&) = default;
};

/// Map between factor products, stored as one matrix whose (t, s) block of
/// size n x n sends source slot s to target slot t.
class IsogenyBlockMap {
 public:
  IsogenyBlockMap() = default;
  IsogenyBlockMap(FactorProduct source, FactorProduct target);
  IsogenyBlockMap(FactorProduct source, FactorProduct target, RationalMatrix matrix);
  static IsogenyBlockMap identity(const FactorProduct& p);

  const FactorProduct& source() const { return source_; }
  const FactorProduct& target() const { return target_; }
  const RationalMatrix& matrix() const { return matrix_; }
  RationalMatrix& matrix() { return matrix_; }

  RationalMatrix block(std::size_t targetSlot, std::size_t sourceSlot) const;
  void setBlock(std::size_t targetSlot, std::size_t sourceSlot, const RationalMatrix& m);

  /// a * b applies b first; InvalidInput when b's target is not a's source.
  friend IsogenyBlockMap operator*(const IsogenyBlockMap& a, const IsogenyBlockMap& b);
  friend IsogenyBlockMap operator*(const Rational& s, const IsogenyBlockMap& m);
  friend IsogenyBlockMap operator+(const IsogenyBlockMap& a, const IsogenyBlockMap& b);
  friend bool operator==(const IsogenyBlockMap&, const IsogenyBlockMap&) = default;

 private:
  FactorProduct source_;
  FactorProduct target_;
  RationalMatrix matrix_;
};

/// g(mu_tau): the isogeny from the factor g*tau to the factor g. Entries
/// are rational and hence fixed by g, so only the labels move.
struct TransportedIsogeny {
  std::size_t sourceLabel;
  std::size_t targetLabel;
  RationalMatrix matrix;
};

/// Isomorphisms up to isogeny mu_sigma : sigma(A) -> A over L, one n x n
/// invertible matrix per element of Gal(L/K), with mu_1 = 1.
class DescentDatum {
 public:
  DescentDatum(FiniteAbelianGroup group, std::size_t blockRank, std::vector<RationalMatrix> mu);
  static DescentDatum trivial(const FiniteAbelianGroup& group, std::size_t blockRank);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t blockRank() const { return blockRank_; }
  const RationalMatrix& mu(std::size_t sigma) const { return mu_.at(sigma); }
  const std::vector<RationalMatrix>& mus() const { return mu_; }
  TransportedIsogeny transport(std::size_t g, std::size_t tau) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t blockRank_;
  std::vector<RationalMatrix> mu_;
};

/// sigma -> a.mu(sigma) * b.mu(sigma).
DescentDatum pointwiseProduct(const DescentDatum& a, const DescentDatum& b);

struct CompatibilityViolation {
  std::size_t sigma;
  std::size_t tau;
};

/// nullopt iff mu_sigma sigma(mu_tau) = mu_{sigma tau} for every pair.
std::optional<CompatibilityViolation> verifyCompatibility81(const DescentDatum& d);

/// The operators [g] on the product of conjugates, indexed by g: [g] sends
/// the factor tg to the factor t by t(mu_g). Throws CompatibilityRequired.
std::vector<IsogenyBlockMap> buildRestriction(const DescentDatum& d);

/// Blockwise product: every (t, s) block is a.block(t,s) * b.block(t,s).
IsogenyBlockMap blockwiseProduct(const IsogenyBlockMap& a, const IsogenyBlockMap& b);

struct DescentReport {
  IsogenyBlockMap eta;  // sum of [sigma]
  bool fixedByGroup = false;       // [sigma] eta = eta [sigma] = eta
  bool scaledIdempotent = false;   // (eta/|G|)^2 = eta/|G|
  std::size_t rank = 0;
  bool rankMatches = false;        // rank = n
  std::vector<std::size_t> slotRanks;  // rank of each slot's row block
  bool diagonalImage = false;      // every slot rank equals n

  bool ok() const { return fixedByGroup && scaledIdempotent && rankMatches && diagonalImage; }
};

/// Throws CompatibilityRequired.
DescentReport etaDescent(const DescentDatum& d);

/// iota : T -> B together with the two actions of the group algebra that it
/// should intertwine: iota * tAction[g] = bAction[g] * iota.
struct IotaModel {
  FiniteAbelianGroup group;
  std::size_t blockRank = 1;
  IsogenyBlockMap iota;
  std::vector<IsogenyBlockMap> tAction;
  std::vector<IsogenyBlockMap> bAction;
};

/// T = product of copies A_sigma permuted by the group; B the product of
/// conjugates with the operators [g]; iota sends A_sigma to the factor
/// sigma^-1 by sigma^-1(mu_sigma). Throws CompatibilityRequired.
IotaModel iotaModel(const DescentDatum& d);

/// Rank-one data from a rational cocycle: lambda_g sends the factor tg of
/// B to the factor t by c(t,g), acts on T by C_sigma -> C_{g sigma} with
/// c(g,sigma), and iota sends C_sigma to the factor sigma^-1 by
/// c(sigma^-1,sigma). Throws InvalidInput for an invalid datum.
IotaModel iotaModel(const QCurveDatum& d);

struct EquivarianceCounterexample {
  std::size_t g;
  std::size_t basisIndex;  // first column of T where the composites differ
};

std::optional<EquivarianceCounterexample> verifyIotaEquivariance(const IotaModel& m);

/// Rank of the span of { op * e_basisIndex : op in ops }.
std::size_t orbitSpanRank(const std::vector<IsogenyBlockMap>& ops, std::size_t basisIndex);

}  // namespace qcurve
