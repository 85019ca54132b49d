#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcurve/field_element.hpp"
#include "qcurve/radical.hpp"

namespace qcurve {

/// Subspace of square classes over the two-element field, held as a fully
/// reduced basis (each pivot occurs in exactly one basis vector), so equal
/// subspaces have identical bases.
class SquareClassSpace {
 public:
  /// Returns true when v was independent of the current basis.
  bool insert(const SquareClass& v);
  bool contains(const SquareClass& v) const;
  SquareClass reduce(SquareClass v) const;

  std::size_t rank() const { return basis_.size(); }
  const std::vector<SquareClass>& basis() const { return basis_; }
  bool containsSpace(const SquareClassSpace& other) const;

  friend bool operator==(const SquareClassSpace&, const SquareClassSpace&) = default;

 private:
  std::vector<SquareClass> basis_;  // sorted by pivot
};

enum class Signature { TotallyReal, Imaginary };

/// Q(sqrt d_1, ..., sqrt d_r): degree 2^rank of its square-class space.
class MultiquadraticField {
 public:
  MultiquadraticField() = default;  // Q
  static MultiquadraticField fromSquareClasses(std::span<const SquareClass> classes);

  const std::vector<RadicalElement>& generators() const { return generators_; }
  const SquareClassSpace& squareClasses() const { return space_; }

  std::size_t rank() const { return space_.rank(); }
  std::uint64_t degree() const { return std::uint64_t{1} << space_.rank(); }
  bool isTotallyReal() const;

  bool contains(const SquareClass& cls) const { return space_.contains(cls); }
  bool contains(const FieldElement& x) const;
  bool contains(const MultiquadraticField& sub) const { return space_.containsSpace(sub.space_); }

  /// Same field (generators may differ).
  bool sameField(const MultiquadraticField& other) const { return space_ == other.space_; }

 private:
  friend /// Q(gens). Torsion must lie in (1/8)Z and exponents in (1/2)Z, else
/// UnsupportedDegree.
MultiquadraticField fieldOfRadicals(std::span<const RadicalElement> gens);

  std::vector<RadicalElement> generators_;
  SquareClassSpace space_;
};

/// Square class of a generator in the multiquadratic regime (torsion in
/// {0, 1/4, 1/2, 3/4}, exponents in (1/2)Z); UnsupportedDegree otherwise.
SquareClass radicalSquareClass(const RadicalElement& x);

/// sqrt of a square class as a radical: sqrt(-s) = i * sqrt(s).
RadicalElement sqrtRadical(const SquareClass& cls);

/// Q(gens). Torsion must lie in (1/8)Z and exponents in (1/2)Z, else
/// UnsupportedDegree.
MultiquadraticField fieldOfRadicals(std::span<const RadicalElement> gens);

Signature signatureClassify(const MultiquadraticField& f);

}  // namespace qcurve
