#include "qcurve/multiquadratic.hpp"

#include <algorithm>

#include "qcurve/errors.hpp"

namespace qcurve {

SquareClass SquareClassSpace::reduce(SquareClass v) const {
  // Basis is sorted by pivot; clear pivots from the largest down.
  for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
    if (v.contains(it->pivot())) v = v + *it;
  }
  return v;
}

bool SquareClassSpace::insert(const SquareClass& v) {
  SquareClass r = reduce(v);
  if (r.isTrivial()) return false;
  const std::int64_t pivot = r.pivot();
  for (auto& b : basis_) {
    if (b.contains(pivot)) b = b + r;
  }
  basis_.insert(std::upper_bound(basis_.begin(), basis_.end(), r,
                                 [](const SquareClass& a, const SquareClass& b) { return a.pivot() < b.pivot(); }),
                r);
  return true;
}

bool SquareClassSpace::contains(const SquareClass& v) const { return reduce(v).isTrivial(); }

bool SquareClassSpace::containsSpace(const SquareClassSpace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const SquareClass& b) { return contains(b); });
}

bool MultiquadraticField::isTotallyReal() const {
  return std::none_of(space_.basis().begin(), space_.basis().end(), [](const SquareClass& b) { return b.isNegative(); });
}

bool MultiquadraticField::contains(const FieldElement& x) const {
  const auto& terms = x.terms();
  return std::all_of(terms.begin(), terms.end(), [this](const auto& kv) { return space_.contains(kv.first); });
}

MultiquadraticField MultiquadraticField::fromSquareClasses(std::span<const SquareClass> classes) {
  std::vector<RadicalElement> gens;
  for (const auto& c : classes) {
    if (!c.isTrivial()) gens.push_back(sqrtRadical(c));
  }
  return fieldOfRadicals(gens);
}

SquareClass radicalSquareClass(const RadicalElement& x) {
  const Rational quarters = x.torsion() * Rational(4);
  if (!quarters.isInteger()) {
    throw UnsupportedDegree("torsion " + x.torsion().str() + " is outside {0, 1/4, 1/2, 3/4}");
  }
  std::vector<std::int64_t> idx;
  if (quarters.numerator() % 2 != 0) idx.push_back(-1);
  for (const auto& [p, r] : x.exponents()) {
    const Rational twice = r * Rational(2);
    if (!twice.isInteger()) throw UnsupportedDegree("exponent " + r.str() + " of " + std::to_string(p) + " is not half-integral");
    if (!r.isInteger()) idx.push_back(static_cast<std::int64_t>(p));
  }
  return SquareClass(std::move(idx));
}

RadicalElement sqrtRadical(const SquareClass& cls) {
  std::map<Prime, Rational> e;
  for (auto i : cls.indices()) {
    if (i != -1) e.emplace(static_cast<Prime>(i), Rational(1, 2));
  }
  return RadicalElement(cls.isNegative() ? Rational(1, 4) : Rational(0), std::move(e));
}

MultiquadraticField fieldOfRadicals(std::span<const RadicalElement> gens) {
  MultiquadraticField f;
  for (const auto& g : gens) {
    // Q(x) is spanned by the square classes in x's support; this also
    // covers eighth roots of unity such as (1+i) = zeta_8 sqrt 2.
    for (const auto& cls : FieldElement::fromRadical(g).support()) f.space_.insert(cls);
    f.generators_.push_back(g);
  }
  return f;
}

Signature signatureClassify(const MultiquadraticField& f) {
  return f.isTotallyReal() ? Signature::TotallyReal : Signature::Imaginary;
}

}  // namespace qcurve
