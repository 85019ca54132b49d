#include "qcurve/twisted_algebra.hpp"

#include <set>

#include "qcurve/errors.hpp"
#include "qcurve/matrix.hpp"

namespace qcurve {

AlgebraElement AlgebraElement::basis(std::size_t s, const Rational& coefficient) {
  AlgebraElement x;
  x.add(s, coefficient);
  return x;
}

Rational AlgebraElement::coefficient(std::size_t s) const {
  const auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(std::size_t s, const Rational& q) {
  if (q.isZero()) return;
  auto [it, inserted] = coeffs_.try_emplace(s, q);
  if (!inserted) {
    it->second += q;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [s, q] : b.coeffs_) out.add(s, q);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + Rational(-1) * b; }

AlgebraElement operator*(const Rational& q, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [s, x] : a.coeffs_) out.add(s, q * x);
  return out;
}

TwistedGroupAlgebra::TwistedGroupAlgebra(TwoCocycle cocycle) : cocycle_(std::move(cocycle)) {
  table_.reserve(cocycle_.values().size());
  for (const auto& v : cocycle_.values()) {
    auto q = v.toRational();
    if (!q) throw InvalidInput("twisted group algebra needs rational structure constants");
    table_.push_back(*q);
  }
  commutative_ = cocycle_.isSymmetric();
}

bool TwistedGroupAlgebra::isAssociative() const {
  const std::size_t n = dimension();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto A = AlgebraElement::basis(a);
        const auto B = AlgebraElement::basis(b);
        const auto C = AlgebraElement::basis(c);
        if (!(algebraMultiply(algebraMultiply(A, B, *this), C, *this) ==
              algebraMultiply(A, algebraMultiply(B, C, *this), *this))) {
          return false;
        }
      }
    }
  }
  return true;
}

AlgebraElement algebraMultiply(const AlgebraElement& x, const AlgebraElement& y, const TwistedGroupAlgebra& R) {
  const auto& G = R.group();
  AlgebraElement out;
  for (const auto& [s, xs] : x.coefficients()) {
    for (const auto& [t, yt] : y.coefficients()) out.add(G.multiply(s, t), xs * yt * R.structureConstant(s, t));
  }
  return out;
}

namespace {

std::vector<Rational> coordinates(const AlgebraElement& x, std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (const auto& [s, q] : x.coefficients()) v.at(s) = q;
  return v;
}

}  // namespace

std::vector<Rational> minimalPolynomial(const AlgebraElement& x, const TwistedGroupAlgebra& R) {
  const std::size_t dim = R.dimension();
  std::vector<AlgebraElement> powers{R.one()};
  for (std::size_t k = 1; k <= dim; ++k) {
    powers.push_back(algebraMultiply(powers.back(), x, R));
    // Is x^k a combination of 1, ..., x^(k-1)?
    RationalMatrix m(dim, k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto c = coordinates(powers[j], dim);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = c[i];
    }
    const auto target = coordinates(powers.back(), dim);
    if (auto sol = m.solve(target)) {
      std::vector<Rational> poly;
      for (const auto& q : *sol) poly.push_back(-q);
      poly.push_back(Rational(1));
      return poly;
    }
  }
  throw InvalidInput("minimal polynomial degree exceeds algebra dimension");
}

AlgebraHom::AlgebraHom(TwistedGroupAlgebra source, MultiquadraticField target, std::vector<RadicalElement> basisImages)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(basisImages)) {
  if (images_.size() != source_.dimension()) throw InvalidInput("hom needs one image per basis element");
  for (const auto& r : images_) {
    imageValues_.push_back(FieldElement::fromRadical(r));
    if (!target_.contains(imageValues_.back())) throw ValueOutsideField("basis image lies outside the target field");
  }
}

FieldElement AlgebraHom::operator()(const AlgebraElement& x) const {
  FieldElement out;
  for (const auto& [s, q] : x.coefficients()) out += FieldElement(q) * imageValues_.at(s);
  return out;
}

bool AlgebraHom::isMultiplicative() const {
  const auto& G = source_.group();
  for (std::size_t s = 0; s < G.order(); ++s) {
    for (std::size_t t = 0; t < G.order(); ++t) {
      if (!(imageValues_[s] * imageValues_[t] ==
            FieldElement(source_.structureConstant(s, t)) * imageValues_[G.multiply(s, t)])) {
        return false;
      }
    }
  }
  return true;
}

AlgebraHom homFromSplitting(const TwistedGroupAlgebra& R, const OneCochain& a) {
  if (!(a.group() == R.group())) throw NotASplitting("cochain and algebra live on different groups");
  if (!(coboundaryOf(a) == R.cocycle())) throw NotASplitting("coboundary of the cochain differs from the structure constants");
  MultiquadraticField target = fieldOfRadicals(a.values());
  AlgebraHom omega(R, std::move(target), a.values());
  if (!omega.isMultiplicative()) throw NotASplitting("basis images are not multiplicative");
  return omega;
}

AlgebraElement kernelProjector(const TwistedGroupAlgebra& R, const AlgebraHom& omega) {
  const std::size_t n = R.dimension();
  const auto& G = R.group();

  // Matrix of omega in the square-class coordinates of E.
  std::vector<FieldElement> images;
  std::set<SquareClass> classes{SquareClass{}};
  for (std::size_t s = 0; s < n; ++s) {
    images.push_back(omega(AlgebraElement::basis(s)));
    for (const auto& cls : images.back().support()) classes.insert(cls);
  }
  const std::vector<SquareClass> coords(classes.begin(), classes.end());
  RationalMatrix W(coords.size(), n);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t s = 0; s < n; ++s) W(i, s) = images[s].coefficient(coords[i]);
  }
  const RationalMatrix kernel = W.nullspace();

  // Unknown y: y * k = 0 for each kernel basis vector k, and omega(y) = 1.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    for (std::size_t rho = 0; rho < n; ++rho) {
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t t = G.multiply(G.inverse(s), rho);
        row[s] = kernel(t, j) * R.structureConstant(s, t);
      }
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::vector<Rational> row(n);
    for (std::size_t s = 0; s < n; ++s) row[s] = W(i, s);
    rows.push_back(std::move(row));
    rhs.emplace_back(coords[i].isTrivial() ? 1 : 0);
  }
  RationalMatrix A(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t s = 0; s < n; ++s) A(i, s) = rows[i][s];
  }
  const auto sol = A.solve(rhs);
  if (!sol) throw NoProjector("annihilator of ker(omega) meets omega^-1(1) nowhere");

  AlgebraElement pi;
  for (std::size_t s = 0; s < n; ++s) pi.add(s, (*sol)[s]);
  if (!(algebraMultiply(pi, pi, R) == pi)) throw NoProjector("solution is not idempotent");
  return pi;
}

EndAlgebraClass classifyEndAlgebra(const EndAlgebraDescriptor& d) {
  if (d.n == 0 || d.centerDegree == 0 || d.maximalFieldDegree == 0 || d.abelianVarietyDim == 0) {
    throw InconsistentDescriptor("degrees and sizes must be positive");
  }
  if (d.divisionDegree != 1 && d.divisionDegree != 2) throw InconsistentDescriptor("division degree t must be 1 or 2");
  if (d.maximalFieldDegree % d.centerDegree != 0 || d.n * d.divisionDegree != d.maximalFieldDegree / d.centerDegree) {
    throw InconsistentDescriptor("n*t must equal [E:F]");
  }
  if (d.abelianVarietyDim % d.maximalFieldDegree != 0) throw InconsistentDescriptor("[E:Q] must divide dim A");
  EndAlgebraClass out;
  out.primitive = d.n == 1;
  out.n = d.n;
  out.division = d.divisionDegree == 1 ? DivisionType::MatrixOverField : DivisionType::Quaternionic;
  return out;
}

}  // namespace qcurve
