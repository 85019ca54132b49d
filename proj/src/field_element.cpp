#include "qcurve/field_element.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "qcurve/arith.hpp"
#include "qcurve/errors.hpp"

namespace qcurve {

SquareClass::SquareClass(std::vector<std::int64_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InvalidInput("square class indices must be distinct");
  }
  for (auto i : indices_) {
    if (i != -1 && (i < 2 || !isPrime(static_cast<std::uint64_t>(i)))) {
      throw InvalidInput("square class index " + std::to_string(i) + " is neither -1 nor prime");
    }
  }
}

SquareClass SquareClass::ofInteger(std::int64_t n) {
  const std::int64_t s = squarefreePart(n);
  std::vector<std::int64_t> idx;
  if (s < 0) idx.push_back(-1);
  const auto magnitude = static_cast<std::uint64_t>(s < 0 ? -s : s);
  for (const auto& [p, e] : factorize(magnitude)) idx.push_back(static_cast<std::int64_t>(p));
  SquareClass c;
  c.indices_ = std::move(idx);
  return c;
}

bool SquareClass::contains(std::int64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::int64_t SquareClass::squarefree() const {
  std::int64_t out = 1;
  for (auto i : indices_) {
    if (__builtin_mul_overflow(out, i, &out)) throw InvalidInput("square class representative overflows int64");
  }
  return out;
}

SquareClass operator+(const SquareClass& a, const SquareClass& b) {
  SquareClass c;
  std::set_symmetric_difference(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
                                std::back_inserter(c.indices_));
  return c;
}

namespace {

// sqrt(a) * sqrt(b) = sign * g * sqrt(a + b), with g the product of the
// primes common to a and b and sign = -1 when both are negative.
Rational basisProductFactor(const SquareClass& a, const SquareClass& b) {
  Integer g = 1;
  std::vector<std::int64_t> common;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                        std::back_inserter(common));
  for (auto i : common) {
    if (i == -1) {
      g = -g;
    } else {
      g *= Integer(std::to_string(i), 10);
    }
  }
  return Rational(g);
}

}  // namespace

FieldElement::FieldElement(const Rational& q) { addTerm(SquareClass{}, q); }

FieldElement::FieldElement(const SquareClass& cls, const Rational& coefficient) { addTerm(cls, coefficient); }

FieldElement FieldElement::sqrtOf(std::int64_t d) {
  const std::int64_t s = squarefreePart(d);
  const std::int64_t square = d / s;
  // d = s * k^2 with k^2 = d / s.
  std::int64_t k = 1;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(square))) {
    for (unsigned j = 0; j < e / 2; ++j) k *= static_cast<std::int64_t>(p);
  }
  return FieldElement(SquareClass::ofInteger(s), Rational(k));
}

FieldElement FieldElement::fromRootOfUnity(const RootOfUnity& zeta) {
  const Rational eighths = zeta.torsion() * Rational(8);
  if (!eighths.isInteger()) {
    throw UnsupportedDegree("root of unity of order " + std::to_string(zeta.order()) + " is not multiquadratic");
  }
  const long k = eighths.numerator().get_si();
  const SquareClass two = SquareClass::ofInteger(2);
  const SquareClass minusTwo = SquareClass::ofInteger(-2);
  const SquareClass minusOne = SquareClass::ofInteger(-1);
  const Rational half(1, 2);
  // zeta_8 = (sqrt 2 + sqrt -2) / 2.
  switch (k) {
    case 0: return FieldElement(Rational(1));
    case 1: return FieldElement(two, half) + FieldElement(minusTwo, half);
    case 2: return FieldElement(minusOne, Rational(1));
    case 3: return FieldElement(two, -half) + FieldElement(minusTwo, half);
    case 4: return FieldElement(Rational(-1));
    case 5: return FieldElement(two, -half) + FieldElement(minusTwo, -half);
    case 6: return FieldElement(minusOne, Rational(-1));
    default: return FieldElement(two, half) + FieldElement(minusTwo, -half);
  }
}

FieldElement FieldElement::fromRadical(const RadicalElement& x) {
  Rational scale(1);
  std::vector<std::int64_t> idx;
  for (const auto& [p, r] : x.exponents()) {
    const Rational twice = r * Rational(2);
    if (!twice.isInteger()) throw UnsupportedDegree("exponent " + r.str() + " of " + std::to_string(p) + " is not half-integral");
    const Integer whole = r.floor();
    scale *= Rational(Integer(std::to_string(p), 10)).pow(whole.get_si());
    if (r != Rational(whole)) idx.push_back(static_cast<std::int64_t>(p));
  }
  SquareClass cls;
  if (!idx.empty()) cls = SquareClass(std::move(idx));
  return fromRootOfUnity(RootOfUnity(x.torsion())) * FieldElement(cls, scale);
}

void FieldElement::addTerm(const SquareClass& cls, const Rational& q) {
  if (q.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(cls, q);
  if (!inserted) {
    it->second += q;
    if (it->second.isZero()) terms_.erase(it);
  }
}

bool FieldElement::isRational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isTrivial()); }

Rational FieldElement::coefficient(const SquareClass& cls) const {
  const auto it = terms_.find(cls);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<SquareClass> FieldElement::support() const {
  std::vector<SquareClass> out;
  for (const auto& [cls, q] : terms_) out.push_back(cls);
  return out;
}

FieldElement FieldElement::conjugate() const {
  FieldElement out;
  for (const auto& [cls, q] : terms_) out.addTerm(cls, cls.isNegative() ? -q : q);
  return out;
}

std::complex<long double> FieldElement::toComplex() const {
  std::complex<long double> z = 0;
  for (const auto& [cls, q] : terms_) {
    long double magnitude = 1;
    for (auto i : cls.indices()) {
      if (i != -1) magnitude *= std::sqrt(static_cast<long double>(i));
    }
    const long double c = static_cast<long double>(q.toDouble()) * magnitude;
    z += cls.isNegative() ? std::complex<long double>(0, c) : std::complex<long double>(c, 0);
  }
  return z;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  for (const auto& [cls, q] : other.terms_) addTerm(cls, q);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  for (const auto& [cls, q] : other.terms_) addTerm(cls, -q);
  return *this;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement out;
  for (const auto& [cls, q] : a.terms_) out.addTerm(cls, -q);
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement out;
  for (const auto& [ca, qa] : a.terms_) {
    for (const auto& [cb, qb] : b.terms_) out.addTerm(ca + cb, qa * qb * basisProductFactor(ca, cb));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  if (x.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [cls, q] : x.terms_) {
    if (!first) os << " + ";
    first = false;
    os << q;
    if (!cls.isTrivial()) os << "*sqrt(" << cls.squarefree() << ")";
  }
  return os;
}

QuadraticElement::QuadraticElement(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (d == 0 || d == 1 || squarefreePart(d) != d) throw InvalidInput("quadratic element needs squarefree d != 0, 1");
}

FieldElement QuadraticElement::toFieldElement() const {
  return FieldElement(a_) + FieldElement(SquareClass::ofInteger(d_), b_);
}

QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
  if (x.d_ != y.d_) throw InvalidInput("quadratic elements from different fields");
  return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_), x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

}  // namespace qcurve
