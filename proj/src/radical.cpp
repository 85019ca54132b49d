#include "qcurve/radical.hpp"

#include "qcurve/errors.hpp"

namespace qcurve {

RootOfUnity::RootOfUnity(const Rational& torsion) : torsion_(torsion.fractionalPart()) {}

std::uint64_t RootOfUnity::order() const { return toUint64(torsion_.denominator()); }

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(-torsion_); }

RootOfUnity RootOfUnity::pow(long k) const { return RootOfUnity(torsion_ * Rational(k)); }

RadicalElement::RadicalElement(const Rational& torsion, std::map<Prime, Rational> exponents)
    : torsion_(torsion.fractionalPart()) {
  for (auto& [p, r] : exponents) {
    if (r.isZero()) continue;
    if (!isPrime(p)) throw InvalidInput("exponent key " + std::to_string(p) + " is not prime");
    exponents_.emplace(p, r);
  }
}

RadicalElement RadicalElement::fromRational(const Rational& q) {
  if (q.isZero()) throw InvalidInput("zero is not in the radical group");
  RadicalElement x;
  if (q.sign() < 0) x.torsion_ = Rational(1, 2);
  for (const auto& [p, e] : factorize(toUint64(q.numerator()))) x.exponents_[p] += Rational(static_cast<long>(e));
  for (const auto& [p, e] : factorize(toUint64(q.denominator()))) x.exponents_[p] -= Rational(static_cast<long>(e));
  return x;
}

std::optional<RootOfUnity> RadicalElement::asRootOfUnity() const {
  if (!exponents_.empty()) return std::nullopt;
  return RootOfUnity(torsion_);
}

std::optional<Rational> RadicalElement::toRational() const {
  if (!torsion_.isZero() && torsion_ != Rational(1, 2)) return std::nullopt;
  Rational value(torsion_.isZero() ? 1 : -1);
  for (const auto& [p, r] : exponents_) {
    if (!r.isInteger()) return std::nullopt;
    value *= Rational(Integer(std::to_string(p), 10)).pow(r.numerator().get_si());
  }
  return value;
}

RadicalElement RadicalElement::inverse() const { return pow(Rational(-1)); }

RadicalElement RadicalElement::pow(const Rational& k) const {
  // Rational powers of roots of unity are not single-valued.
  if (!k.isInteger()) throw InvalidInput("RadicalElement::pow needs an integer exponent; use radRoot");
  std::map<Prime, Rational> e;
  if (!k.isZero()) {
    for (const auto& [p, r] : exponents_) e.emplace(p, r * k);
  }
  return RadicalElement(Trusted{}, torsion_ * k, std::move(e));
}

RadicalElement radMul(const RadicalElement& x, const RadicalElement& y) {
  std::map<Prime, Rational> e = x.exponents();
  for (const auto& [p, r] : y.exponents()) e[p] += r;
  std::erase_if(e, [](const auto& kv) { return kv.second.isZero(); });
  return RadicalElement(RadicalElement::Trusted{}, x.torsion() + y.torsion(), std::move(e));
}

RadicalElement radRoot(const RadicalElement& x, unsigned n) {
  if (n == 0) throw InvalidInput("radRoot: n must be positive");
  const Rational divisor(static_cast<long>(n));
  std::map<Prime, Rational> e;
  for (const auto& [p, r] : x.exponents()) e.emplace(p, r / divisor);
  return RadicalElement(RadicalElement::Trusted{}, x.torsion() / divisor, std::move(e));
}

std::ostream& operator<<(std::ostream& os, const RadicalElement& x) {
  os << "(torsion " << x.torsion_ << ", {";
  bool first = true;
  for (const auto& [p, r] : x.exponents_) {
    os << (first ? "" : ", ") << p << ": " << r;
    first = false;
  }
  return os << "})";
}

}  // namespace qcurve
