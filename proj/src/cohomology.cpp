#include "qcurve/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcurve/errors.hpp"

namespace qcurve {

OneCochain::OneCochain(FiniteAbelianGroup group, std::vector<RadicalElement> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) throw InvalidInput("cochain table size does not match group order");
  if (!values_[group_.identity()].isOne()) throw InvalidInput("cochain is not normalized (value at identity != 1)");
}

OneCochain OneCochain::trivial(const FiniteAbelianGroup& group) {
  return OneCochain(group, std::vector<RadicalElement>(group.order()));
}

OneCochain operator*(const OneCochain& a, const OneCochain& b) {
  if (!(a.group_ == b.group_)) throw InvalidInput("cochains over different groups");
  std::vector<RadicalElement> v(a.values_.size());
  for (std::size_t g = 0; g < v.size(); ++g) v[g] = a.values_[g] * b.values_[g];
  return OneCochain(a.group_, std::move(v));
}

TwoCocycle::TwoCocycle(FiniteAbelianGroup group, std::vector<RadicalElement> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const std::size_t n = group_.order();
  if (values_.size() != n * n) throw InvalidInput("cocycle table size does not match |G|^2");
  const RadicalElement c11 = values_[0];
  if (!c11.isOne()) {
    const RadicalElement inv = c11.inverse();
    for (auto& v : values_) v = v * inv;
  }
}

TwoCocycle TwoCocycle::trivial(const FiniteAbelianGroup& group) {
  return TwoCocycle(group, std::vector<RadicalElement>(group.order() * group.order()));
}

bool TwoCocycle::isSymmetric() const {
  const std::size_t n = group_.order();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = g + 1; h < n; ++h) {
      if (!((*this)(g, h) == (*this)(h, g))) return false;
    }
  }
  return true;
}

bool TwoCocycle::isRational() const {
  return std::all_of(values_.begin(), values_.end(), [](const RadicalElement& v) { return v.isRational(); });
}

TwoCocycle TwoCocycle::pow(long k) const {
  std::vector<RadicalElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i].pow(Rational(k));
  return TwoCocycle(group_, std::move(v));
}

TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b) {
  if (!(a.group_ == b.group_)) throw InvalidInput("cocycles over different groups");
  std::vector<RadicalElement> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return TwoCocycle(a.group_, std::move(v));
}

GroupCharacter::GroupCharacter(FiniteAbelianGroup group, std::vector<RootOfUnity> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const std::size_t n = group_.order();
  if (values_.size() != n) throw InvalidInput("character table size does not match group order");
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (!(values_[group_.multiply(g, h)] == values_[g] * values_[h])) {
        throw InvalidInput("character is not multiplicative at " + group_.format(g) + ", " + group_.format(h));
      }
    }
  }
}

GroupCharacter GroupCharacter::trivial(const FiniteAbelianGroup& group) {
  return GroupCharacter(group, std::vector<RootOfUnity>(group.order()));
}

std::vector<GroupCharacter> GroupCharacter::all(const FiniteAbelianGroup& group) {
  const auto& orders = group.cyclicOrders();
  std::vector<GroupCharacter> out;
  for (std::size_t k = 0; k < group.order(); ++k) {
    const GroupElement kk = group.element(k);
    std::vector<RootOfUnity> values(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) {
      const GroupElement gg = group.element(g);
      Rational t(0);
      for (std::size_t i = 0; i < orders.size(); ++i) t += Rational(kk[i] * gg[i], orders[i]);
      values[g] = RootOfUnity(t);
    }
    out.emplace_back(group, std::move(values));
  }
  return out;
}

std::uint64_t GroupCharacter::order() const {
  std::uint64_t o = 1;
  for (const auto& v : values_) o = std::lcm(o, v.order());
  return o;
}

std::optional<CocycleViolation> validateCocycle(const TwoCocycle& c) {
  const auto& G = c.group();
  const std::size_t n = G.order();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = G.multiply(g, h);
      for (std::size_t k = 0; k < n; ++k) {
        if (!(c(g, h) * c(gh, k) == c(h, k) * c(g, G.multiply(h, k)))) return CocycleViolation{g, h, k};
      }
    }
  }
  return std::nullopt;
}

TwoCocycle coboundaryOf(const OneCochain& a) {
  const auto& G = a.group();
  const std::size_t n = G.order();
  std::vector<RadicalElement> v(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) v[g * n + h] = a(g) * a(h) / a(G.multiply(g, h));
  }
  return TwoCocycle(G, std::move(v));
}

ObstructionPairing::ObstructionPairing(const TwoCocycle& c) : group_(c.group()) {
  const std::size_t n = group_.order();
  values_.resize(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) values_[g * n + h] = c(g, h) / c(h, g);
  }
}

bool ObstructionPairing::isTrivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const RadicalElement& v) { return v.isOne(); });
}

bool ObstructionPairing::isAlternating() const {
  for (std::size_t g = 0; g < group_.order(); ++g) {
    if (!(*this)(g, g).isOne()) return false;
  }
  return true;
}

bool ObstructionPairing::isBimultiplicative() const {
  const std::size_t n = group_.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = group_.multiply(a, b);
      for (std::size_t h = 0; h < n; ++h) {
        if (!((*this)(ab, h) == (*this)(a, h) * (*this)(b, h))) return false;
        if (!((*this)(h, ab) == (*this)(h, a) * (*this)(h, b))) return false;
      }
    }
  }
  return true;
}

namespace {

// Element (d, g) of the extension 1 -> D -> X -> G -> 1 defined by c, with
// (d, g)(d', g') = (d d' c(g, g'), g g').
struct ExtensionElement {
  RadicalElement d;
  std::size_t g;
};

ExtensionElement extMul(const TwoCocycle& c, const ExtensionElement& x, const ExtensionElement& y) {
  return {x.d * y.d * c(x.g, y.g), c.group().multiply(x.g, y.g)};
}

}  // namespace

SplitResult splitCocycle(const TwoCocycle& c) {
  if (auto v = validateCocycle(c)) {
    const auto& G = c.group();
    throw InvalidCocycle("identity fails at (" + G.format(v->g) + ", " + G.format(v->h) + ", " + G.format(v->k) + ")");
  }
  const auto& G = c.group();
  const auto& orders = G.cyclicOrders();

  // Lift each cyclic generator s_i to x_i = (beta_i^-1, s_i) with
  // beta_i = radRoot(prod_k c(s_i, s_i^k), n_i), so that x_i^{n_i} = 1.
  std::vector<ExtensionElement> lifts;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const std::size_t s = G.generator(i);
    RadicalElement product;
    for (long k = 0; k < orders[i]; ++k) product = product * c(s, G.power(s, k));
    const RadicalElement beta = radRoot(product, static_cast<unsigned>(orders[i]));
    lifts.push_back({beta.inverse(), s});
  }

  std::vector<RadicalElement> alpha(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    const GroupElement e = G.element(g);
    ExtensionElement x{RadicalElement(), G.identity()};
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (long k = 0; k < e[i]; ++k) x = extMul(c, x, lifts[i]);
    }
    alpha[g] = x.d.inverse();
  }

  OneCochain a(G, std::move(alpha));
  if (coboundaryOf(a) == c) return {std::move(a), std::nullopt};
  return {std::nullopt, ObstructionPairing(c)};
}

std::vector<OneCochain> twistSplittings(const OneCochain& a) {
  std::vector<OneCochain> out;
  for (const auto& chi : GroupCharacter::all(a.group())) {
    std::vector<RadicalElement> v(a.values().size());
    for (std::size_t g = 0; g < v.size(); ++g) v[g] = a(g) * RadicalElement(chi(g));
    out.emplace_back(a.group(), std::move(v));
  }
  return out;
}

namespace {

// Solves t(g) + t(h) + t(gh) = s(g, h) over F_2 with t(1) = 0.
bool solveSignCochain(const FiniteAbelianGroup& G, const std::vector<std::uint8_t>& s) {
  const std::size_t n = G.order();
  // Unknowns t(0..n-1) plus the right-hand side in the last column.
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint8_t> pin(n + 1, 0);
  pin[G.identity()] = 1;
  rows.push_back(pin);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<std::uint8_t> r(n + 1, 0);
      r[g] ^= 1;
      r[h] ^= 1;
      r[G.multiply(g, h)] ^= 1;
      r[n] = s[g * n + h];
      rows.push_back(std::move(r));
    }
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t r = lead;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[lead]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != lead && rows[i][col] != 0) {
        for (std::size_t k = col; k <= n; ++k) rows[i][k] ^= rows[lead][k];
      }
    }
    ++lead;
  }
  for (std::size_t i = lead; i < rows.size(); ++i) {
    if (rows[i][n] != 0) return false;
  }
  return true;
}

}  // namespace

bool classOrderOverRationals(const TwoCocycle& c, long k) {
  if (k < 1) throw InvalidInput("classOrderOverRationals: k must be positive");
  if (!c.isRational()) throw InvalidInput("classOrderOverRationals needs a rational-valued cocycle");
  if (validateCocycle(c)) throw InvalidInput("classOrderOverRationals needs a valid cocycle");

  const TwoCocycle ck = c.pow(k);
  const auto& G = ck.group();
  const std::size_t n = G.order();

  // Prime exponents: f = v_p(c^k) is a Z-valued cocycle. Over Q the
  // coboundary equation de = f has the unique solution
  // e(g) = (1/|G|) sum_h f(g, h); a rational cochain exists iff it is
  // integral for every p.
  std::set<Prime> primes;
  for (const auto& v : ck.values()) {
    for (const auto& [p, r] : v.exponents()) primes.insert(p);
  }
  const Rational invOrder = Rational(1, static_cast<long>(n));
  for (Prime p : primes) {
    auto f = [&](std::size_t g, std::size_t h) {
      const auto& e = ck(g, h).exponents();
      const auto it = e.find(p);
      return it == e.end() ? Rational(0) : it->second;
    };
    std::vector<Rational> e(n);
    for (std::size_t g = 0; g < n; ++g) {
      Rational sum(0);
      for (std::size_t h = 0; h < n; ++h) sum += f(g, h);
      e[g] = sum * invOrder;
      if (!e[g].isInteger()) return false;
    }
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        if (e[g] + e[h] - e[G.multiply(g, h)] != f(g, h)) return false;
      }
    }
  }

  std::vector<std::uint8_t> signs(n * n);
  for (std::size_t i = 0; i < n * n; ++i) signs[i] = ck.values()[i].torsion().isZero() ? 0 : 1;
  return solveSignCochain(G, signs);
}

}  // namespace qcurve
