#include "qcurve/group.hpp"

#include <numeric>

#include "qcurve/arith.hpp"
#include "qcurve/errors.hpp"

namespace qcurve {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> cyclicOrders) : orders_(std::move(cyclicOrders)) {
  for (long n : orders_) {
    if (n < 2) throw InvalidInput("cyclic orders must be at least 2");
    order_ *= static_cast<std::size_t>(n);
    if (order_ > 4096) throw InvalidInput("group order exceeds 4096");
  }
}

long FiniteAbelianGroup::exponent() const {
  long e = 1;
  for (long n : orders_) e = std::lcm(e, n);
  return e;
}

std::size_t FiniteAbelianGroup::index(const GroupElement& g) const {
  if (g.size() != orders_.size()) {
    throw InvalidInput("group element has " + std::to_string(g.size()) + " coordinates, expected " +
                       std::to_string(orders_.size()));
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(floorMod(g[i], orders_[i]));
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= order_) throw InvalidInput("group element index out of range");
  GroupElement g(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    g[i] = static_cast<long>(index % n);
    index /= n;
  }
  return g;
}

std::size_t FiniteAbelianGroup::generator(std::size_t factor) const {
  GroupElement g(orders_.size(), 0);
  g.at(factor) = 1;
  return index(g);
}

std::size_t FiniteAbelianGroup::multiply(std::size_t a, std::size_t b) const {
  GroupElement x = element(a);
  const GroupElement y = element(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

std::size_t FiniteAbelianGroup::inverse(std::size_t a) const {
  GroupElement x = element(a);
  for (auto& v : x) v = -v;
  return index(x);
}

std::size_t FiniteAbelianGroup::power(std::size_t a, long k) const {
  GroupElement x = element(a);
  for (auto& v : x) v *= k;
  return index(x);
}

std::string FiniteAbelianGroup::format(std::size_t index) const {
  const GroupElement g = element(index);
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace qcurve
