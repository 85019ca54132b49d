#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qcurve {

/// Exponent tuple of an element of a product of cyclic groups.
using GroupElement = std::vector<long>;

/// Z/n_1 x ... x Z/n_r. Elements are addressed by a dense index in
/// lexicographic order of their exponent tuples (last coordinate fastest);
/// index 0 is the identity.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<long> cyclicOrders);

  const std::vector<long>& cyclicOrders() const { return orders_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return orders_.size(); }
  bool isCyclic() const { return orders_.size() <= 1; }
  /// Least common multiple of the cyclic orders.
  long exponent() const;

  std::size_t identity() const { return 0; }
  /// Throws InvalidInput when the tuple has the wrong length; entries are
  /// reduced modulo the orders.
  std::size_t index(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  /// Index of the generator of the i-th cyclic factor.
  std::size_t generator(std::size_t factor) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t power(std::size_t a, long k) const;

  std::string format(std::size_t index) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<long> orders_;
  std::size_t order_ = 1;
};

}  // namespace qcurve
