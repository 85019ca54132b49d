#include "qcurve/arith.hpp"

#include <limits>

#include "qcurve/errors.hpp"

namespace qcurve {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < (std::uint64_t{1} << 32)) {
    for (std::uint64_t d = 2; d <= n / d; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }
  Integer z(std::to_string(n), 10);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::map<Prime, unsigned> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  std::map<Prime, unsigned> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::uint64_t toUint64(const Integer& value) {
  Integer a = abs(value);
  if (a > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max()), 10)) {
    throw InvalidInput("integer too large: " + value.get_str());
  }
  return std::stoull(a.get_str());
}

std::int64_t squarefreePart(std::int64_t n) {
  if (n == 0) throw InvalidInput("squarefree part of zero");
  std::int64_t result = n < 0 ? -1 : 1;
  const auto magnitude = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  for (const auto& [p, e] : factorize(magnitude)) {
    if (e % 2 == 1) result *= static_cast<std::int64_t>(p);
  }
  return result;
}

bool isPerfectSquare(std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  return squarefreePart(n) == 1;
}

std::int64_t floorMod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace qcurve
