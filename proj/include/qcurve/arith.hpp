#pragma once

#include <cstdint>
#include <map>

#include "qcurve/rational.hpp"

namespace qcurve {

using Prime = std::uint64_t;

bool isPrime(std::uint64_t n);

/// Prime factorization by trial division; n >= 1. Intended for the small
/// integers that occur as isogeny degrees and square-class representatives.
std::map<Prime, unsigned> factorize(std::uint64_t n);

/// Converts |value| to uint64, throwing InvalidInput when it does not fit.
std::uint64_t toUint64(const Integer& value);

/// Squarefree part of a nonzero integer, sign included (-12 -> -3).
std::int64_t squarefreePart(std::int64_t n);

bool isPerfectSquare(std::int64_t n);

std::int64_t floorMod(std::int64_t a, std::int64_t m);

}  // namespace qcurve
