#pragma once

#include <stdexcept>
#include <string>

namespace qcurve {

/// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QCURVE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

// Malformed text or document input.
QCURVE_DEFINE_ERROR(ParseError)
// Structurally invalid argument (wrong group, wrong size, non-prime key, ...).
QCURVE_DEFINE_ERROR(InvalidInput)
// Value leaves the multiquadratic regime.
QCURVE_DEFINE_ERROR(UnsupportedDegree)
QCURVE_DEFINE_ERROR(InvalidCocycle)
QCURVE_DEFINE_ERROR(NotASplitting)
QCURVE_DEFINE_ERROR(NoProjector)
QCURVE_DEFINE_ERROR(InconsistentDescriptor)
QCURVE_DEFINE_ERROR(SplittingObstructed)
QCURVE_DEFINE_ERROR(CompatibilityRequired)
QCURVE_DEFINE_ERROR(ValueOutsideField)
QCURVE_DEFINE_ERROR(NotTotallyReal)

#undef QCURVE_DEFINE_ERROR

}  // namespace qcurve
