#pragma once

#include <stdexcept>

namespace scrollbetti {

// Base class for all domain errors raised by this library. Callers that do
// not care about the precise failure can catch this one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// combinatorics
struct NegativeUpperIndex : Error { using Error::Error; };
struct NonpositiveDenominator : Error { using Error::Error; };

// betti_table
struct ColumnMismatch : Error { using Error::Error; };

// module_e
struct InvalidModuleSpec : Error { using Error::Error; };
struct POutOfRange : Error { using Error::Error; };

// scroll divisor classification
struct NotSmoothScroll : Error { using Error::Error; };
struct DegenerateDivisor : Error { using Error::Error; };
struct OutOfProblemScope : Error { using Error::Error; };

// decomposition
struct NoClosedForm : Error { using Error::Error; };
struct UnsupportedCase : Error { using Error::Error; };
struct ROutOfRange : Error { using Error::Error; };

// consistency checks
struct InsufficientBound : Error { using Error::Error; };

}  // namespace scrollbetti
