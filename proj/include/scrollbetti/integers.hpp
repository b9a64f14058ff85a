#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace scrollbetti {

// Exact signed integer used for every table entry, binomial coefficient and
// Hilbert function value. Arbitrary precision keeps the library exact at any
// ambient dimension.
using Int = mpz_class;

// The value as int64_t when it fits, otherwise nullopt.
inline std::optional<std::int64_t> to_int64(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return std::nullopt;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace scrollbetti
