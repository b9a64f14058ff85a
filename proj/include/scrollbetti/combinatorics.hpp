#pragma once

#include <string>

#include <scrollbetti/errors.hpp>
#include <scrollbetti/integers.hpp>

namespace scrollbetti {

// Exact binomial coefficient C(n, k). Out-of-range lower index (k < 0 or
// k > n) gives 0, so sums over binomials can run over formal index ranges
// without clamping. A negative upper index is rejected: every formula in
// this library expects n >= 0 and a negative n signals a caller bug.
inline Int binom(long n, long k) {
  if (n < 0)
    throw NegativeUpperIndex("binom: upper index must be nonnegative, got n=" +
                             std::to_string(n));
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

// ceil(num / den) for den > 0, exact for negative numerators as well.
// q = ceil_div(n, d) is the unique integer with (q-1)*d < n <= q*d.
inline long ceil_div(long num, long den) {
  if (den <= 0)
    throw NonpositiveDenominator(
        "ceil_div: denominator must be positive, got " + std::to_string(den));
  long q = num / den;  // C++ division truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

}  // namespace scrollbetti
