#pragma once

#include <cstdint>
#include <stdexcept>

namespace grassflop {

using mult_t = std::int64_t;

inline mult_t checked_add(mult_t a, mult_t b) {
  mult_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow in addition");
  return r;
}

inline mult_t checked_mul(mult_t a, mult_t b) {
  mult_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow in multiplication");
  return r;
}

inline mult_t checked_neg(mult_t a) { return checked_mul(a, -1); }

// Binomial coefficient, zero outside 0 <= k <= n.
inline mult_t binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<mult_t>(r);
}

}  // namespace grassflop
