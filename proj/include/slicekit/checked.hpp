#pragma once
/**
 * @file checked.hpp
 * @brief Overflow-checked 64-bit integer helpers.
 *
 * Every invariant in this library is computed exactly. Rather than silently
 * wrapping, arithmetic that leaves the int64 range throws std::overflow_error.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace slicekit {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// Narrow a 128-bit intermediate back to Int.
inline Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in narrowing");
  return static_cast<Int>(v);
}

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

/// Exact integer square root: returns r with r*r == n, or -1 if n is not a perfect square.
inline Int exact_isqrt(Int n) {
  if (n < 0) return -1;
  // Newton iteration on unsigned values; no floating point involved.
  std::uint64_t x = static_cast<std::uint64_t>(n);
  if (x < 2) return static_cast<Int>(x);
  std::uint64_t r = x, y = (r + 1) / 2;
  while (y < r) {
    r = y;
    y = (r + x / r) / 2;
  }
  return r * r == x ? static_cast<Int>(r) : -1;
}

inline bool is_perfect_square(Int n) { return exact_isqrt(n) >= 0; }

}  // namespace slicekit
