#pragma once

#include <cstdint>
#include <concepts>

#include "hatlab/error.hpp"

namespace hatlab::checked {

template <std::integral T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <std::integral T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <std::integral T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <std::integral T>
T square(T a) {
  return mul(a, a);
}

// n(n-1)/2 without intermediate overflow
inline std::int64_t choose2(std::int64_t n) {
  return (n % 2 == 0) ? mul(n / 2, n - 1) : mul(n, (n - 1) / 2);
}

}  // namespace hatlab::checked
