#ifndef CYCLERING_ARITH_HPP
#define CYCLERING_ARITH_HPP

#include <cstdint>
#include <numeric>

#include "cyclering/errors.hpp"

namespace cyclering {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw overflow_error("unsigned 64-bit addition overflow");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw overflow_error("unsigned 64-bit multiplication overflow");
  }
  return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

// lcm(a, b) for positive a, b; overflow-checked.
inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

// (a * b) mod m without overflow; m > 0.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// (base ^ exp) mod m; m > 0.
inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace cyclering

#endif  // CYCLERING_ARITH_HPP
