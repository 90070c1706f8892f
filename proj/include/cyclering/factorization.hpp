#ifndef CYCLERING_FACTORIZATION_HPP
#define CYCLERING_FACTORIZATION_HPP

#include <cstdint>
#include <vector>

#include "cyclering/errors.hpp"

namespace cyclering {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  std::uint64_t value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power factorization with strictly increasing primes.
// factorize(1) has no factors.
struct PrimePowerFactorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const;
  bool contains_prime(std::uint64_t prime) const;
  // Exponent of `prime`, 0 when absent.
  std::uint32_t exponent_of(std::uint64_t prime) const;

  friend bool operator==(const PrimePowerFactorization&,
                         const PrimePowerFactorization&) = default;
};

inline constexpr std::uint64_t kTrialDivisionIterationBudget = 1'000'000;

// Trial-division factorization. Spends at most
// kTrialDivisionIterationBudget candidate divisors (enough for any n up to
// 10^12) and throws budget_error beyond that. n must be positive.
PrimePowerFactorization factorize(std::uint64_t n);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace cyclering

#endif  // CYCLERING_FACTORIZATION_HPP
