#ifndef CYCLERING_TESTS_SUPPORT_HPP
#define CYCLERING_TESTS_SUPPORT_HPP

// Test-only helpers and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: the
// membership oracle is a direct table DP, the equation oracles search over
// candidate solutions instead of reusing the deciders' reductions, and the
// reference prime-power products come from trial-division factorizations.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cyclering/cycle_set.hpp"
#include "cyclering/factorization.hpp"

namespace cyclering::testing {

inline CycleSet C(std::uint64_t count, std::uint64_t length) {
  return CycleSet::cycles(count, length);
}

struct RandomCycleSetParams {
  std::uint64_t max_length = 12;
  std::uint64_t max_count = 5;
  int max_entries = 6;
  bool allow_empty = true;
};

inline CycleSet random_cycle_set(std::mt19937_64& rng, const RandomCycleSetParams& params = {}) {
  std::uniform_int_distribution<int> entries(params.allow_empty ? 0 : 1, params.max_entries);
  std::uniform_int_distribution<std::uint64_t> length(1, params.max_length);
  std::uniform_int_distribution<std::uint64_t> count(1, params.max_count);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  const int k = entries(rng);
  for (int i = 0; i < k; ++i) raw.emplace_back(length(rng), count(rng));
  return CycleSet::from_pairs(raw);
}

// Direct dynamic program: which sums <= limit are nonnegative integer
// combinations of the generators.
inline std::vector<bool> reachable_sums(const std::vector<std::uint64_t>& generators,
                                        std::uint64_t limit) {
  std::vector<bool> reach(limit + 1, false);
  reach[0] = true;
  for (std::uint64_t g : generators) {
    if (g == 0 || g > limit) continue;
    for (std::uint64_t s = g; s <= limit; ++s) {
      if (reach[s - g]) reach[s] = true;
    }
  }
  return reach;
}

inline bool representable_direct(const std::vector<std::uint64_t>& generators,
                                 std::uint64_t n) {
  return reachable_sums(generators, n)[n];
}

// Exhaustive decision of C^m_p * X = C^n_q by searching over candidate
// solutions: a solution may only contain cycles whose size t turns into
// size-q cycles (lcm(p, t) == q), and one such cycle contributes
// m * gcd(p, t) target cycles. Desk scale only.
inline bool brute_force_scaled(std::uint64_t m, std::uint64_t p, std::uint64_t q,
                               std::uint64_t n) {
  std::vector<std::uint64_t> weights;
  for (std::uint64_t t = 1; t <= q; ++t) {
    if (q % t != 0) continue;
    const std::uint64_t g = std::gcd(p, t);
    if ((p / g) * t != q) continue;  // lcm(p, t) != q
    weights.push_back(m * g);
  }
  return representable_direct(weights, n);
}

// Same idea for a sum-of-monomials coefficient: a candidate cycle size t
// must satisfy lcm(p_i, t) == q for every monomial and then weighs
// sum(m_i * gcd(p_i, t)).
inline bool brute_force_sum_lhs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials, std::uint64_t q,
    std::uint64_t n) {
  std::vector<std::uint64_t> weights;
  for (std::uint64_t t = 1; t <= q; ++t) {
    if (q % t != 0) continue;
    std::uint64_t weight = 0;
    bool admissible = true;
    for (const auto& [m, p] : monomials) {
      const std::uint64_t g = std::gcd(p, t);
      if ((p / g) * t != q) {
        admissible = false;
        break;
      }
      weight += m * g;
    }
    if (admissible) weights.push_back(weight);
  }
  return representable_direct(weights, n);
}

// Reference prime-power products straight from the factorizations.
inline std::uint64_t pi_f_reference(std::uint64_t p, std::uint64_t q) {
  std::uint64_t result = 1;
  const PrimePowerFactorization fp = factorize(p);
  for (const PrimePower& f : factorize(q).factors) {
    if (!fp.contains_prime(f.prime)) result *= f.value();
  }
  return result;
}

inline std::uint64_t pi_e_reference(std::uint64_t p, std::uint64_t q_prime) {
  std::uint64_t result = 1;
  const PrimePowerFactorization fq = factorize(q_prime);
  for (const PrimePower& f : factorize(p).factors) {
    const std::uint32_t exponent_in_q = fq.exponent_of(f.prime);
    if (exponent_in_q > f.exponent) result *= f.value();
  }
  return result;
}

}  // namespace cyclering::testing

#endif  // CYCLERING_TESTS_SUPPORT_HPP
