#ifndef CYCLERING_DECISION_HPP
#define CYCLERING_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cyclering/cycle_set.hpp"

namespace cyclering {

// Why an equation has no solution. Each value names the violated
// solvability condition of the decision procedure that produced it.
enum class Refutation {
  kNotDivisible,        // coefficient cycle size does not divide the target size
  kDeficientPartFails,  // the deficient prime-power part e does not divide n
  kCoefficientFails,    // coefficient multiplicity m does not divide n
  kLengthNotPrimePower, // a monomial size is not a proper power of the target prime
  kWeightFails,         // n is not a nonnegative combination of admissible weights
};

std::string to_string(Refutation r);

// The two gcd-procedure intermediates of the fast basic-equation decider.
struct DeepIntermediates {
  std::uint64_t pi_f = 0;  // product of target prime powers foreign to the coefficient
  std::uint64_t e = 0;     // product of deficient shared prime powers

  friend bool operator==(const DeepIntermediates&, const DeepIntermediates&) = default;
};

// Verdict plus a checkable certificate. A positive verdict may carry a
// witness W with mul(coefficient, W) == right-hand side; a negative verdict
// names the violated condition.
struct DecisionReport {
  bool solvable = false;
  std::optional<CycleSet> witness;
  std::optional<Refutation> refutation;
  std::optional<DeepIntermediates> intermediates;
  // Number of gcd invocations spent by the decision procedure itself
  // (witness construction not included). Per-invocation, never global.
  std::uint64_t gcd_calls = 0;
};

}  // namespace cyclering

#endif  // CYCLERING_DECISION_HPP
