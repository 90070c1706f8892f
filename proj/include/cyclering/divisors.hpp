#ifndef CYCLERING_DIVISORS_HPP
#define CYCLERING_DIVISORS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclering/cycle_set.hpp"
#include "cyclering/decision.hpp"

namespace cyclering {

// Largest q (and largest sum-equation target) whose divisors we are willing
// to list by trial division.
inline constexpr std::uint64_t kDivisorScanInputCap = 1'000'000'000'000ull;

// Cap on the restricted-partition counting table (and on enumeration's n).
inline constexpr std::uint64_t kCountingBudget = 10'000'000;

// All divisors of n, decreasing. Throws budget_error for n > kDivisorScanInputCap.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// The feasible divisors of q for the equation C^1_p * X = C^n_q: those
// r | q for which one solution cycle of size (q/p)*r contributes exactly r
// cycles of size q when multiplied by C^1_p, i.e. gcd(p, (q/p)*r) == r and
// lcm(p, (q/p)*r) == q.
struct FeasibleDivisorSet {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> divisors;         // strictly decreasing
  std::vector<std::uint64_t> derived_lengths;  // (q/p) * r, parallel to divisors
};

// Requires p | q. Throws budget_error beyond the divisor-scan cap.
FeasibleDivisorSet feasible_divisors(std::uint64_t p, std::uint64_t q);

// Membership (and certificates) for the numerical semigroup generated by a
// fixed set of positive integers. Built once, then each query costs one
// table lookup, so the queried value may be astronomically large.
//
// The table is a shortest-path array over residues modulo the smallest
// generator (after dividing out the common gcd).
class SemigroupMembership {
 public:
  // generators may be in any order; values must be positive.
  explicit SemigroupMembership(std::vector<std::uint64_t> generators,
                               std::uint64_t table_budget = kResidueTableBudget);

  // Is n a nonnegative integer combination of the generators?
  // An empty generator set represents only 0.
  bool contains(std::uint64_t n) const;

  // One combination with sum n: (generator, count) pairs, counts positive.
  std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> represent(
      std::uint64_t n) const;

  static constexpr std::uint64_t kResidueTableBudget = 1u << 24;

 private:
  std::vector<std::uint64_t> generators_;  // original values, increasing
  std::uint64_t scale_ = 1;                // gcd of all generators
  std::uint64_t modulus_ = 0;              // min generator / scale
  static constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};
  std::vector<std::uint64_t> least_;       // least representable value per residue
  std::vector<std::uint32_t> via_;         // generator index used to reach it
};

bool representable(const std::vector<std::uint64_t>& divisors, std::uint64_t n);

// Exact decision for C^1_p * X = C^n_q through feasible divisors and
// semigroup membership. Independent of the gcd-based decider.
bool decide_by_enumeration(std::uint64_t p, std::uint64_t q, std::uint64_t n);

// Lazy stream over all solutions of C^1_p * X = C^n_q, each exactly once,
// in lexicographically decreasing order of the non-increasing feasible-
// divisor sequence. Consuming k solutions costs work proportional to the
// search for k, independent of the total count.
class SolutionStream {
 public:
  SolutionStream(std::uint64_t p, std::uint64_t q, std::uint64_t n);

  // Advances to the next solution; false when exhausted.
  bool next(CycleSet& out);

 private:
  std::vector<std::uint64_t> divisors_;         // decreasing
  std::vector<std::uint64_t> derived_lengths_;  // parallel
  std::uint64_t p_ = 0, q_ = 0, n_ = 0;
  struct Frame {
    std::size_t index;       // position in divisors_
    std::uint64_t remaining; // sum still to be covered before this choice
    std::uint64_t y;         // current count for divisors_[index]
    bool entered;            // y initialized to its maximum yet?
  };
  std::vector<Frame> stack_;
  bool started_ = false;
  bool done_ = false;

  CycleSet assemble() const;
};

SolutionStream enumerate_solutions(std::uint64_t p, std::uint64_t q, std::uint64_t n);

// Up to `limit` solutions, in stream order.
std::vector<CycleSet> enumerate_solutions(std::uint64_t p, std::uint64_t q,
                                          std::uint64_t n, std::uint64_t limit);

// The first solution in stream order, if any.
std::optional<CycleSet> first_solution(std::uint64_t p, std::uint64_t q, std::uint64_t n);

// Number of solutions of C^1_p * X = C^n_q, by restricted-partition DP over
// the feasible divisors. Throws budget_error for n > kCountingBudget,
// overflow_error if the count exceeds 64 bits.
std::uint64_t count_solutions(std::uint64_t p, std::uint64_t q, std::uint64_t n);

// Exact decision with witness for sum(C^{m_i}_{p_i}) * X = C^n_q.
// Admissible solution-cycle sizes are the divisors t of q with
// lcm(p_i, t) == q for every monomial; a cycle of size t contributes weight
// sum(m_i * gcd(p_i, t)) to n, and the equation is solvable iff n is a
// nonnegative combination of those weights. monomials are (m_i, p_i).
DecisionReport decide_sum_lhs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
                              std::uint64_t q, std::uint64_t n);

}  // namespace cyclering

#endif  // CYCLERING_DIVISORS_HPP
