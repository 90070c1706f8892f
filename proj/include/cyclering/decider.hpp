#ifndef CYCLERING_DECIDER_HPP
#define CYCLERING_DECIDER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclering/cycle_set.hpp"
#include "cyclering/decision.hpp"

namespace cyclering {

// Product of the prime-power components of q whose primes do not divide p,
// computed with gcd iterations only (no factorization): replace (p, q) by
// (gcd(p,q), q/gcd(p,q)) until the pair is coprime, then return the q part.
// When non-null, *gcd_counter is incremented once per gcd invocation.
std::uint64_t pi_f(std::uint64_t p, std::uint64_t q, std::uint64_t* gcd_counter = nullptr);

// Product of the prime-power components r^h of p whose prime also divides
// q_prime with a strictly larger exponent there. Requires p | q_prime.
// Computed by repeatedly squaring d = q_prime / p (modulo p) until
// gcd(d, p) stabilizes.
std::uint64_t pi_e(std::uint64_t p, std::uint64_t q_prime,
                   std::uint64_t* gcd_counter = nullptr);

// Decides C^1_p * X = C^n_q in O(log p * log q) gcd work: p must divide q
// and e = pi_e(p, q / pi_f(p, q)) must divide n. The report carries the
// (pi_f, e) intermediates whenever p | q, and on a positive verdict a
// witness (the enumeration order's first solution) provided q and n are
// within the enumeration budgets; verdicts themselves are exact for all
// 64-bit inputs.
DecisionReport deep_decide(std::uint64_t p, std::uint64_t q, std::uint64_t n,
                           bool attach_witness = true);

// Direct evaluation of the solvability characterization over trial-division
// factorizations: p | q, and every prime power r^h of p either appears in q
// with the same exponent or divides n. Test oracle for deep_decide;
// throws budget_error beyond the trial-division cap.
bool theorem_characterization(std::uint64_t p, std::uint64_t q, std::uint64_t n);

// Decides C^m_p * X = C^n_q: solvable iff m | n and C^1_p * X = C^{n/m}_q is
// solvable (the same witness serves both).
DecisionReport decide_scaled(std::uint64_t m, std::uint64_t p, std::uint64_t q,
                             std::uint64_t n, bool attach_witness = true);

// The published coefficient rule for C^m_p * X = C^n_q, kept verbatim as a
// diagnostic: solvable iff (m*q)/p divides n and C^1_p * X = C^{n*p/(m*q)}_q
// is solvable. Disagrees with brute force on e.g. (m,p,q,n) = (2,2,4,4);
// see decide_scaled for the validated rule.
bool decide_scaled_paper_strict(std::uint64_t m, std::uint64_t p, std::uint64_t q,
                                std::uint64_t n);

// Decides C^m_p * X = sum of C^{n_i}_{q_i}: targets with equal q_i are merged
// by summing n_i, then every merged target must be decide_scaled-solvable;
// the witness is the sum of the per-target witnesses. targets are (n_i, q_i).
DecisionReport decide_multi_target(std::uint64_t m, std::uint64_t p,
                                   const std::vector<std::pair<std::uint64_t, std::uint64_t>>& targets,
                                   bool attach_witness = true);

// Necessary condition for sum(C^{m_k}_{p_k}) * X = C^n_q: the total weight
// sum(m_k * p_k) must divide n * q. A false result proves unsolvability; a
// true result proves nothing. monomials are (m_k, p_k).
bool necessary_weight_condition(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
                                std::uint64_t q, std::uint64_t n);

// Necessary condition: gcd(m_1, ..., m_k) must divide n.
bool necessary_gcd_condition(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
                             std::uint64_t n);

// Exact solver for sum(C^{m_i}_{p_i}) * X = C^n_{q_prime^t} with q_prime
// prime and p_i != q_prime^t for all i. The unique solution is
// C^{n/S}_{q_prime^t} with S = sum(m_i * p_i), and it exists iff S divides n
// and every p_i is a power q_prime^{t_i} with t_i < t. Throws domain_error
// when q_prime is not prime or some p_i equals q_prime^t.
std::optional<CycleSet> solve_prime_power(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q_prime, std::uint64_t t, std::uint64_t n);

// solve_prime_power as a report, with the failed condition named.
DecisionReport decide_prime_power(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q_prime, std::uint64_t t, std::uint64_t n);

}  // namespace cyclering

#endif  // CYCLERING_DECIDER_HPP
