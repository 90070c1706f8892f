#include "cyclering/decider.hpp"

#include <algorithm>
#include <map>

#include "cyclering/arith.hpp"
#include "cyclering/divisors.hpp"
#include "cyclering/factorization.hpp"

namespace cyclering {

std::string to_string(Refutation r) {
  switch (r) {
    case Refutation::kNotDivisible: return "NotDivisible";
    case Refutation::kDeficientPartFails: return "DeficientPartFails";
    case Refutation::kCoefficientFails: return "CoefficientFails";
    case Refutation::kLengthNotPrimePower: return "LengthNotPrimePower";
    case Refutation::kWeightFails: return "WeightFails";
  }
  return "Unknown";
}

namespace {

std::uint64_t counted_gcd(std::uint64_t a, std::uint64_t b, std::uint64_t* counter) {
  if (counter) ++*counter;
  return gcd_u64(a, b);
}

}  // namespace

std::uint64_t pi_f(std::uint64_t p, std::uint64_t q, std::uint64_t* gcd_counter) {
  if (p == 0 || q == 0) throw domain_error("pi_f: inputs must be positive");
  for (;;) {
    const std::uint64_t g = counted_gcd(p, q, gcd_counter);
    if (g == 1) return q;
    p = g;
    q /= g;
  }
}

std::uint64_t pi_e(std::uint64_t p, std::uint64_t q_prime, std::uint64_t* gcd_counter) {
  if (p == 0 || q_prime == 0) throw domain_error("pi_e: inputs must be positive");
  if (q_prime % p != 0) throw domain_error("pi_e: p must divide q_prime");
  // Square d modulo p: gcd(d^k, p) == gcd(d^k mod p, p), and each squaring
  // doubles all prime exponents, so the gcd chain p-exponents stabilize in
  // O(log log p) steps.
  std::uint64_t d = (q_prime / p) % p;
  std::uint64_t g = counted_gcd(d, p, gcd_counter);
  for (;;) {
    d = mulmod(d, d, p);
    const std::uint64_t next = counted_gcd(d, p, gcd_counter);
    if (next == g) return g;
    g = next;
  }
}

DecisionReport deep_decide(std::uint64_t p, std::uint64_t q, std::uint64_t n,
                           bool attach_witness) {
  if (p == 0 || q == 0 || n == 0) {
    throw domain_error("deep_decide: p, q, n must be positive");
  }
  DecisionReport report;
  if (q % p != 0) {
    report.solvable = false;
    report.refutation = Refutation::kNotDivisible;
    return report;
  }
  const std::uint64_t f = pi_f(p, q, &report.gcd_calls);
  const std::uint64_t e = pi_e(p, q / f, &report.gcd_calls);
  report.intermediates = DeepIntermediates{f, e};
  if (n % e != 0) {
    report.solvable = false;
    report.refutation = Refutation::kDeficientPartFails;
    return report;
  }
  report.solvable = true;
  if (attach_witness && q <= kDivisorScanInputCap && n <= kCountingBudget) {
    report.witness = first_solution(p, q, n);
  }
  return report;
}

bool theorem_characterization(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (p == 0 || q == 0 || n == 0) {
    throw domain_error("theorem_characterization: p, q, n must be positive");
  }
  if (q % p != 0) return false;
  const PrimePowerFactorization fp = factorize(p);
  const PrimePowerFactorization fq = factorize(q);
  for (const PrimePower& pp : fp.factors) {
    if (fq.exponent_of(pp.prime) == pp.exponent) continue;  // full component of q
    if (n % pp.value() != 0) return false;
  }
  return true;
}

DecisionReport decide_scaled(std::uint64_t m, std::uint64_t p, std::uint64_t q,
                             std::uint64_t n, bool attach_witness) {
  if (m == 0 || p == 0 || q == 0 || n == 0) {
    throw domain_error("decide_scaled: m, p, q, n must be positive");
  }
  if (n % m != 0) {
    DecisionReport report;
    report.solvable = false;
    report.refutation = Refutation::kCoefficientFails;
    return report;
  }
  return deep_decide(p, q, n / m, attach_witness);
}

bool decide_scaled_paper_strict(std::uint64_t m, std::uint64_t p, std::uint64_t q,
                                std::uint64_t n) {
  if (m == 0 || p == 0 || q == 0 || n == 0) {
    throw domain_error("decide_scaled_paper_strict: inputs must be positive");
  }
  const std::uint64_t mq = checked_mul(m, q);
  if (mq % p != 0) return false;
  const std::uint64_t c = mq / p;  // the published divisor (m*q)/p
  if (n % c != 0) return false;
  return deep_decide(p, q, n / c, /*attach_witness=*/false).solvable;
}

DecisionReport decide_multi_target(
    std::uint64_t m, std::uint64_t p,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& targets,
    bool attach_witness) {
  if (targets.empty()) throw domain_error("decide_multi_target: no targets");
  std::map<std::uint64_t, std::uint64_t> merged;  // q_i -> total n_i
  for (const auto& [n_i, q_i] : targets) {
    if (n_i == 0 || q_i == 0) {
      throw domain_error("decide_multi_target: targets must be positive");
    }
    merged[q_i] = checked_add(merged[q_i], n_i);
  }
  DecisionReport report;
  report.solvable = true;
  CycleSet witness;
  for (const auto& [q_i, n_i] : merged) {
    DecisionReport part = decide_scaled(m, p, q_i, n_i, attach_witness);
    report.gcd_calls += part.gcd_calls;
    if (!part.solvable) {
      report.solvable = false;
      report.refutation = part.refutation;
      report.intermediates = part.intermediates;
      return report;
    }
    if (attach_witness && part.witness) witness = add(witness, *part.witness);
  }
  if (attach_witness) report.witness = witness;
  return report;
}

bool necessary_weight_condition(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q, std::uint64_t n) {
  if (monomials.empty()) throw domain_error("necessary_weight_condition: no monomials");
  std::uint64_t total = 0;
  for (const auto& [m, p] : monomials) {
    total = checked_add(total, checked_mul(m, p));
  }
  const unsigned __int128 nq = static_cast<unsigned __int128>(n) * q;
  return nq % total == 0;
}

bool necessary_gcd_condition(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t n) {
  if (monomials.empty()) throw domain_error("necessary_gcd_condition: no monomials");
  std::uint64_t g = 0;
  for (const auto& [m, p] : monomials) g = gcd_u64(g, m);
  return g != 0 && n % g == 0;
}

DecisionReport decide_prime_power(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q_prime, std::uint64_t t, std::uint64_t n) {
  if (monomials.empty()) throw domain_error("solve_prime_power: no monomials");
  if (t == 0 || n == 0) throw domain_error("solve_prime_power: t and n must be positive");
  if (!is_prime(q_prime)) {
    throw domain_error("solve_prime_power: " + std::to_string(q_prime) + " is not prime");
  }
  std::uint64_t target_length = 1;  // q_prime^t
  for (std::uint64_t i = 0; i < t; ++i) target_length = checked_mul(target_length, q_prime);

  DecisionReport report;
  std::uint64_t total_weight = 0;
  for (const auto& [m, p] : monomials) {
    if (m == 0 || p == 0) throw domain_error("solve_prime_power: monomials must be positive");
    if (p == target_length) {
      throw domain_error("solve_prime_power: monomial size equals the target prime power");
    }
    // p must be q_prime^{t_i} with t_i < t, i.e. a divisor of the target.
    std::uint64_t rest = p;
    while (rest % q_prime == 0) rest /= q_prime;
    if (rest != 1 || p > target_length) {
      report.solvable = false;
      report.refutation = Refutation::kLengthNotPrimePower;
      return report;
    }
    total_weight = checked_add(total_weight, checked_mul(m, p));
  }
  if (n % total_weight != 0) {
    report.solvable = false;
    report.refutation = Refutation::kWeightFails;
    return report;
  }
  report.solvable = true;
  report.witness = CycleSet::cycles(n / total_weight, target_length);
  return report;
}

std::optional<CycleSet> solve_prime_power(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q_prime, std::uint64_t t, std::uint64_t n) {
  DecisionReport report = decide_prime_power(monomials, q_prime, t, n);
  if (!report.solvable) return std::nullopt;
  return std::move(report.witness);
}

}  // namespace cyclering
