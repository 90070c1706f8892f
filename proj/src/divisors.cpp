#include "cyclering/divisors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "cyclering/arith.hpp"

namespace cyclering {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw domain_error("divisors_of: input must be positive");
  if (n > kDivisorScanInputCap) {
    throw budget_error("divisor listing: input " + std::to_string(n) +
                       " exceeds the scan cap of " + std::to_string(kDivisorScanInputCap));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FeasibleDivisorSet feasible_divisors(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw domain_error("feasible_divisors: p and q must be positive");
  if (q % p != 0) throw domain_error("feasible_divisors: p must divide q");
  const std::uint64_t ratio = q / p;
  FeasibleDivisorSet out;
  out.p = p;
  out.q = q;
  for (std::uint64_t r : divisors_of(q)) {
    if (r > p) continue;  // derived length would exceed q
    const std::uint64_t derived = ratio * r;
    const std::uint64_t g = gcd_u64(p, derived);
    if (g != r) continue;
    if (static_cast<unsigned __int128>(p / g) * derived != q) continue;  // lcm check
    out.divisors.push_back(r);
    out.derived_lengths.push_back(derived);
  }
  return out;
}

SemigroupMembership::SemigroupMembership(std::vector<std::uint64_t> generators,
                                         std::uint64_t table_budget) {
  for (std::uint64_t g : generators) {
    if (g == 0) throw domain_error("semigroup generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
  if (generators_.empty()) return;

  scale_ = generators_.front();
  for (std::uint64_t g : generators_) scale_ = gcd_u64(scale_, g);
  modulus_ = generators_.front() / scale_;

  if (modulus_ > table_budget) {
    throw budget_error("semigroup residue table: modulus " + std::to_string(modulus_) +
                       " exceeds the table budget of " + std::to_string(table_budget));
  }
  const std::uint64_t max_gen = generators_.back() / scale_;
  if (modulus_ > 1 && max_gen > ~std::uint64_t{0} / modulus_) {
    throw budget_error("semigroup residue table: distance values would exceed 64 bits");
  }

  least_.assign(modulus_, kUnreachable);
  via_.assign(modulus_, 0);
  least_[0] = 0;
  using Item = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    const auto [value, residue] = heap.top();
    heap.pop();
    if (value != least_[residue]) continue;
    for (std::uint32_t gi = 0; gi < generators_.size(); ++gi) {
      const std::uint64_t g = generators_[gi] / scale_;
      if (g % modulus_ == 0) continue;  // never changes the residue
      const std::uint64_t to = (residue + g) % modulus_;
      const std::uint64_t candidate = value + g;
      if (candidate < least_[to]) {
        least_[to] = candidate;
        via_[to] = gi;
        heap.emplace(candidate, to);
      }
    }
  }
}

bool SemigroupMembership::contains(std::uint64_t n) const {
  if (n == 0) return true;
  if (generators_.empty()) return false;
  if (n % scale_ != 0) return false;
  const std::uint64_t scaled = n / scale_;
  return least_[scaled % modulus_] <= scaled;
}

std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
SemigroupMembership::represent(std::uint64_t n) const {
  if (n == 0) return std::vector<std::pair<std::uint64_t, std::uint64_t>>{};
  if (!contains(n)) return std::nullopt;
  const std::uint64_t scaled = n / scale_;
  std::map<std::uint64_t, std::uint64_t> counts;  // generator value -> count
  std::uint64_t residue = scaled % modulus_;
  std::uint64_t value = least_[residue];
  const std::uint64_t leftover = scaled - value;
  if (leftover > 0) counts[generators_.front()] += leftover / modulus_;
  while (value > 0) {
    const std::uint32_t gi = via_[residue];
    const std::uint64_t g = generators_[gi] / scale_;
    counts[generators_[gi]] += 1;
    value -= g;
    residue = (residue + modulus_ - g % modulus_) % modulus_;
  }
  return std::vector<std::pair<std::uint64_t, std::uint64_t>>(counts.begin(), counts.end());
}

bool representable(const std::vector<std::uint64_t>& divisors, std::uint64_t n) {
  return SemigroupMembership(divisors).contains(n);
}

bool decide_by_enumeration(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (p == 0 || q == 0 || n == 0) {
    throw domain_error("decide_by_enumeration: p, q, n must be positive");
  }
  if (q % p != 0) return false;
  const FeasibleDivisorSet fd = feasible_divisors(p, q);
  return SemigroupMembership(fd.divisors).contains(n);
}

SolutionStream::SolutionStream(std::uint64_t p, std::uint64_t q, std::uint64_t n)
    : p_(p), q_(q), n_(n) {
  if (p == 0 || q == 0 || n == 0) {
    throw domain_error("enumerate_solutions: p, q, n must be positive");
  }
  if (q % p != 0) {
    done_ = true;  // no solutions at all
    return;
  }
  FeasibleDivisorSet fd = feasible_divisors(p, q);
  divisors_ = std::move(fd.divisors);
  derived_lengths_ = std::move(fd.derived_lengths);
  if (divisors_.empty()) {
    done_ = true;
    return;
  }
  if (n / divisors_.back() > kCountingBudget) {
    throw budget_error("enumerate_solutions: solutions may contain up to " +
                       std::to_string(n / divisors_.back()) +
                       " cycles, beyond the enumeration budget");
  }
  stack_.reserve(divisors_.size());
}

CycleSet SolutionStream::assemble() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const Frame& f : stack_) {
    if (f.y > 0) pairs.emplace_back(derived_lengths_[f.index], f.y);
  }
  return CycleSet::from_pairs(pairs);
}

bool SolutionStream::next(CycleSet& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    stack_.push_back({0, n_, 0, false});
  }
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const std::uint64_t d = divisors_[f.index];
    if (f.index + 1 == divisors_.size()) {
      // Deepest level: the count is forced.
      if (!f.entered && f.remaining % d == 0) {
        f.entered = true;
        f.y = f.remaining / d;
        out = assemble();
#ifndef NDEBUG
        assert(mul(CycleSet::cycles(1, p_), out) == CycleSet::cycles(n_, q_));
#endif
        return true;
      }
      stack_.pop_back();
      continue;
    }
    if (!f.entered) {
      f.entered = true;
      f.y = f.remaining / d;
    } else if (f.y == 0) {
      stack_.pop_back();
      continue;
    } else {
      --f.y;
    }
    stack_.push_back({f.index + 1, f.remaining - f.y * d, 0, false});
  }
  done_ = true;
  return false;
}

SolutionStream enumerate_solutions(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  return SolutionStream(p, q, n);
}

std::vector<CycleSet> enumerate_solutions(std::uint64_t p, std::uint64_t q,
                                          std::uint64_t n, std::uint64_t limit) {
  SolutionStream stream(p, q, n);
  std::vector<CycleSet> out;
  CycleSet s;
  while (out.size() < limit && stream.next(s)) out.push_back(s);
  return out;
}

std::optional<CycleSet> first_solution(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  SolutionStream stream(p, q, n);
  CycleSet s;
  if (stream.next(s)) return s;
  return std::nullopt;
}

std::uint64_t count_solutions(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (p == 0 || q == 0 || n == 0) {
    throw domain_error("count_solutions: p, q, n must be positive");
  }
  if (n > kCountingBudget) {
    throw budget_error("count_solutions: n exceeds the counting budget of " +
                       std::to_string(kCountingBudget));
  }
  if (q % p != 0) return 0;
  const FeasibleDivisorSet fd = feasible_divisors(p, q);
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::uint64_t d : fd.divisors) {
    for (std::uint64_t s = d; s <= n; ++s) {
      if (ways[s - d] != 0) ways[s] = checked_add(ways[s], ways[s - d]);
    }
  }
  return ways[n];
}

DecisionReport decide_sum_lhs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials,
    std::uint64_t q, std::uint64_t n) {
  if (monomials.empty()) throw domain_error("decide_sum_lhs: no monomials");
  for (const auto& [m, p] : monomials) {
    if (m == 0 || p == 0) throw domain_error("decide_sum_lhs: monomials must be positive");
  }
  if (q == 0 || n == 0) throw domain_error("decide_sum_lhs: q and n must be positive");

  // A solution cycle of size t must turn into size-q cycles under every
  // monomial, so lcm(p_i, t) == q for all i; it then contributes
  // sum(m_i * gcd(p_i, t)) cycles of size q.
  std::map<std::uint64_t, std::uint64_t> weight_to_size;  // weight -> largest t
  for (std::uint64_t t : divisors_of(q)) {
    bool admissible = true;
    std::uint64_t weight = 0;
    for (const auto& [m, p] : monomials) {
      const std::uint64_t g = gcd_u64(p, t);
      if (static_cast<unsigned __int128>(p / g) * t != q) {
        admissible = false;
        break;
      }
      weight = checked_add(weight, checked_mul(m, g));
    }
    if (admissible) weight_to_size.emplace(weight, t);  // keeps the first (largest) t
  }

  DecisionReport report;
  std::vector<std::uint64_t> weights;
  weights.reserve(weight_to_size.size());
  for (const auto& [w, t] : weight_to_size) weights.push_back(w);
  const SemigroupMembership membership(weights);
  const auto representation = membership.represent(n);
  if (!representation) {
    report.solvable = false;
    report.refutation = Refutation::kWeightFails;
    return report;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& [weight, count] : *representation) {
    pairs.emplace_back(weight_to_size.at(weight), count);
  }
  report.solvable = true;
  report.witness = CycleSet::from_pairs(pairs);
  return report;
}

}  // namespace cyclering
