#include "cyclering/decider.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "cyclering/divisors.hpp"
#include "cyclering/errors.hpp"
#include "support.hpp"

using namespace cyclering;
using cyclering::testing::C;

namespace {

CycleSet coefficient_of(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& monomials) {
  CycleSet coeff;
  for (const auto& [m, p] : monomials) coeff = add(coeff, C(m, p));
  return coeff;
}

}  // namespace

TEST_CASE("pi_f on the worked instance and corner cases") {
  CHECK(pi_f(8400, 8316000) == 11);
  CHECK(pi_f(3, 11) == 11);
  CHECK(pi_f(6, 6) == cyclering::testing::pi_f_reference(6, 6));
  CHECK(pi_f(6, 6) == 1);
  CHECK(pi_f(1, 12) == 12);
  CHECK_THROWS_AS(pi_f(0, 3), domain_error);
}

TEST_CASE("pi_f matches the factorization route and its divisibility laws") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::uint64_t> dist(1, 100'000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t p = dist(rng);
    const std::uint64_t q = dist(rng);
    const std::uint64_t f = pi_f(p, q);
    CAPTURE(p);
    CAPTURE(q);
    REQUIRE(f == cyclering::testing::pi_f_reference(p, q));
    REQUIRE(q % f == 0);
    REQUIRE(std::gcd(f, p) == 1);
  }
}

TEST_CASE("pi_e on the worked instance and corner cases") {
  CHECK(pi_e(8400, 756000) == 1200);
  CHECK(pi_e(17, 17) == 1);
  CHECK(pi_e(1, 1) == 1);
  CHECK(pi_e(4, 8) == 4);
  CHECK(pi_e(4, 8) == cyclering::testing::pi_e_reference(4, 8));
  CHECK_THROWS_AS(pi_e(4, 9), domain_error);
}

TEST_CASE("pi_e matches the factorization route and divides p") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> dist(1, 3000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t p = dist(rng);
    const std::uint64_t multiplier = dist(rng);
    const std::uint64_t q_prime = p * multiplier;
    const std::uint64_t e = pi_e(p, q_prime);
    CAPTURE(p);
    CAPTURE(q_prime);
    REQUIRE(e == cyclering::testing::pi_e_reference(p, q_prime));
    REQUIRE(p % e == 0);
  }
}

TEST_CASE("pi_e works on near-64-bit inputs") {
  const std::uint64_t p = std::uint64_t{1} << 59;
  const std::uint64_t q = std::uint64_t{1} << 60;
  CHECK(pi_e(p, q) == p);
  CHECK(pi_f(p, q) == 1);
}

TEST_CASE("deep_decide reproduces the worked example") {
  const DecisionReport report = deep_decide(8400, 8316000, 6000);
  CHECK(report.solvable);
  REQUIRE(report.intermediates.has_value());
  CHECK(report.intermediates->pi_f == 11);
  CHECK(report.intermediates->e == 1200);
  REQUIRE(report.witness.has_value());
  CHECK(mul(C(1, 8400), *report.witness) == C(6000, 8316000));
}

TEST_CASE("deep_decide refutations") {
  const DecisionReport no_multiple = deep_decide(2, 4, 5);
  CHECK_FALSE(no_multiple.solvable);
  CHECK(no_multiple.refutation == Refutation::kDeficientPartFails);
  REQUIRE(no_multiple.intermediates.has_value());
  CHECK(no_multiple.intermediates->e == 2);

  const DecisionReport no_division = deep_decide(3, 4, 1);
  CHECK_FALSE(no_division.solvable);
  CHECK(no_division.refutation == Refutation::kNotDivisible);
  CHECK_FALSE(no_division.intermediates.has_value());

  CHECK_THROWS_AS(deep_decide(1, 1, 0), domain_error);
}

TEST_CASE("deep_decide with a unit coefficient") {
  for (std::uint64_t q : {1ull, 5ull, 12ull}) {
    for (std::uint64_t n : {1ull, 7ull}) {
      const DecisionReport report = deep_decide(1, q, n);
      CHECK(report.solvable);
      REQUIRE(report.witness.has_value());
      CHECK(*report.witness == C(n, q));
    }
  }
}

TEST_CASE("every positive verdict's witness multiplies back") {
  for (std::uint64_t p = 1; p <= 40; ++p) {
    for (std::uint64_t q = p; q <= 40; q += p) {
      for (std::uint64_t n = 1; n <= 12; ++n) {
        const DecisionReport report = deep_decide(p, q, n);
        if (!report.solvable) continue;
        REQUIRE(report.witness.has_value());
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        REQUIRE(mul(C(1, p), *report.witness) == C(n, q));
      }
    }
  }
}

TEST_CASE("three-way agreement on a desk grid") {
  for (std::uint64_t p = 1; p <= 60; ++p) {
    for (std::uint64_t q = 1; q <= 60; ++q) {
      for (std::uint64_t n = 1; n <= 20; ++n) {
        const bool deep = deep_decide(p, q, n, /*attach_witness=*/false).solvable;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        REQUIRE(deep == theorem_characterization(p, q, n));
        REQUIRE(deep == decide_by_enumeration(p, q, n));
      }
    }
  }
}

TEST_CASE("gcd call count stays within the polylog budget") {
  for (std::uint64_t p : {1ull, 2ull, 3ull, 16ull, 97ull, 128ull, 200ull}) {
    for (std::uint64_t q : {1ull, 2ull, 60ull, 128ull, 199ull, 200ull}) {
      const DecisionReport report = deep_decide(p, q, 7, /*attach_witness=*/false);
      const double budget = 4.0 * (std::log2(double(p)) + 1) * (std::log2(double(q)) + 1);
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(double(report.gcd_calls) <= budget);
    }
  }
}

TEST_CASE("theorem characterization examples") {
  CHECK(theorem_characterization(8400, 8316000, 6000));
  CHECK_FALSE(theorem_characterization(2, 4, 5));
  CHECK(theorem_characterization(360, 360, 1));
  CHECK_THROWS_AS(theorem_characterization(100'000'000'000'031ull, 1, 1), budget_error);
}

TEST_CASE("decide_scaled matches candidate search") {
  const DecisionReport yes = decide_scaled(2, 2, 4, 4);
  CHECK(yes.solvable);
  REQUIRE(yes.witness.has_value());
  CHECK(*yes.witness == C(1, 4));
  CHECK(mul(C(2, 2), *yes.witness) == C(4, 4));

  const DecisionReport no = decide_scaled(2, 2, 4, 2);
  CHECK_FALSE(no.solvable);

  for (std::uint64_t m = 1; m <= 10; ++m) {
    for (std::uint64_t p = 1; p <= 10; ++p) {
      for (std::uint64_t q = 1; q <= 10; ++q) {
        for (std::uint64_t n = 1; n <= 16; ++n) {
          const DecisionReport report = decide_scaled(m, p, q, n);
          CAPTURE(m);
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(n);
          REQUIRE(report.solvable == cyclering::testing::brute_force_scaled(m, p, q, n));
          if (report.solvable) {
            REQUIRE(report.witness.has_value());
            REQUIRE(mul(C(m, p), *report.witness) == C(n, q));
          }
          if (m == 1) {
            REQUIRE(report.solvable == deep_decide(p, q, n, false).solvable);
          }
        }
      }
    }
  }
}

TEST_CASE("the published coefficient rule misses solvable instances") {
  CHECK_FALSE(decide_scaled_paper_strict(2, 2, 4, 4));
  CHECK(decide_scaled(2, 2, 4, 4).solvable);
  CHECK(cyclering::testing::brute_force_scaled(2, 2, 4, 4));
}

TEST_CASE("decide_multi_target") {
  const DecisionReport example =
      decide_multi_target(1, 3, {{3, 6}, {5, 12}});
  CHECK(example.solvable);
  REQUIRE(example.witness.has_value());
  CHECK(mul(C(1, 3), *example.witness) == add(C(3, 6), C(5, 12)));

  // A single target behaves exactly like decide_scaled.
  for (std::uint64_t n = 1; n <= 10; ++n) {
    CHECK(decide_multi_target(2, 4, {{n, 8}}).solvable ==
          decide_scaled(2, 4, 8, n).solvable);
  }

  // Duplicate target sizes merge by adding multiplicities.
  const DecisionReport merged = decide_multi_target(1, 2, {{1, 4}, {5, 4}});
  const DecisionReport direct = decide_multi_target(1, 2, {{6, 4}});
  CHECK(merged.solvable);
  CHECK(merged.solvable == direct.solvable);
  REQUIRE(merged.witness.has_value());
  CHECK(mul(C(1, 2), *merged.witness) == C(6, 4));

  CHECK_FALSE(decide_multi_target(1, 2, {{5, 4}, {1, 6}}).solvable);
  CHECK_THROWS_AS(decide_multi_target(1, 2, {}), domain_error);
}

TEST_CASE("necessary weight condition") {
  CHECK(necessary_weight_condition({{1, 4}}, 12, 9));
  CHECK(necessary_weight_condition({{1, 2}, {1, 3}}, 6, 10));
  // Necessary only: 5 divides 42 yet the equation is unsolvable.
  CHECK(necessary_weight_condition({{1, 2}, {1, 3}}, 6, 7));
  CHECK_FALSE(decide_sum_lhs({{1, 2}, {1, 3}}, 6, 7).solvable);
  CHECK_FALSE(necessary_weight_condition({{1, 2}, {1, 5}}, 6, 1));
  CHECK_THROWS_AS(necessary_weight_condition({}, 6, 1), domain_error);
}

TEST_CASE("necessary gcd condition") {
  CHECK_FALSE(necessary_gcd_condition({{2, 2}, {4, 3}}, 5));
  CHECK(necessary_gcd_condition({{1, 9}}, 7));
  CHECK(necessary_gcd_condition({{6, 2}, {9, 5}}, 12));
}

TEST_CASE("solve_prime_power") {
  const auto two_cycles = solve_prime_power({{1, 2}}, 2, 2, 4);
  REQUIRE(two_cycles.has_value());
  CHECK(*two_cycles == C(2, 4));
  CHECK(mul(C(1, 2), *two_cycles) == C(4, 4));

  CHECK_FALSE(solve_prime_power({{1, 3}}, 2, 2, 6).has_value());

  const auto mixed = solve_prime_power({{1, 2}, {2, 1}}, 2, 3, 8);
  REQUIRE(mixed.has_value());
  CHECK(*mixed == C(2, 8));
  CHECK(mul(coefficient_of({{1, 2}, {2, 1}}), *mixed) == C(8, 8));

  CHECK_THROWS_AS(solve_prime_power({{1, 2}}, 4, 2, 4), domain_error);  // not prime
  CHECK_THROWS_AS(solve_prime_power({{1, 8}}, 2, 3, 4), domain_error);  // p_i == q^t
}

TEST_CASE("solve_prime_power solutions are unique") {
  // Exhaust candidate multiplicities u: X = C^u_{q^t} is the only shape a
  // solution may take, so exactly one u may verify.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> monomials = {{1, 2}, {2, 1}};
  const std::uint64_t target_length = 8;  // 2^3
  for (std::uint64_t n = 1; n <= 48; ++n) {
    const auto solution = solve_prime_power(monomials, 2, 3, n);
    int verifying = 0;
    for (std::uint64_t u = 1; u <= n; ++u) {
      if (mul(coefficient_of(monomials), C(u, target_length)) == C(n, target_length)) {
        ++verifying;
      }
    }
    CAPTURE(n);
    CHECK(verifying == (solution.has_value() ? 1 : 0));
  }
}
