#include "cyclering/factorization.hpp"

#include <algorithm>

#include "cyclering/arith.hpp"

namespace cyclering {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) v = checked_mul(v, prime);
  return v;
}

std::uint64_t PrimePowerFactorization::value() const {
  std::uint64_t v = 1;
  for (const PrimePower& f : factors) v = checked_mul(v, f.value());
  return v;
}

bool PrimePowerFactorization::contains_prime(std::uint64_t prime) const {
  return exponent_of(prime) > 0;
}

std::uint32_t PrimePowerFactorization::exponent_of(std::uint64_t prime) const {
  for (const PrimePower& f : factors) {
    if (f.prime == prime) return f.exponent;
  }
  return 0;
}

PrimePowerFactorization factorize(std::uint64_t n) {
  if (n == 0) throw domain_error("factorize: input must be positive");
  PrimePowerFactorization result;
  std::uint64_t budget = kTrialDivisionIterationBudget;

  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.factors.push_back({p, e});
  };

  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (budget < 2) {
      throw budget_error("factorize: trial-division budget exceeded");
    }
    budget -= 2;
    strip(d);
    strip(d + 2);
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 0; i < r - 1; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality exactly for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

}  // namespace cyclering
