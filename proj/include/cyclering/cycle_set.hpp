#ifndef CYCLERING_CYCLE_SET_HPP
#define CYCLERING_CYCLE_SET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclering/errors.hpp"

namespace cyclering {

// One isomorphism class of cycles: `count` disjoint cycles of size `length`.
struct CycleEntry {
  std::uint64_t length = 0;
  std::uint64_t count = 0;

  friend auto operator<=>(const CycleEntry&, const CycleEntry&) = default;
};

// A permutation digraph up to isomorphism: a finite multiset of cycles,
// stored canonically as (length, count) entries with strictly increasing
// lengths and positive counts. The empty set is the additive identity;
// a single self-loop is the multiplicative identity.
//
// Values are immutable after construction and safe to share across threads.
class CycleSet {
 public:
  // The empty graph (additive identity).
  CycleSet() = default;

  static CycleSet zero() { return CycleSet(); }

  // The single self-loop (multiplicative identity).
  static CycleSet one() { return cycles(1, 1); }

  // `count` cycles of size `length`; count 0 gives the empty graph.
  // Argument order mirrors the text form C(count,length).
  static CycleSet cycles(std::uint64_t count, std::uint64_t length);

  // Canonicalize a raw (length, count) list: drop zero counts, merge equal
  // lengths, sort by length. Throws overflow_error if merged counts or the
  // total state count exceed 64 bits, domain_error on a zero length with a
  // positive count.
  static CycleSet from_pairs(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw);

  const std::vector<CycleEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_one() const {
    return entries_.size() == 1 && entries_[0].length == 1 && entries_[0].count == 1;
  }

  // Total number of vertices, i.e. sum of length * count.
  std::uint64_t total_states() const { return total_states_; }

  friend bool operator==(const CycleSet&, const CycleSet&) = default;
  friend auto operator<=>(const CycleSet& a, const CycleSet& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<CycleEntry> entries_;
  std::uint64_t total_states_ = 0;

  friend CycleSet add(const CycleSet&, const CycleSet&);
  friend CycleSet mul(const CycleSet&, const CycleSet&);
  static CycleSet from_sorted(std::vector<CycleEntry> entries);
};

// Canonicalize a raw (length, count) list; see CycleSet::from_pairs.
CycleSet normalize(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw);
CycleSet normalize(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> raw);

// Disjoint union. Total states add.
CycleSet add(const CycleSet& a, const CycleSet& b);

// Direct product, computed pairwise: a cycle class (p1, n1) times (p2, n2)
// yields gcd(p1,p2) * n1 * n2 cycles of size lcm(p1,p2). Total states
// multiply. The empty graph annihilates; the self-loop is neutral.
CycleSet mul(const CycleSet& a, const CycleSet& b);

// w-fold product; pow(a, 0) is the self-loop.
CycleSet pow(const CycleSet& a, std::uint64_t w);

inline CycleSet operator+(const CycleSet& a, const CycleSet& b) { return add(a, b); }
inline CycleSet operator*(const CycleSet& a, const CycleSet& b) { return mul(a, b); }

// Canonical text form: "C(count,length)" terms joined by '+' in increasing
// length order; the empty graph prints as "0".
std::string to_canonical_text(const CycleSet& s);

// Product-vertex cap for the explicit oracle: 10^6 unless the
// CYCLERING_ORACLE_BOUND environment variable overrides it.
std::uint64_t default_oracle_bound();

// Materializes both operands as explicit successor maps, forms the direct
// product permutation on vertex pairs and decomposes it into cycles.
// Independent of mul()'s pairwise formula; used to cross-check it.
// Throws budget_error when total_states(a) * total_states(b) exceeds
// max_product_vertices.
CycleSet explicit_product_oracle(const CycleSet& a, const CycleSet& b,
                                 std::uint64_t max_product_vertices = default_oracle_bound());

}  // namespace cyclering

#endif  // CYCLERING_CYCLE_SET_HPP
