#include "cyclering/cycle_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "cyclering/arith.hpp"

namespace cyclering {

CycleSet CycleSet::from_sorted(std::vector<CycleEntry> entries) {
  CycleSet s;
  std::uint64_t total = 0;
  for (const CycleEntry& e : entries) {
    total = checked_add(total, checked_mul(e.length, e.count));
  }
  s.entries_ = std::move(entries);
  s.total_states_ = total;
  return s;
}

CycleSet CycleSet::cycles(std::uint64_t count, std::uint64_t length) {
  if (count == 0) return CycleSet();
  if (length == 0) throw domain_error("cycle length must be positive");
  return from_sorted({CycleEntry{length, count}});
}

CycleSet CycleSet::from_pairs(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& [length, count] : raw) {
    if (count == 0) continue;
    if (length == 0) throw domain_error("cycle length must be positive");
    auto [it, inserted] = merged.emplace(length, count);
    if (!inserted) it->second = checked_add(it->second, count);
  }
  std::vector<CycleEntry> entries;
  entries.reserve(merged.size());
  for (const auto& [length, count] : merged) entries.push_back({length, count});
  return from_sorted(std::move(entries));
}

CycleSet normalize(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw) {
  return CycleSet::from_pairs(raw);
}

CycleSet normalize(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> raw) {
  return CycleSet::from_pairs({raw.begin(), raw.size()});
}

CycleSet add(const CycleSet& a, const CycleSet& b) {
  std::vector<CycleEntry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->length < ib->length) {
      out.push_back(*ia++);
    } else if (ib->length < ia->length) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->length, checked_add(ia->count, ib->count)});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.entries_.end());
  out.insert(out.end(), ib, b.entries_.end());
  return CycleSet::from_sorted(std::move(out));
}

CycleSet mul(const CycleSet& a, const CycleSet& b) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const CycleEntry& ea : a.entries_) {
    for (const CycleEntry& eb : b.entries_) {
      const std::uint64_t g = gcd_u64(ea.length, eb.length);
      const std::uint64_t lam = checked_mul(ea.length / g, eb.length);
      // (p1 * p2 * n1 * n2) / lcm == gcd(p1,p2) * n1 * n2
      const std::uint64_t cnt = checked_mul(g, checked_mul(ea.count, eb.count));
      auto [it, inserted] = merged.emplace(lam, cnt);
      if (!inserted) it->second = checked_add(it->second, cnt);
    }
  }
  std::vector<CycleEntry> entries;
  entries.reserve(merged.size());
  for (const auto& [length, count] : merged) entries.push_back({length, count});
  return CycleSet::from_sorted(std::move(entries));
}

CycleSet pow(const CycleSet& a, std::uint64_t w) {
  CycleSet result = CycleSet::one();
  CycleSet base = a;
  while (w > 0) {
    if (w & 1) result = mul(result, base);
    w >>= 1;
    if (w > 0) base = mul(base, base);
  }
  return result;
}

std::string to_canonical_text(const CycleSet& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const CycleEntry& e : s.entries()) {
    if (!first) out += '+';
    first = false;
    out += "C(" + std::to_string(e.count) + ',' + std::to_string(e.length) + ')';
  }
  return out;
}

std::uint64_t default_oracle_bound() {
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("CYCLERING_ORACLE_BOUND")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1'000'000};
  }();
  return bound;
}

CycleSet explicit_product_oracle(const CycleSet& a, const CycleSet& b,
                                 std::uint64_t max_product_vertices) {
  const std::uint64_t na = a.total_states();
  const std::uint64_t nb = b.total_states();
  if (na == 0 || nb == 0) return CycleSet::zero();
  if (nb > max_product_vertices / na) {
    throw budget_error("explicit product oracle: " + std::to_string(na) + " x " +
                       std::to_string(nb) + " product vertices exceed the bound of " +
                       std::to_string(max_product_vertices));
  }

  auto successor_map = [](const CycleSet& s, std::uint64_t n) {
    std::vector<std::uint64_t> succ(n);
    std::uint64_t base = 0;
    for (const CycleEntry& e : s.entries()) {
      for (std::uint64_t c = 0; c < e.count; ++c) {
        for (std::uint64_t i = 0; i < e.length; ++i) {
          succ[base + i] = base + (i + 1) % e.length;
        }
        base += e.length;
      }
    }
    return succ;
  };
  const std::vector<std::uint64_t> sa = successor_map(a, na);
  const std::vector<std::uint64_t> sb = successor_map(b, nb);

  const std::uint64_t total = na * nb;
  std::vector<bool> visited(total, false);
  std::map<std::uint64_t, std::uint64_t> cycle_counts;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    std::uint64_t v = start;
    do {
      visited[v] = true;
      v = sa[v / nb] * nb + sb[v % nb];
      ++len;
    } while (v != start);
    cycle_counts[len] += 1;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(cycle_counts.begin(),
                                                             cycle_counts.end());
  return CycleSet::from_pairs(pairs);
}

}  // namespace cyclering
