#ifndef CYCLERING_DISPATCH_HPP
#define CYCLERING_DISPATCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclering/ast.hpp"
#include "cyclering/decision.hpp"

namespace cyclering {

enum class Command { kDecide, kEnumerate, kCount };

struct DispatchOptions {
  // enumerate: stop after this many solutions when set.
  std::optional<std::uint64_t> limit;
  // decide: additionally evaluate the published (uncorrected) coefficient
  // rule on scaled equations and report disagreement.
  bool paper_strict = false;
};

struct DispatchResult {
  Command command = Command::kDecide;
  std::optional<bool> verdict;
  std::optional<CycleSet> witness;
  std::optional<std::string> refutation;
  std::optional<DeepIntermediates> intermediates;
  std::optional<std::uint64_t> gcd_calls;
  std::optional<std::uint64_t> count;
  std::vector<CycleSet> solutions;  // enumerate only
  bool truncated = false;           // enumerate hit the limit
  // Paper-rule verdict for scaled equations under --paper-strict, with a
  // flag for disagreement against the validated rule.
  std::optional<bool> paper_strict_verdict;
  bool paper_strict_disagrees = false;
  std::uint64_t elapsed_ns = 0;
};

// Routes a classified equation to the matching decision or enumeration
// procedure. decide accepts every supported classification; enumerate and
// count accept Basic equations only. Throws domain_error on an Unsupported
// classification or a command/classification mismatch.
DispatchResult dispatch(const EquationAst& equation, Command command,
                        const DispatchOptions& options = {});

}  // namespace cyclering

#endif  // CYCLERING_DISPATCH_HPP
