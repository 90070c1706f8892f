#include "cyclering/dispatch.hpp"

#include <chrono>

#include "cyclering/decider.hpp"
#include "cyclering/divisors.hpp"

namespace cyclering {

namespace {

void fill_from_report(DispatchResult& result, DecisionReport&& report) {
  result.verdict = report.solvable;
  if (report.witness) result.witness = std::move(*report.witness);
  if (report.refutation) result.refutation = to_string(*report.refutation);
  if (report.intermediates) {
    result.intermediates = *report.intermediates;
    result.gcd_calls = report.gcd_calls;
  }
}

}  // namespace

DispatchResult dispatch(const EquationAst& equation, Command command,
                        const DispatchOptions& options) {
  if (const auto* unsupported = std::get_if<UnsupportedForm>(&equation.classification)) {
    throw domain_error("unsupported equation: " + unsupported->reason);
  }

  DispatchResult result;
  result.command = command;
  const auto start = std::chrono::steady_clock::now();

  switch (command) {
    case Command::kDecide: {
      if (const auto* basic = std::get_if<BasicForm>(&equation.classification)) {
        fill_from_report(result, deep_decide(basic->p, basic->q, basic->n));
      } else if (const auto* scaled = std::get_if<ScaledForm>(&equation.classification)) {
        fill_from_report(result, decide_scaled(scaled->m, scaled->p, scaled->q, scaled->n));
        if (options.paper_strict) {
          result.paper_strict_verdict =
              decide_scaled_paper_strict(scaled->m, scaled->p, scaled->q, scaled->n);
          result.paper_strict_disagrees = (*result.paper_strict_verdict != *result.verdict);
        }
      } else if (const auto* multi = std::get_if<MultiTargetForm>(&equation.classification)) {
        fill_from_report(result, decide_multi_target(multi->m, multi->p, multi->targets));
      } else if (const auto* sum = std::get_if<SumLhsForm>(&equation.classification)) {
        fill_from_report(result, decide_sum_lhs(sum->monomials, sum->q, sum->n));
      }
      break;
    }
    case Command::kEnumerate: {
      const auto* basic = std::get_if<BasicForm>(&equation.classification);
      if (basic == nullptr) {
        throw domain_error("enumerate supports only basic equations C(1,p)*X=C(n,q)");
      }
      SolutionStream stream(basic->p, basic->q, basic->n);
      CycleSet solution;
      const std::uint64_t limit = options.limit.value_or(~std::uint64_t{0});
      while (result.solutions.size() < limit && stream.next(solution)) {
        result.solutions.push_back(solution);
      }
      if (result.solutions.size() == limit) {
        CycleSet probe;
        result.truncated = stream.next(probe);
      }
      result.count = result.solutions.size();
      break;
    }
    case Command::kCount: {
      const auto* basic = std::get_if<BasicForm>(&equation.classification);
      if (basic == nullptr) {
        throw domain_error("count supports only basic equations C(1,p)*X=C(n,q)");
      }
      result.count = count_solutions(basic->p, basic->q, basic->n);
      break;
    }
  }

  result.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                           start)
          .count());
  return result;
}

}  // namespace cyclering
