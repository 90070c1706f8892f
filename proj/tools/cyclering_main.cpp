// cyclering: decide, enumerate and count solutions of cycle-set equations
// such as C(1,p)*X = C(n,q), plus oracle cross-checks and micro-benchmarks.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclering/decider.hpp"
#include "cyclering/dispatch.hpp"
#include "cyclering/divisors.hpp"
#include "cyclering/parser.hpp"

namespace {

using cyclering::CycleSet;
using nlohmann::json;

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;

struct EquationSource {
  std::string text;  // equation text; empty when numeric flags are used
  std::uint64_t m = 1, p = 0, q = 0, n = 0;

  bool numeric() const { return p != 0 || q != 0 || n != 0; }
};

cyclering::EquationAst load_equation(const EquationSource& source) {
  if (source.numeric()) {
    if (source.p == 0 || source.q == 0 || source.n == 0) {
      throw cyclering::domain_error("--p, --q and --n must all be given and positive");
    }
    cyclering::EquationAst equation;
    equation.lhs = cyclering::make_mul(
        {cyclering::make_const(CycleSet::cycles(source.m, source.p)),
         cyclering::make_var("X")});
    equation.rhs = cyclering::make_const(CycleSet::cycles(source.n, source.q));
    equation.classification = cyclering::classify(equation.lhs, equation.rhs);
    return equation;
  }
  std::string text = source.text;
  if (text.empty()) {
    std::string line, all;
    while (std::getline(std::cin, line)) all += line + '\n';
    text = all;
  }
  return cyclering::parse_equation(text);
}

void emit_decide(const cyclering::DispatchResult& result, bool as_json) {
  if (as_json) {
    json record{{"command", "decide"},
                {"verdict", *result.verdict},
                {"elapsed_ns", result.elapsed_ns}};
    if (result.witness) record["witness"] = to_canonical_text(*result.witness);
    if (result.refutation) record["refutation"] = *result.refutation;
    if (result.intermediates) {
      record["pi_f"] = result.intermediates->pi_f;
      record["pi_e"] = result.intermediates->e;
    }
    if (result.gcd_calls) record["gcd_calls"] = *result.gcd_calls;
    if (result.paper_strict_verdict) {
      record["paper_strict_verdict"] = *result.paper_strict_verdict;
      record["paper_strict_disagrees"] = result.paper_strict_disagrees;
    }
    std::cout << record.dump() << '\n';
    return;
  }
  std::cout << (*result.verdict ? "solvable" : "unsolvable") << '\n';
  if (result.refutation) std::cout << "refutation: " << *result.refutation << '\n';
  if (result.intermediates) {
    std::cout << "pi_f: " << result.intermediates->pi_f << '\n'
              << "pi_e: " << result.intermediates->e << '\n'
              << "gcd_calls: " << *result.gcd_calls << '\n';
  }
  if (result.witness) {
    std::cout << "witness: " << to_canonical_text(*result.witness) << '\n';
  }
  if (result.paper_strict_verdict) {
    std::cout << "paper_strict_verdict: "
              << (*result.paper_strict_verdict ? "solvable" : "unsolvable") << '\n';
    if (result.paper_strict_disagrees) {
      std::cerr << "note: the published coefficient rule disagrees with the "
                   "validated rule on this instance\n";
    }
  }
}

int run_decide(const EquationSource& source, bool as_json, bool paper_strict) {
  cyclering::EquationAst equation = load_equation(source);
  cyclering::DispatchOptions options;
  options.paper_strict = paper_strict;
  const auto result = cyclering::dispatch(equation, cyclering::Command::kDecide, options);
  emit_decide(result, as_json);
  return *result.verdict ? kExitSolvable : kExitUnsolvable;
}

int run_enumerate(const EquationSource& source, bool as_json,
                  std::optional<std::uint64_t> limit) {
  cyclering::EquationAst equation = load_equation(source);
  cyclering::DispatchOptions options;
  options.limit = limit;
  const auto result = cyclering::dispatch(equation, cyclering::Command::kEnumerate, options);
  if (as_json) {
    for (const CycleSet& s : result.solutions) {
      std::cout << json{{"solution", to_canonical_text(s)}}.dump() << '\n';
    }
    std::cout << json{{"command", "enumerate"},
                      {"count", *result.count},
                      {"truncated", result.truncated},
                      {"elapsed_ns", result.elapsed_ns}}
                     .dump()
              << '\n';
  } else {
    for (const CycleSet& s : result.solutions) {
      std::cout << to_canonical_text(s) << '\n';
    }
    std::cerr << *result.count << (result.truncated ? "+" : "") << " solution(s)\n";
  }
  return kExitSolvable;
}

int run_count(const EquationSource& source, bool as_json) {
  cyclering::EquationAst equation = load_equation(source);
  const auto result = cyclering::dispatch(equation, cyclering::Command::kCount);
  if (as_json) {
    std::cout << json{{"command", "count"},
                      {"count", *result.count},
                      {"elapsed_ns", result.elapsed_ns}}
                     .dump()
              << '\n';
  } else {
    std::cout << *result.count << '\n';
  }
  return kExitSolvable;
}

int run_eval(const std::string& text, bool as_json) {
  std::string input = text;
  if (input.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) input += line + '\n';
  }
  const CycleSet value = cyclering::evaluate(cyclering::parse_expression(input));
  if (as_json) {
    std::cout << json{{"command", "eval"}, {"value", to_canonical_text(value)}}.dump()
              << '\n';
  } else {
    std::cout << to_canonical_text(value) << '\n';
  }
  return kExitSolvable;
}

struct GridReport {
  std::uint64_t triples = 0;
  std::vector<std::string> disagreements;  // capped
};

void check_grid_slice(std::uint64_t p_begin, std::uint64_t p_end, std::uint64_t q_max,
                      std::uint64_t n_max, GridReport& report) {
  for (std::uint64_t p = p_begin; p < p_end; ++p) {
    for (std::uint64_t q = 1; q <= q_max; ++q) {
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        const bool deep = cyclering::deep_decide(p, q, n, /*attach_witness=*/false).solvable;
        const bool characterized = cyclering::theorem_characterization(p, q, n);
        const bool enumerated = cyclering::decide_by_enumeration(p, q, n);
        ++report.triples;
        if (deep != characterized || deep != enumerated) {
          if (report.disagreements.size() < 32) {
            report.disagreements.push_back(
                "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                " n=" + std::to_string(n) + " deep=" + std::to_string(deep) +
                " characterization=" + std::to_string(characterized) +
                " enumeration=" + std::to_string(enumerated));
          }
        }
      }
    }
  }
}

std::uint64_t check_products(std::uint64_t pairs, std::uint64_t& failures) {
  std::mt19937_64 rng(20240902);
  std::uniform_int_distribution<std::uint64_t> length(1, 30);
  std::uniform_int_distribution<std::uint64_t> count(1, 4);
  std::uniform_int_distribution<int> entries(1, 3);
  const std::uint64_t bound = cyclering::default_oracle_bound();
  std::uint64_t checked = 0;
  auto random_set = [&] {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    const int k = entries(rng);
    for (int i = 0; i < k; ++i) raw.emplace_back(length(rng), count(rng));
    return CycleSet::from_pairs(raw);
  };
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const CycleSet a = random_set();
    const CycleSet b = random_set();
    if (a.total_states() * b.total_states() > bound) continue;
    ++checked;
    if (cyclering::mul(a, b) != cyclering::explicit_product_oracle(a, b)) ++failures;
  }
  return checked;
}

int run_oracle_check(std::uint64_t p_max, std::uint64_t q_max, std::uint64_t n_max,
                     unsigned workers, std::uint64_t product_pairs, bool as_json) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();

  std::vector<GridReport> reports(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (p_max + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = 1 + w * chunk;
    const std::uint64_t end = std::min<std::uint64_t>(p_max + 1, begin + chunk);
    if (begin > p_max) break;
    threads.emplace_back(check_grid_slice, begin, end, q_max, n_max, std::ref(reports[w]));
  }
  for (std::thread& t : threads) t.join();

  GridReport merged;
  for (const GridReport& r : reports) {
    merged.triples += r.triples;
    merged.disagreements.insert(merged.disagreements.end(), r.disagreements.begin(),
                                r.disagreements.end());
  }

  std::uint64_t product_failures = 0;
  std::uint64_t products_checked = 0;
  if (product_pairs > 0) {
    products_checked = check_products(product_pairs, product_failures);
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::cerr << "oracle bound: " << cyclering::default_oracle_bound() << " product vertices\n";
  for (const std::string& d : merged.disagreements) {
    std::cerr << "disagreement: " << d << '\n';
  }
  const bool ok = merged.disagreements.empty() && product_failures == 0;
  if (as_json) {
    std::cout << json{{"command", "oracle-check"},
                      {"triples", merged.triples},
                      {"disagreements", merged.disagreements.size()},
                      {"product_pairs", products_checked},
                      {"product_failures", product_failures},
                      {"elapsed_ns", elapsed}}
                     .dump()
              << '\n';
  } else {
    std::cout << "grid: " << merged.triples << " triples, " << merged.disagreements.size()
              << " disagreement(s)\n"
              << "products: " << products_checked << " pairs, " << product_failures
              << " mismatch(es)\n";
  }
  return ok ? kExitSolvable : kExitUnsolvable;
}

int run_bench(std::uint64_t reps, bool as_json) {
  struct Instance {
    std::uint64_t p, q, n;
  };
  // The same divisor shape scaled across magnitudes; the last row exercises
  // full 64-bit inputs (beyond the enumeration decider's divisor-scan cap).
  const std::vector<Instance> instances = {
      {84, 83160, 60},
      {8400, 8316000, 6000},
      {840000, 831600000, 600000},
      {84000000, 83160000000ull, 60000000},
      {8400000000ull, 8316000000000ull, 6000000000ull},
      {840000000000000000ull, 831600000000000000ull, 600000000000000ull},
  };
  for (const Instance& inst : instances) {
    using clock = std::chrono::steady_clock;
    cyclering::DecisionReport report;
    auto t0 = clock::now();
    for (std::uint64_t r = 0; r < reps; ++r) {
      report = cyclering::deep_decide(inst.p, inst.q, inst.n, /*attach_witness=*/false);
    }
    const std::uint64_t deep_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count() / reps;

    bool enum_ok = true;
    std::uint64_t enum_ns = 0;
    try {
      t0 = clock::now();
      bool verdict = false;
      for (std::uint64_t r = 0; r < std::max<std::uint64_t>(1, reps / 100); ++r) {
        verdict = cyclering::decide_by_enumeration(inst.p, inst.q, inst.n);
      }
      enum_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count() /
                std::max<std::uint64_t>(1, reps / 100);
      if (verdict != report.solvable) {
        std::cerr << "bench: verdict mismatch on p=" << inst.p << " q=" << inst.q
                  << " n=" << inst.n << '\n';
        return kExitUnsolvable;
      }
    } catch (const cyclering::budget_error&) {
      enum_ok = false;
    }

    if (as_json) {
      json record{{"command", "bench"},     {"p", inst.p},
                  {"q", inst.q},            {"n", inst.n},
                  {"verdict", report.solvable}, {"deep_ns", deep_ns},
                  {"gcd_calls", report.gcd_calls}};
      if (enum_ok) {
        record["enumeration_ns"] = enum_ns;
      } else {
        record["enumeration_ns"] = nullptr;
      }
      std::cout << record.dump() << '\n';
    } else {
      std::cout << "p=" << inst.p << " q=" << inst.q << " n=" << inst.n
                << " verdict=" << (report.solvable ? "solvable" : "unsolvable")
                << " deep_ns=" << deep_ns << " gcd_calls=" << report.gcd_calls
                << " enumeration_ns=";
      if (enum_ok) {
        std::cout << enum_ns;
      } else {
        std::cout << "over-budget";
      }
      std::cout << '\n';
    }
  }
  return kExitSolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cyclering: equations over disjoint unions of cycles under the direct product.\n"
      "Cycle sets are written C(count,length); the empty set is 0.\n"
      "Exit codes: 0 solvable/success, 1 unsolvable, 2 usage or parse error.\n"
      "CYCLERING_ORACLE_BOUND overrides the explicit-product oracle vertex cap."};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "one JSON record per line instead of text");

  EquationSource source;
  bool paper_strict = false;
  std::optional<std::uint64_t> limit;
  std::string eval_text;
  std::uint64_t p_max = 200, q_max = 0, n_max = 60, product_pairs = 1000, reps = 1000;
  unsigned workers = 0;

  auto add_equation_options = [&source](CLI::App* cmd) {
    cmd->add_option("equation", source.text, "equation text, e.g. \"C(1,4)*X=C(12,12)\"");
    cmd->add_option("--m", source.m, "coefficient multiplicity (with --p/--q/--n)");
    cmd->add_option("--p", source.p, "coefficient cycle size");
    cmd->add_option("--q", source.q, "target cycle size");
    cmd->add_option("--n", source.n, "target multiplicity");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide whether the equation has a solution");
  add_equation_options(decide);
  decide->add_flag("--paper-strict", paper_strict,
                   "also evaluate the published (uncorrected) coefficient rule");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list all solutions of a basic equation");
  add_equation_options(enumerate);
  std::uint64_t limit_value = 0;
  CLI::Option* limit_opt =
      enumerate->add_option("--limit", limit_value, "stop after this many solutions");

  CLI::App* count = app.add_subcommand("count", "count the solutions of a basic equation");
  add_equation_options(count);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a ground expression");
  eval->add_option("expression", eval_text, "expression text, e.g. \"C(1,2)*C(1,3)\"");

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "cross-validate the deciders and the product rule on a grid");
  oracle_check->add_option("--p-max", p_max, "largest coefficient size (default 200)");
  oracle_check->add_option("--q-max", q_max, "largest target size (default: --p-max)");
  oracle_check->add_option("--n-max", n_max, "largest multiplicity (default 60)");
  oracle_check->add_option("--workers", workers, "worker threads (default: hardware)");
  oracle_check->add_option("--products", product_pairs,
                           "random product-oracle pairs to check (0 disables)");

  CLI::App* bench = app.add_subcommand(
      "bench", "time the gcd decider against the enumeration decider across magnitudes");
  bench->add_option("--reps", reps, "repetitions per instance (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (decide->parsed()) return run_decide(source, as_json, paper_strict);
    if (enumerate->parsed()) {
      if (limit_opt->count() > 0) limit = limit_value;
      return run_enumerate(source, as_json, limit);
    }
    if (count->parsed()) return run_count(source, as_json);
    if (eval->parsed()) return run_eval(eval_text, as_json);
    if (oracle_check->parsed()) {
      if (q_max == 0) q_max = p_max;
      return run_oracle_check(p_max, q_max, n_max, workers, product_pairs, as_json);
    }
    if (bench->parsed()) return run_bench(std::max<std::uint64_t>(1, reps), as_json);
  } catch (const cyclering::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
