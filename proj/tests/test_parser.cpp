#include "cyclering/parser.hpp"

#include <doctest.h>

#include <random>

#include "cyclering/errors.hpp"
#include "support.hpp"

using namespace cyclering;
using cyclering::testing::C;
using cyclering::testing::random_cycle_set;

namespace {

ExprPtr random_ground_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
  cyclering::testing::RandomCycleSetParams params;
  params.max_length = 6;
  params.max_count = 3;
  params.max_entries = 3;
  switch (pick(rng)) {
    case 1: {
      std::vector<ExprPtr> children{random_ground_expr(rng, depth - 1),
                                    random_ground_expr(rng, depth - 1)};
      return make_add(std::move(children));
    }
    case 2: {
      std::vector<ExprPtr> children{random_ground_expr(rng, depth - 1),
                                    random_ground_expr(rng, depth - 1)};
      return make_mul(std::move(children));
    }
    case 3: {
      std::uniform_int_distribution<std::uint64_t> exponent(0, 2);
      return make_pow(random_ground_expr(rng, depth - 1), exponent(rng));
    }
    default:
      return make_const(random_cycle_set(rng, params));
  }
}

Classification classify_text(const std::string& text) {
  return parse_equation(text).classification;
}

}  // namespace

TEST_CASE("parsing classifies the worked equations") {
  const auto basic = classify_text("C(1,4)*X = C(12,12)");
  REQUIRE(std::holds_alternative<BasicForm>(basic));
  CHECK(std::get<BasicForm>(basic).p == 4);
  CHECK(std::get<BasicForm>(basic).q == 12);
  CHECK(std::get<BasicForm>(basic).n == 12);

  const auto sum = classify_text("(C(1,2)+C(1,3))*X = C(10,6)");
  REQUIRE(std::holds_alternative<SumLhsForm>(sum));
  CHECK(std::get<SumLhsForm>(sum).monomials ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {1, 3}});
  CHECK(std::get<SumLhsForm>(sum).q == 6);
  CHECK(std::get<SumLhsForm>(sum).n == 10);

  const auto scaled = classify_text("C(2,2)*X=C(4,4)");
  REQUIRE(std::holds_alternative<ScaledForm>(scaled));
  CHECK(std::get<ScaledForm>(scaled).m == 2);

  const auto multi = classify_text("C(1,3)*X=C(3,6)+C(5,12)");
  REQUIRE(std::holds_alternative<MultiTargetForm>(multi));
  CHECK(std::get<MultiTargetForm>(multi).targets ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 6}, {5, 12}});
}

TEST_CASE("normalization happens before classification") {
  // The unknown may appear on either side of '*', coefficients collect.
  CHECK(std::holds_alternative<BasicForm>(classify_text("X*C(1,4)=C(2,4)")));
  CHECK(std::get<ScaledForm>(classify_text("C(1,2)*C(1,2)*X=C(8,4)")).m == 2);
  CHECK(std::get<ScaledForm>(classify_text("C(1,2)*C(1,2)*X=C(8,4)")).p == 2);
  // Distributed monomials collect into a sum coefficient.
  const auto distributed = classify_text("C(2,3)*X + C(1,6)*X = C(4,6)");
  REQUIRE(std::holds_alternative<SumLhsForm>(distributed));
  CHECK(std::get<SumLhsForm>(distributed).monomials ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {1, 6}});
  // A bare unknown has the self-loop coefficient.
  const auto bare = classify_text("X = C(3,4)");
  REQUIRE(std::holds_alternative<BasicForm>(bare));
  CHECK(std::get<BasicForm>(bare).p == 1);
}

TEST_CASE("unsupported shapes are classified with a reason") {
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("X^2 = C(1,4)")));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)*X+C(1,3)*Y=C(1,6)")));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)*X+C(1,3)=C(1,6)")));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)*X=X")));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)*X=0")));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)=C(1,2)")));
  CHECK(std::holds_alternative<UnsupportedForm>(
      classify_text("(C(1,2)+C(1,3))*X=C(1,6)+C(1,12)")));
  CHECK_FALSE(std::get<UnsupportedForm>(classify_text("X^2 = C(1,4)")).reason.empty());
}

TEST_CASE("ground expressions parse and evaluate") {
  CHECK(evaluate(parse_expression("C(2,3)+C(1,6)")) == normalize({{3, 2}, {6, 1}}));
  CHECK(evaluate(parse_expression("C(1,4)*(C(2,12)+C(1,6)+C(2,3))")) == C(12, 12));
  CHECK(evaluate(parse_expression("C(1,1)^5")) == C(1, 1));
  CHECK(evaluate(parse_expression("C(1,2)*C(1,3)")) == C(1, 6));
  CHECK(evaluate(parse_expression("C(1,2)*C(1,3)")) ==
        explicit_product_oracle(C(1, 2), C(1, 3)));
  CHECK(evaluate(parse_expression("0")) == CycleSet::zero());
  CHECK(evaluate(parse_expression("C(0,7)")) == CycleSet::zero());
  CHECK(evaluate(parse_expression(" C( 2 , 3 ) + 0 ")) == C(2, 3));
}

TEST_CASE("operator precedence and power") {
  CHECK(evaluate(parse_expression("C(1,2)+C(1,3)*C(1,4)")) ==
        add(C(1, 2), C(1, 12)));
  CHECK(evaluate(parse_expression("(C(1,2)+C(1,3))*C(1,4)")) ==
        add(C(2, 4), C(1, 12)));
  CHECK(evaluate(parse_expression("C(1,2)^3")) == C(4, 2));
  CHECK(evaluate(parse_expression("C(1,2)^0")) == CycleSet::one());
  CHECK(evaluate(parse_expression("C(1,2)*C(1,3)^2")) == mul(C(1, 2), C(3, 3)));
}

TEST_CASE("evaluate rejects free variables") {
  CHECK_THROWS_AS(evaluate(parse_expression("C(1,2)*X")), domain_error);
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const std::string& text) {
    try {
      parse(text);
    } catch (const parse_error& e) {
      return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
    }
    FAIL(("expected a parse error for: " + text));
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(error_at("C(1,0)") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(error_at("C(1,2) +\n @") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at("C(1,2") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(error_at("1+2") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("C(1,2)*") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(error_at("C(1,2))") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(error_at("C(99999999999999999999,2)") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK_THROWS_AS(parse("C(1,2"), parse_error);
}

TEST_CASE("identifier handling") {
  // 'C' only opens a cycle term when '(' follows; otherwise it is a name.
  const auto classification = classify_text("C(1,2)*Cvar = C(2,2)");
  REQUIRE(std::holds_alternative<BasicForm>(classification));
  CHECK(std::holds_alternative<UnsupportedForm>(classify_text("C(1,2)*C = C(2,2)*C")));
  CHECK_THROWS_AS(parse("C_1(2,3)"), parse_error);  // C_1 is a name, '(' cannot follow
}

TEST_CASE("print round-trips on random cycle sets") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    const CycleSet s = random_cycle_set(rng);
    const ExprPtr expr = make_const(s);
    const ExprPtr reparsed = parse_expression(print_canonical(expr));
    CAPTURE(print_canonical(expr));
    REQUIRE(evaluate(reparsed) == s);
  }
}

TEST_CASE("print round-trips on random ground expressions") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 500; ++i) {
    const ExprPtr expr = random_ground_expr(rng, 4);
    const std::string text = print_canonical(expr);
    CAPTURE(text);
    const ExprPtr reparsed = parse_expression(text);
    REQUIRE(evaluate(reparsed) == evaluate(expr));
  }
}

TEST_CASE("equation text prints and reparses") {
  const EquationAst equation = parse_equation("(C(1,2)+C(1,3))*X^1 = C(10,6)");
  const std::string text = print_canonical(equation.lhs) + "=" + print_canonical(equation.rhs);
  const EquationAst reparsed = parse_equation(text);
  CHECK(equation.classification == reparsed.classification);
}
