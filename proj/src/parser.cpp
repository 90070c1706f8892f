#include "cyclering/parser.hpp"

#include <cctype>

#include "cyclering/arith.hpp"

namespace cyclering {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) {}

  ParsedInput parse_input() {
    ExprPtr first = parse_expr();
    skip_ws();
    if (peek() == '=') {
      next();
      ExprPtr second = parse_expr();
      expect_end();
      EquationAst equation;
      equation.lhs = first;
      equation.rhs = second;
      equation.classification = classify(first, second);
      return equation;
    }
    expect_end();
    return first;
  }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < input_.size(); ++i) {
      if (input_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw parse_error(line, column, message);
  }

  char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }
  char next() { return input_[pos_++]; }

  void skip_ws() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'", pos_);
    }
    next();
  }

  void expect_end() {
    skip_ws();
    if (pos_ != input_.size()) {
      fail("unexpected trailing input", pos_);
    }
  }

  std::uint64_t parse_nat() {
    skip_ws();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a number", pos_);
    }
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(next() - '0');
      if (value > (~std::uint64_t{0} - digit) / 10) {
        fail("number does not fit in 64 bits", start);
      }
      value = value * 10 + digit;
    }
    return value;
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (peek() == '+') {
      next();
      terms.push_back(parse_term());
      skip_ws();
    }
    return make_add(std::move(terms));
  }

  ExprPtr parse_term() {
    std::vector<ExprPtr> factors;
    factors.push_back(parse_factor());
    skip_ws();
    while (peek() == '*') {
      next();
      factors.push_back(parse_factor());
      skip_ws();
    }
    return make_mul(std::move(factors));
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      next();
      const std::uint64_t exponent = parse_nat();
      return make_pow(std::move(base), exponent);
    }
    return base;
  }

  ExprPtr parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      next();
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '0') {
      next();
      return make_const(CycleSet::zero());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += next();
      }
      if (name == "C") {
        skip_ws();
        if (peek() == '(') {
          return parse_cycle();
        }
      }
      return make_var(std::move(name));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      fail("bare numbers are not cycle sets; write C(count,length) or 0", start);
    }
    fail("expected a cycle term, variable, '0' or '('", start);
  }

  // After the identifier "C", with '(' pending.
  ExprPtr parse_cycle() {
    expect('(');
    const std::uint64_t count = parse_nat();
    expect(',');
    skip_ws();
    const std::size_t length_pos = pos_;
    const std::uint64_t length = parse_nat();
    expect(')');
    if (count == 0) return make_const(CycleSet::zero());
    if (length == 0) {
      fail("cycle length must be positive", length_pos);
    }
    return make_const(CycleSet::cycles(count, length));
  }
};

}  // namespace

ParsedInput parse(std::string_view input) {
  Parser parser(input);
  return parser.parse_input();
}

ExprPtr parse_expression(std::string_view input) {
  ParsedInput parsed = parse(input);
  if (auto* expr = std::get_if<ExprPtr>(&parsed)) return *expr;
  throw domain_error("expected an expression, found an equation");
}

EquationAst parse_equation(std::string_view input) {
  ParsedInput parsed = parse(input);
  if (auto* equation = std::get_if<EquationAst>(&parsed)) return std::move(*equation);
  throw domain_error("expected an equation (no '=' found)");
}

}  // namespace cyclering
