#ifndef CYCLERING_PARSER_HPP
#define CYCLERING_PARSER_HPP

#include <string_view>
#include <variant>

#include "cyclering/ast.hpp"

namespace cyclering {

// Either a bare expression or an equation, depending on whether the input
// contains '='.
using ParsedInput = std::variant<ExprPtr, EquationAst>;

// Grammar (whitespace insignificant):
//   input    := expr ('=' expr)?
//   expr     := term ('+' term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' NAT)?
//   atom     := cycle | VAR | '(' expr ')' | '0'
//   cycle    := 'C' '(' NAT ',' NAT ')'        -- C(count,length)
//   VAR      := [A-Za-z][A-Za-z0-9_]*
// C(0,len) denotes the empty graph; a zero length with a positive count is
// rejected. Errors carry 1-based line/column positions (parse_error).
ParsedInput parse(std::string_view input);

// Convenience: parse text that must be a single expression / equation.
ExprPtr parse_expression(std::string_view input);
EquationAst parse_equation(std::string_view input);

}  // namespace cyclering

#endif  // CYCLERING_PARSER_HPP
