#ifndef CYCLERING_AST_HPP
#define CYCLERING_AST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cyclering/cycle_set.hpp"

namespace cyclering {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstNode {
  CycleSet value;
};
struct VarNode {
  std::string name;
};
struct AddNode {
  std::vector<ExprPtr> children;  // at least 2
};
struct MulNode {
  std::vector<ExprPtr> children;  // at least 2
};
struct PowNode {
  ExprPtr base;
  std::uint64_t exponent = 0;
};

struct Expr {
  std::variant<ConstNode, VarNode, AddNode, MulNode, PowNode> node;
};

ExprPtr make_const(CycleSet value);
ExprPtr make_var(std::string name);
ExprPtr make_add(std::vector<ExprPtr> children);
ExprPtr make_mul(std::vector<ExprPtr> children);
ExprPtr make_pow(ExprPtr base, std::uint64_t exponent);

// Deterministic text form; parse(print_canonical(e)) reproduces e up to
// normalization. Constants print in canonical increasing-length order.
std::string print_canonical(const ExprPtr& expr);

// Bottom-up evaluation of a ground expression with checked arithmetic.
// Throws domain_error on a free variable, overflow_error on overflow.
CycleSet evaluate(const ExprPtr& expr);

bool is_ground(const ExprPtr& expr);

// --- Equation classification -------------------------------------------

// C^1_p * X = C^n_q
struct BasicForm {
  std::uint64_t p = 0, q = 0, n = 0;
  friend bool operator==(const BasicForm&, const BasicForm&) = default;
};
// C^m_p * X = C^n_q with m >= 2
struct ScaledForm {
  std::uint64_t m = 0, p = 0, q = 0, n = 0;
  friend bool operator==(const ScaledForm&, const ScaledForm&) = default;
};
// C^m_p * X = sum of C^{n_i}_{q_i}; targets are (n_i, q_i)
struct MultiTargetForm {
  std::uint64_t m = 0, p = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> targets;
  friend bool operator==(const MultiTargetForm&, const MultiTargetForm&) = default;
};
// sum of C^{m_i}_{p_i} * X = C^n_q; monomials are (m_i, p_i)
struct SumLhsForm {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> monomials;
  std::uint64_t q = 0, n = 0;
  friend bool operator==(const SumLhsForm&, const SumLhsForm&) = default;
};
struct UnsupportedForm {
  std::string reason;
  friend bool operator==(const UnsupportedForm&, const UnsupportedForm&) = default;
};

using Classification =
    std::variant<BasicForm, ScaledForm, MultiTargetForm, SumLhsForm, UnsupportedForm>;

struct EquationAst {
  ExprPtr lhs;
  ExprPtr rhs;
  Classification classification;
};

// Normalizes both sides (ground subexpressions evaluated, the unknown's
// coefficients collected) and classifies the equation. Total on every
// well-formed pair of expressions; shapes outside the supported forms come
// back as UnsupportedForm with a readable reason.
Classification classify(const ExprPtr& lhs, const ExprPtr& rhs);

}  // namespace cyclering

#endif  // CYCLERING_AST_HPP
