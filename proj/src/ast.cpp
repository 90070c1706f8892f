#include "cyclering/ast.hpp"

#include <map>

#include "cyclering/arith.hpp"

namespace cyclering {

ExprPtr make_const(CycleSet value) {
  return std::make_shared<Expr>(Expr{ConstNode{std::move(value)}});
}
ExprPtr make_var(std::string name) {
  return std::make_shared<Expr>(Expr{VarNode{std::move(name)}});
}
ExprPtr make_add(std::vector<ExprPtr> children) {
  if (children.size() == 1) return children.front();
  if (children.empty()) return make_const(CycleSet::zero());
  return std::make_shared<Expr>(Expr{AddNode{std::move(children)}});
}
ExprPtr make_mul(std::vector<ExprPtr> children) {
  if (children.size() == 1) return children.front();
  if (children.empty()) return make_const(CycleSet::one());
  return std::make_shared<Expr>(Expr{MulNode{std::move(children)}});
}
ExprPtr make_pow(ExprPtr base, std::uint64_t exponent) {
  return std::make_shared<Expr>(Expr{PowNode{std::move(base), exponent}});
}

namespace {

// Precedence levels: add < mul < pow < atom.
enum Level { kAdd = 0, kMul = 1, kPow = 2, kAtom = 3 };

void print_expr(const ExprPtr& expr, int parent_level, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          // A multi-term constant is itself a sum; parenthesize under mul/pow.
          const bool parens = node.value.entries().size() > 1 && parent_level > kAdd;
          if (parens) out += '(';
          out += to_canonical_text(node.value);
          if (parens) out += ')';
        } else if constexpr (std::is_same_v<T, VarNode>) {
          out += node.name;
        } else if constexpr (std::is_same_v<T, AddNode>) {
          const bool parens = parent_level > kAdd;
          if (parens) out += '(';
          bool first = true;
          for (const ExprPtr& child : node.children) {
            if (!first) out += '+';
            first = false;
            print_expr(child, kAdd, out);
          }
          if (parens) out += ')';
        } else if constexpr (std::is_same_v<T, MulNode>) {
          const bool parens = parent_level > kMul;
          if (parens) out += '(';
          bool first = true;
          for (const ExprPtr& child : node.children) {
            if (!first) out += '*';
            first = false;
            print_expr(child, kMul, out);
          }
          if (parens) out += ')';
        } else if constexpr (std::is_same_v<T, PowNode>) {
          print_expr(node.base, kAtom, out);
          out += '^' + std::to_string(node.exponent);
        }
      },
      expr->node);
}

}  // namespace

std::string print_canonical(const ExprPtr& expr) {
  std::string out;
  print_expr(expr, kAdd, out);
  return out;
}

bool is_ground(const ExprPtr& expr) {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, VarNode>) {
          return false;
        } else if constexpr (std::is_same_v<T, PowNode>) {
          return is_ground(node.base);
        } else {
          for (const ExprPtr& child : node.children) {
            if (!is_ground(child)) return false;
          }
          return true;
        }
      },
      expr->node);
}

CycleSet evaluate(const ExprPtr& expr) {
  return std::visit(
      [](const auto& node) -> CycleSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, VarNode>) {
          throw domain_error("evaluate: unbound variable '" + node.name + "'");
        } else if constexpr (std::is_same_v<T, AddNode>) {
          CycleSet acc;
          for (const ExprPtr& child : node.children) acc = add(acc, evaluate(child));
          return acc;
        } else if constexpr (std::is_same_v<T, MulNode>) {
          CycleSet acc = CycleSet::one();
          for (const ExprPtr& child : node.children) acc = mul(acc, evaluate(child));
          return acc;
        } else {
          return pow(evaluate(node.base), node.exponent);
        }
      },
      expr->node);
}

namespace {

// A univariate polynomial over cycle sets: exponent of the unknown ->
// coefficient. var is empty while no variable has been seen.
struct Poly {
  std::string var;
  std::map<std::uint64_t, CycleSet> terms;
};

// Thrown internally when the shape falls outside the supported forms.
struct ShapeError {
  std::string reason;
};

void merge_var(Poly& poly, const std::string& var) {
  if (var.empty()) return;
  if (poly.var.empty()) {
    poly.var = var;
  } else if (poly.var != var) {
    throw ShapeError{"more than one distinct variable ('" + poly.var + "', '" + var + "')"};
  }
}

void add_term(Poly& poly, std::uint64_t exponent, const CycleSet& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = poly.terms.emplace(exponent, coefficient);
  if (!inserted) it->second = add(it->second, coefficient);
}

Poly poly_add(Poly a, const Poly& b) {
  merge_var(a, b.var);
  for (const auto& [exp, coeff] : b.terms) add_term(a, exp, coeff);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  out.var = a.var;
  merge_var(out, b.var);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      add_term(out, checked_add(ea, eb), mul(ca, cb));
    }
  }
  return out;
}

Poly poly_pow(const Poly& base, std::uint64_t w) {
  Poly result;
  result.var = base.var;
  result.terms.emplace(0, CycleSet::one());
  Poly acc = base;
  while (w > 0) {
    if (w & 1) result = poly_mul(result, acc);
    w >>= 1;
    if (w > 0) acc = poly_mul(acc, acc);
  }
  return result;
}

Poly to_poly(const ExprPtr& expr) {
  return std::visit(
      [](const auto& node) -> Poly {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          Poly p;
          add_term(p, 0, node.value);
          return p;
        } else if constexpr (std::is_same_v<T, VarNode>) {
          Poly p;
          p.var = node.name;
          p.terms.emplace(1, CycleSet::one());
          return p;
        } else if constexpr (std::is_same_v<T, AddNode>) {
          Poly acc;
          for (const ExprPtr& child : node.children) acc = poly_add(acc, to_poly(child));
          return acc;
        } else if constexpr (std::is_same_v<T, MulNode>) {
          Poly acc;
          acc.terms.emplace(0, CycleSet::one());
          for (const ExprPtr& child : node.children) acc = poly_mul(acc, to_poly(child));
          return acc;
        } else {
          return poly_pow(to_poly(node.base), node.exponent);
        }
      },
      expr->node);
}

}  // namespace

Classification classify(const ExprPtr& lhs, const ExprPtr& rhs) {
  try {
    const Poly right = to_poly(rhs);
    if (!right.var.empty() && !right.terms.empty() && right.terms.rbegin()->first > 0) {
      return UnsupportedForm{"right-hand side must be ground"};
    }
    CycleSet target;
    if (auto it = right.terms.find(0); it != right.terms.end()) target = it->second;

    const Poly left = to_poly(lhs);
    if (left.terms.empty()) return UnsupportedForm{"left-hand side is the empty graph"};
    if (left.terms.count(0)) {
      return UnsupportedForm{"left-hand side has a constant addend"};
    }
    if (left.var.empty()) return UnsupportedForm{"no unknown on the left-hand side"};
    if (left.terms.size() > 1 || left.terms.begin()->first != 1) {
      return UnsupportedForm{"the unknown appears with a power other than 1"};
    }
    const CycleSet& coefficient = left.terms.begin()->second;

    if (target.is_zero()) {
      return UnsupportedForm{"empty right-hand side (no cycles to produce)"};
    }

    if (coefficient.entries().size() == 1) {
      const auto& [p, m] = coefficient.entries().front();
      if (target.entries().size() == 1) {
        const auto& [q, n] = target.entries().front();
        if (m == 1) return BasicForm{p, q, n};
        return ScaledForm{m, p, q, n};
      }
      MultiTargetForm form;
      form.m = m;
      form.p = p;
      for (const CycleEntry& e : target.entries()) form.targets.emplace_back(e.count, e.length);
      return form;
    }
    if (target.entries().size() == 1) {
      SumLhsForm form;
      for (const CycleEntry& e : coefficient.entries()) {
        form.monomials.emplace_back(e.count, e.length);
      }
      form.q = target.entries().front().length;
      form.n = target.entries().front().count;
      return form;
    }
    return UnsupportedForm{"sum coefficient with a multi-size right-hand side"};
  } catch (const ShapeError& err) {
    return UnsupportedForm{err.reason};
  }
}

}  // namespace cyclering
