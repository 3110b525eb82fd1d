#include "setheory/procl/ast.hpp"

namespace setheory::procl {

std::string_view type_name(ValueType t)
{
  switch (t) {
    case ValueType::integer: return "int";
    case ValueType::string: return "string";
    case ValueType::boolean: return "bool";
    case ValueType::unknown: break;
  }
  return "unknown";
}

std::string_view spelling(BinaryOp op)
{
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::lt: return "<";
    case BinaryOp::le: return "<=";
    case BinaryOp::gt: return ">";
    case BinaryOp::ge: return ">=";
    case BinaryOp::eq: return "==";
    case BinaryOp::ne: return "!=";
    case BinaryOp::and_: return "and";
    case BinaryOp::or_: return "or";
    case BinaryOp::implies: return "implies";
  }
  return "?";
}

bool same_expr(const ExprPtr& a, const ExprPtr& b)
{
  if (!a || !b)
    return !a && !b;
  return a == b || *a == *b;
}

bool operator==(const Not& a, const Not& b) { return same_expr(a.operand, b.operand); }

bool operator==(const Binary& a, const Binary& b)
{
  return a.op == b.op && same_expr(a.lhs, b.lhs) && same_expr(a.rhs, b.rhs);
}

bool operator==(const Quantified& a, const Quantified& b)
{
  return a.quantifier == b.quantifier && a.variable == b.variable && a.collection == b.collection &&
         same_expr(a.body, b.body);
}

bool operator==(const RuleDef& a, const RuleDef& b)
{
  return a.name == b.name && a.optional == b.optional && same_expr(a.expr, b.expr);
}

bool operator==(const OverrideRule& a, const OverrideRule& b)
{
  return a.name == b.name && same_expr(a.expr, b.expr);
}

namespace {

constexpr std::pair<std::string_view, BindingKind> kKindWords[] = {
    {"phase", BindingKind::phase},
    {"sprints", BindingKind::sprint_collection},
    {"meetings", BindingKind::meeting_collection},
    {"milestones", BindingKind::milestone_collection},
    {"products", BindingKind::product_collection},
    {"increments", BindingKind::increment_collection},
    {"work", BindingKind::work_collection},
};

} // namespace

std::string_view keyword(BindingKind kind)
{
  for (const auto& [word, k] : kKindWords)
    if (k == kind)
      return word;
  return "?";
}

std::optional<BindingKind> binding_kind_from_keyword(std::string_view word)
{
  for (const auto& [w, k] : kKindWords)
    if (w == word)
      return k;
  return std::nullopt;
}

bool is_collection(BindingKind kind) { return kind != BindingKind::phase; }

} // namespace setheory::procl
