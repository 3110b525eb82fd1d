#pragma once

#include "setheory/procl/lexer.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace setheory::procl {

enum class ValueType { unknown, integer, string, boolean };

std::string_view type_name(ValueType t);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { add, sub, lt, le, gt, ge, eq, ne, and_, or_, implies };
enum class Quantifier { forall, exists };

std::string_view spelling(BinaryOp op);

struct IntLit
{
  std::int64_t value;
  friend bool operator==(const IntLit&, const IntLit&) = default;
};

struct StrLit
{
  std::string value;
  friend bool operator==(const StrLit&, const StrLit&) = default;
};

struct BoolLit
{
  bool value;
  friend bool operator==(const BoolLit&, const BoolLit&) = default;
};

/// binding-or-variable ( "." attribute )*
struct Path
{
  std::vector<std::string> segments;
  friend bool operator==(const Path&, const Path&) = default;
};

struct Not
{
  ExprPtr operand;
};

struct Binary
{
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Quantified
{
  Quantifier quantifier;
  std::string variable;
  Path collection;
  ExprPtr body;
};

struct Count
{
  Path collection;
  friend bool operator==(const Count&, const Count&) = default;
};

struct ExistsEntity
{
  std::string binding;
  friend bool operator==(const ExistsEntity&, const ExistsEntity&) = default;
};

bool operator==(const Not&, const Not&);
bool operator==(const Binary&, const Binary&);
bool operator==(const Quantified&, const Quantified&);

using ExprNode = std::variant<IntLit, StrLit, BoolLit, Path, Not, Binary, Quantified, Count, ExistsEntity>;

struct Expr
{
  ExprNode node;
  SourcePos pos;
  ValueType type = ValueType::unknown; ///< filled in by the typechecker

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Deep structural equality; null pointers compare equal only to null.
bool same_expr(const ExprPtr& a, const ExprPtr& b);

template <typename Node>
ExprPtr make_expr(Node node, SourcePos pos = {}, ValueType type = ValueType::unknown)
{
  return std::make_shared<const Expr>(Expr{ExprNode(std::move(node)), pos, type});
}

enum class BindingKind {
  phase,
  sprint_collection,
  meeting_collection,
  milestone_collection,
  product_collection,
  increment_collection,
  work_collection,
};

/// DSL keyword for a binding kind ("phase", "sprints", ...).
std::string_view keyword(BindingKind kind);
std::optional<BindingKind> binding_kind_from_keyword(std::string_view word);
bool is_collection(BindingKind kind);

struct BindingDecl
{
  BindingKind kind;
  std::string name;
  bool optional = false;
  SourcePos pos;
  friend bool operator==(const BindingDecl&, const BindingDecl&) = default;
};

struct RuleDef
{
  std::string name;
  ExprPtr expr;
  bool optional = false;
  SourcePos pos;
};

struct OverrideRule
{
  std::string name;
  ExprPtr expr;
  SourcePos pos;
};

struct RemoveRule
{
  std::string name;
  SourcePos pos;
  friend bool operator==(const RemoveRule&, const RemoveRule&) = default;
};

bool operator==(const RuleDef&, const RuleDef&);
bool operator==(const OverrideRule&, const OverrideRule&);

using Item = std::variant<BindingDecl, RuleDef, OverrideRule, RemoveRule>;

struct ProcessDef
{
  std::string name;
  std::optional<std::string> extends;
  std::vector<Item> items;
  SourcePos pos;
  friend bool operator==(const ProcessDef&, const ProcessDef&) = default;
};

struct SpecAst
{
  std::vector<ProcessDef> processes;
  friend bool operator==(const SpecAst&, const SpecAst&) = default;
};

} // namespace setheory::procl
