#pragma once

#include "setheory/procl/ast.hpp"

#include <map>

namespace setheory::procl {

/// Kinds of project entity an expression can talk about.
enum class EntityKind { phase, sprint, meeting, milestone, product, increment, work };

std::string_view entity_name(EntityKind kind);

/// Element kind bound by a binding (a phase binding binds one phase, a
/// `sprints` binding a sequence of sprints, and so on).
EntityKind element_kind(BindingKind kind);

struct AttributeInfo
{
  ValueType type;
  bool optional = false; ///< may be absent on a recorded entity
};

/// Attribute schema per entity kind.
class AttributeSchema
{
public:
  /// The fixed schema the trace format provides.
  static const AttributeSchema& builtin();

  void add(EntityKind kind, std::string name, AttributeInfo info);
  const AttributeInfo* find(EntityKind kind, std::string_view attribute) const;
  const std::map<std::string, AttributeInfo, std::less<>>& attributes(EntityKind kind) const;

private:
  std::map<EntityKind, std::map<std::string, AttributeInfo, std::less<>>> table_;
};

class TypeError : public ProclError
{
  using ProclError::ProclError;
};

using BindingTable = std::map<std::string, BindingDecl, std::less<>>;

/// Returns a copy of `expr` with every node's type filled in.
ExprPtr typecheck_expr(const Expr& expr, const BindingTable& bindings,
                       const AttributeSchema& schema = AttributeSchema::builtin());

/// As typecheck_expr, and additionally requires a bool result.
ExprPtr typecheck_rule(const Expr& expr, const BindingTable& bindings,
                       const AttributeSchema& schema = AttributeSchema::builtin());

/// A spec whose rule expressions all carry types.
struct TypedSpec
{
  SpecAst ast;
};

/// Typechecks every rule and override in `ast`. Each process sees the
/// bindings declared along its `extends` chain; parents are looked up in
/// `ast` first and then in `inherited`.
TypedSpec typecheck(const SpecAst& ast, const AttributeSchema& schema = AttributeSchema::builtin(),
                    const std::map<std::string, ProcessDef, std::less<>>* inherited = nullptr);

} // namespace setheory::procl
