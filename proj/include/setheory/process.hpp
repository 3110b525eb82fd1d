#pragma once

// Processes as named, ordered collections of boolean rules, and the
// extend/override/remove composition that produces organization variants.

#include "setheory/procl/ast.hpp"
#include "setheory/procl/typecheck.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace setheory {

struct ProcessRule
{
  std::string name;
  procl::ExprPtr expr; ///< typechecked, bool-valued
  bool mandatory = true;
  std::string origin; ///< process that contributed this version of the rule

  friend bool operator==(const ProcessRule& a, const ProcessRule& b)
  {
    return a.name == b.name && a.mandatory == b.mandatory && a.origin == b.origin && procl::same_expr(a.expr, b.expr);
  }
};

using EntityBinding = procl::BindingDecl;

struct Process
{
  std::string name;
  std::vector<EntityBinding> bindings;
  std::vector<ProcessRule> rules; ///< keyed by name, in rule_set order
  std::vector<std::string> lineage; ///< root ancestor first, ends with name

  const ProcessRule* find_rule(std::string_view rule_name) const;
  const EntityBinding* find_binding(std::string_view binding_name) const;
  procl::BindingTable binding_table() const;
};

enum class EditAction { add_rule, override_rule, remove_rule, add_binding };

/// One edit a process definition applies on top of what it inherits.
struct VariantEdit
{
  EditAction action;
  std::variant<ProcessRule, EntityBinding, std::string> payload; ///< rule, binding, or removed rule name
};

/// The edit list a raw definition contributes, in declaration order.
std::vector<VariantEdit> edits_of(const procl::ProcessDef& def);

class ProcessError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Raw (unflattened) process definitions keyed by name.
class ProcessRegistry
{
public:
  /// Throws ProcessError if a definition with the same name exists.
  void add(procl::ProcessDef def);
  /// Parses `source` and adds every definition in it. Returns the names
  /// added, in file order.
  std::vector<std::string> add_source(std::string_view source);

  const procl::ProcessDef* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::vector<std::string> names() const;
  const std::map<std::string, procl::ProcessDef, std::less<>>& definitions() const { return defs_; }

private:
  std::map<std::string, procl::ProcessDef, std::less<>> defs_;
};

/// Flattens `name` over its extends chain: ancestor edits first, each
/// descendant's edits in order. Rule expressions are typechecked against
/// the flattened bindings.
Process resolve_process(std::string_view name, const ProcessRegistry& registry,
                        const procl::AttributeSchema& schema = procl::AttributeSchema::builtin());

struct RuleSummary
{
  std::string name;
  std::string origin;
  bool mandatory;
  friend bool operator==(const RuleSummary&, const RuleSummary&) = default;
};

std::vector<RuleSummary> rule_set(const Process& process);

} // namespace setheory
