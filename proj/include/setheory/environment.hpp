#pragma once

// The binding environment a process rule is evaluated in: binding names
// mapped onto entities of one project.

#include "setheory/ontology.hpp"
#include "setheory/procl/ast.hpp"

#include <map>
#include <variant>

namespace setheory {

struct IncrementRef
{
  const Milestone* milestone;
  const ProductIncrement* increment;
  friend bool operator==(const IncrementRef&, const IncrementRef&) = default;
};

/// Non-owning reference to one entity of a project.
using EntityRef = std::variant<const Phase*, const Sprint*, const Meeting*, const Milestone*, const Product*,
                               IncrementRef, const WorkAssignment*>;

/// Identifying ids of an entity, used as witnesses in reports.
std::vector<std::string> entity_ids(const EntityRef& ref);

/// Short description such as "sprint 's2'" for diagnostics.
std::string describe(const EntityRef& ref);

/// An attribute read from an entity; monostate when the entity does not
/// record it (an unfinished phase has no end_time).
using AttributeValue = std::variant<std::monostate, std::int64_t, std::string, bool>;

/// Reads an attribute named in the builtin schema. Unknown names yield
/// monostate; the typechecker rules those out beforehand.
AttributeValue read_attribute(const EntityRef& ref, std::string_view attribute);

struct BoundPhase
{
  const Phase* phase = nullptr; ///< null when absent
  std::string absent_reason;
};

struct BoundCollection
{
  procl::BindingKind kind;
  std::vector<EntityRef> elements;
};

using BoundValue = std::variant<BoundPhase, BoundCollection>;

/// Binding table over a project. The project must outlive the environment.
class Environment
{
public:
  explicit Environment(const Project& project) : project_(&project) {}

  const Project& project() const { return *project_; }

  void bind_phase(const std::string& name, const Phase& phase);
  void mark_absent(const std::string& name, std::string reason);
  void bind_collection(const std::string& name, procl::BindingKind kind, std::vector<EntityRef> elements);

  const BoundValue* find(std::string_view name) const;
  const std::map<std::string, BoundValue, std::less<>>& bindings() const { return bindings_; }

private:
  const Project* project_;
  std::map<std::string, BoundValue, std::less<>> bindings_;
};

/// Every entity of the section a collection binding kind refers to, in
/// input order. Increments are flattened across milestones.
std::vector<EntityRef> collection_elements(const Project& project, procl::BindingKind kind);

} // namespace setheory
