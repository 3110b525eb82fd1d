#pragma once

// Entity types of the software-engineering ontology and the structural
// invariants ("axioms") every recorded project is expected to satisfy.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setheory {

/// Integer tick count. The unit is the uninterpreted Project::time_unit label.
using Timestamp = std::int64_t;

using ProductId = std::string;
using PersonId = std::string;

enum class ProductKindTag { module, test_plan, document, other };

struct ProductKind
{
  ProductKindTag tag = ProductKindTag::module;
  std::string other_label; ///< only meaningful when tag == other

  /// Lowercase wire label; unknown labels become `other`.
  static ProductKind from_label(std::string_view label);
  std::string label() const;

  friend bool operator==(const ProductKind&, const ProductKind&) = default;
};

struct Product
{
  ProductId id;
  std::string name;
  ProductKind kind;
  std::vector<ProductId> sub_products;
  bool pre_existing = false;

  friend bool operator==(const Product&, const Product&) = default;
};

enum class IncrementVariantTag { creation, update, other };

/// Open enumeration: labels other than creation/update are preserved and
/// ignored by the built-in invariants.
struct IncrementVariant
{
  IncrementVariantTag tag = IncrementVariantTag::creation;
  std::string other_label;

  static IncrementVariant from_label(std::string_view label);
  std::string label() const;

  bool is_creation() const { return tag == IncrementVariantTag::creation; }
  bool is_update() const { return tag == IncrementVariantTag::update; }

  friend bool operator==(const IncrementVariant&, const IncrementVariant&) = default;
};

struct ProductIncrement
{
  IncrementVariant variant;
  ProductId product_id;

  friend bool operator==(const ProductIncrement&, const ProductIncrement&) = default;
};

struct Milestone
{
  std::string id;
  std::string name;
  Timestamp due_time = 0;
  std::vector<ProductIncrement> elements;

  friend bool operator==(const Milestone&, const Milestone&) = default;
};

enum class RoleTag { team_member, stakeholder, other };

struct PersonRole
{
  RoleTag tag = RoleTag::team_member;
  std::string other_label;

  static PersonRole from_label(std::string_view label);
  std::string label() const;

  friend bool operator==(const PersonRole&, const PersonRole&) = default;
};

struct Person
{
  PersonId id;
  std::string name;
  PersonRole role;

  friend bool operator==(const Person&, const Person&) = default;
};

struct WorkAssignment
{
  PersonId person_id;
  ProductId product_id;
  Timestamp start_time = 0;
  std::optional<Timestamp> end_time;

  friend bool operator==(const WorkAssignment&, const WorkAssignment&) = default;
};

struct Phase
{
  std::string id;
  std::string role_label;
  Timestamp start_time = 0;
  std::optional<Timestamp> end_time; ///< absent while the phase is ongoing

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct Sprint
{
  std::string id;
  Timestamp start_time = 0;
  Timestamp end_time = 0;

  friend bool operator==(const Sprint&, const Sprint&) = default;
};

struct Meeting
{
  std::string id;
  std::string kind;
  Timestamp time = 0;
  std::optional<std::string> sprint_id;

  friend bool operator==(const Meeting&, const Meeting&) = default;
};

/// Root aggregate: the recorded history a process is checked against.
/// Sections keep input order; lookups by id return the first match.
struct Project
{
  std::string id;
  std::string name;
  std::string time_unit = "tick";
  std::vector<ProductId> targets;
  std::vector<Milestone> milestones;
  std::vector<Product> products;
  std::vector<Person> people;
  std::vector<Phase> phases;
  std::vector<Sprint> sprints;
  std::vector<Meeting> meetings;
  std::vector<WorkAssignment> work_assignments;

  const Product* find_product(std::string_view id) const;
  const Person* find_person(std::string_view id) const;
  const Sprint* find_sprint(std::string_view id) const;

  friend bool operator==(const Project&, const Project&) = default;
};

/// Thrown when an operation is asked about an id the project does not hold.
class LookupError : public std::runtime_error
{
public:
  explicit LookupError(std::string id);
  const std::string& id() const { return id_; }

private:
  std::string id_;
};

/// The invariant catalog, in reporting order.
enum class InvariantCode {
  id_unique,
  subproduct_acyclic,
  milestone_order,
  increment_target,
  update_exists,
  create_once,
  work_delivery,
  phase_times,
  ref_exists,
};

inline constexpr InvariantCode kInvariantCatalog[] = {
    InvariantCode::id_unique,        InvariantCode::subproduct_acyclic,
    InvariantCode::milestone_order,  InvariantCode::increment_target,
    InvariantCode::update_exists,    InvariantCode::create_once,
    InvariantCode::work_delivery,    InvariantCode::phase_times,
    InvariantCode::ref_exists,
};

/// "INV-INCREMENT-TARGET" etc.
std::string_view code_name(InvariantCode code);
std::optional<InvariantCode> code_from_name(std::string_view name);

struct InvariantViolation
{
  InvariantCode code;
  std::vector<std::string> entity_ids;
  std::string message;

  friend bool operator==(const InvariantViolation&, const InvariantViolation&) = default;
};

/// `root` plus every product transitively reachable through sub_products.
/// Dangling sub-product references are not followed, so the result only
/// holds ids present in project.products.
std::set<ProductId> product_closure(const Project& project, std::string_view root);

/// Union of the closures of every product named by some milestone increment.
/// Increment ids with no matching product are included as-is.
std::set<ProductId> delivered_products(const Project& project);

/// Union of the closures of every existing target.
std::set<ProductId> target_closure(const Project& project);

/// Every violation of the invariant catalog, sorted by catalog order and
/// then by entity ids. Empty iff the project is axiom-consistent.
std::vector<InvariantViolation> check_invariants(const Project& project);

} // namespace setheory
