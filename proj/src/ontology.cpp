#include "setheory/ontology.hpp"

#include <algorithm>
#include <map>

namespace setheory {

ProductKind ProductKind::from_label(std::string_view label)
{
  if (label == "module")
    return {ProductKindTag::module, {}};
  if (label == "test_plan")
    return {ProductKindTag::test_plan, {}};
  if (label == "document")
    return {ProductKindTag::document, {}};
  return {ProductKindTag::other, std::string(label)};
}

std::string ProductKind::label() const
{
  switch (tag) {
    case ProductKindTag::module: return "module";
    case ProductKindTag::test_plan: return "test_plan";
    case ProductKindTag::document: return "document";
    case ProductKindTag::other: break;
  }
  return other_label;
}

IncrementVariant IncrementVariant::from_label(std::string_view label)
{
  if (label == "creation")
    return {IncrementVariantTag::creation, {}};
  if (label == "update")
    return {IncrementVariantTag::update, {}};
  return {IncrementVariantTag::other, std::string(label)};
}

std::string IncrementVariant::label() const
{
  switch (tag) {
    case IncrementVariantTag::creation: return "creation";
    case IncrementVariantTag::update: return "update";
    case IncrementVariantTag::other: break;
  }
  return other_label;
}

PersonRole PersonRole::from_label(std::string_view label)
{
  if (label == "team_member")
    return {RoleTag::team_member, {}};
  if (label == "stakeholder")
    return {RoleTag::stakeholder, {}};
  return {RoleTag::other, std::string(label)};
}

std::string PersonRole::label() const
{
  switch (tag) {
    case RoleTag::team_member: return "team_member";
    case RoleTag::stakeholder: return "stakeholder";
    case RoleTag::other: break;
  }
  return other_label;
}

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id)
{
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.id == id; });
  return it == items.end() ? nullptr : &*it;
}

// Sub-product edges, merged over every record carrying the same id and
// restricted to targets that exist.
using Adjacency = std::map<ProductId, std::set<ProductId>>;

Adjacency product_graph(const Project& project)
{
  Adjacency graph;
  for (const auto& p : project.products)
    graph[p.id];
  for (const auto& p : project.products)
    for (const auto& sub : p.sub_products)
      if (graph.count(sub))
        graph[p.id].insert(sub);
  return graph;
}

std::set<ProductId> reachable(const Adjacency& graph, const ProductId& root)
{
  std::set<ProductId> seen{root};
  std::vector<ProductId> stack{root};
  while (!stack.empty()) {
    ProductId cur = std::move(stack.back());
    stack.pop_back();
    auto it = graph.find(cur);
    if (it == graph.end())
      continue;
    for (const auto& next : it->second)
      if (seen.insert(next).second)
        stack.push_back(next);
  }
  return seen;
}

} // namespace

const Product* Project::find_product(std::string_view pid) const { return find_by_id(products, pid); }
const Person* Project::find_person(std::string_view pid) const { return find_by_id(people, pid); }
const Sprint* Project::find_sprint(std::string_view sid) const { return find_by_id(sprints, sid); }

LookupError::LookupError(std::string id)
    : std::runtime_error("unknown product id '" + id + "'")
    , id_(std::move(id))
{
}

std::string_view code_name(InvariantCode code)
{
  switch (code) {
    case InvariantCode::id_unique: return "INV-ID-UNIQUE";
    case InvariantCode::subproduct_acyclic: return "INV-SUBPRODUCT-ACYCLIC";
    case InvariantCode::milestone_order: return "INV-MILESTONE-ORDER";
    case InvariantCode::increment_target: return "INV-INCREMENT-TARGET";
    case InvariantCode::update_exists: return "INV-UPDATE-EXISTS";
    case InvariantCode::create_once: return "INV-CREATE-ONCE";
    case InvariantCode::work_delivery: return "INV-WORK-DELIVERY";
    case InvariantCode::phase_times: return "INV-PHASE-TIMES";
    case InvariantCode::ref_exists: return "INV-REF-EXISTS";
  }
  return "INV-UNKNOWN";
}

std::optional<InvariantCode> code_from_name(std::string_view name)
{
  for (auto code : kInvariantCatalog)
    if (code_name(code) == name)
      return code;
  return std::nullopt;
}

std::set<ProductId> product_closure(const Project& project, std::string_view root)
{
  if (!project.find_product(root))
    throw LookupError(std::string(root));
  return reachable(product_graph(project), ProductId(root));
}

std::set<ProductId> delivered_products(const Project& project)
{
  const Adjacency graph = product_graph(project);
  std::set<ProductId> out;
  for (const auto& m : project.milestones)
    for (const auto& inc : m.elements) {
      if (!graph.count(inc.product_id)) {
        out.insert(inc.product_id);
        continue;
      }
      out.merge(reachable(graph, inc.product_id));
    }
  return out;
}

std::set<ProductId> target_closure(const Project& project)
{
  const Adjacency graph = product_graph(project);
  std::set<ProductId> out;
  for (const auto& t : project.targets)
    if (graph.count(t))
      out.merge(reachable(graph, t));
  return out;
}

namespace {

class ViolationSink
{
public:
  void add(InvariantCode code, std::vector<std::string> ids, std::string message)
  {
    items_.push_back({code, std::move(ids), std::move(message)});
  }

  std::vector<InvariantViolation> sorted() &&
  {
    std::stable_sort(items_.begin(), items_.end(), [](const auto& a, const auto& b) {
      if (a.code != b.code)
        return a.code < b.code;
      if (a.entity_ids != b.entity_ids)
        return a.entity_ids < b.entity_ids;
      return a.message < b.message;
    });
    return std::move(items_);
  }

private:
  std::vector<InvariantViolation> items_;
};

template <typename T>
void check_unique_ids(ViolationSink& sink, const std::vector<T>& items, std::string_view section)
{
  std::map<std::string, int> counts;
  for (const auto& x : items)
    ++counts[x.id];
  for (const auto& [id, n] : counts)
    if (n > 1)
      sink.add(InvariantCode::id_unique, {id},
               "duplicate " + std::string(section) + " id '" + id + "'");
}

void check_id_unique(ViolationSink& sink, const Project& p)
{
  check_unique_ids(sink, p.products, "product");
  check_unique_ids(sink, p.milestones, "milestone");
  check_unique_ids(sink, p.people, "person");
  check_unique_ids(sink, p.phases, "phase");
  check_unique_ids(sink, p.sprints, "sprint");
  check_unique_ids(sink, p.meetings, "meeting");
  for (const auto& m : p.milestones) {
    std::map<ProductId, int> counts;
    for (const auto& inc : m.elements)
      ++counts[inc.product_id];
    for (const auto& [pid, n] : counts)
      if (n > 1)
        sink.add(InvariantCode::id_unique, {pid, m.id},
                 "milestone '" + m.id + "' lists product '" + pid + "' more than once");
  }
}

void check_acyclic(ViolationSink& sink, const Adjacency& graph)
{
  for (const auto& [id, children] : graph) {
    bool on_cycle = false;
    for (const auto& child : children)
      if (reachable(graph, child).count(id)) {
        on_cycle = true;
        break;
      }
    if (on_cycle)
      sink.add(InvariantCode::subproduct_acyclic, {id},
               "product '" + id + "' is its own transitive sub-product");
  }
}

void check_milestone_order(ViolationSink& sink, const Project& p)
{
  for (std::size_t i = 0; i + 1 < p.milestones.size(); ++i) {
    const auto& a = p.milestones[i];
    const auto& b = p.milestones[i + 1];
    if (b.due_time <= a.due_time)
      sink.add(InvariantCode::milestone_order, {a.id, b.id},
               "milestone '" + b.id + "' is due at " + std::to_string(b.due_time) +
                   ", not after '" + a.id + "' at " + std::to_string(a.due_time));
  }
}

void check_increments(ViolationSink& sink, const Project& p)
{
  const auto deliverable = target_closure(p);
  std::set<ProductId> pre_existing;
  for (const auto& prod : p.products)
    if (prod.pre_existing)
      pre_existing.insert(prod.id);

  std::set<ProductId> created_before;
  std::map<ProductId, int> creations;
  for (const auto& m : p.milestones) {
    for (const auto& inc : m.elements) {
      const auto& pid = inc.product_id;
      if (!deliverable.count(pid))
        sink.add(InvariantCode::increment_target, {pid, m.id},
                 "milestone '" + m.id + "' increments product '" + pid +
                     "', which is not part of any project target");
      if (inc.variant.is_update() && !pre_existing.count(pid) && !created_before.count(pid))
        sink.add(InvariantCode::update_exists, {pid, m.id},
                 "milestone '" + m.id + "' updates product '" + pid +
                     "', which is neither pre-existing nor created at an earlier milestone");
      if (inc.variant.is_creation())
        ++creations[pid];
    }
    for (const auto& inc : m.elements)
      if (inc.variant.is_creation())
        created_before.insert(inc.product_id);
  }
  for (const auto& [pid, n] : creations)
    if (n > 1)
      sink.add(InvariantCode::create_once, {pid},
               "product '" + pid + "' is created " + std::to_string(n) + " times");
}

void check_work_delivery(ViolationSink& sink, const Project& p)
{
  const auto delivered = delivered_products(p);
  for (const auto& w : p.work_assignments)
    if (!delivered.count(w.product_id))
      sink.add(InvariantCode::work_delivery, {w.product_id, w.person_id},
               "person '" + w.person_id + "' works on product '" + w.product_id +
                   "', which is not part of any planned delivery");
}

void check_times(ViolationSink& sink, const Project& p)
{
  for (const auto& ph : p.phases)
    if (ph.end_time && *ph.end_time < ph.start_time)
      sink.add(InvariantCode::phase_times, {ph.id}, "phase '" + ph.id + "' ends before it starts");
  for (const auto& s : p.sprints)
    if (s.end_time <= s.start_time)
      sink.add(InvariantCode::phase_times, {s.id},
               "sprint '" + s.id + "' does not end after it starts");
  for (const auto& w : p.work_assignments)
    if (w.end_time && *w.end_time < w.start_time)
      sink.add(InvariantCode::phase_times, {w.product_id, w.person_id},
               "work of '" + w.person_id + "' on '" + w.product_id + "' ends before it starts");
}

void check_references(ViolationSink& sink, const Project& p)
{
  auto missing = [&](std::vector<std::string> ids, const std::string& what) {
    sink.add(InvariantCode::ref_exists, std::move(ids), what);
  };
  for (const auto& t : p.targets)
    if (!p.find_product(t))
      missing({t}, "target '" + t + "' is not a known product");
  for (const auto& prod : p.products)
    for (const auto& sub : prod.sub_products)
      if (!p.find_product(sub))
        missing({sub, prod.id}, "product '" + prod.id + "' lists unknown sub-product '" + sub + "'");
  for (const auto& m : p.milestones)
    for (const auto& inc : m.elements)
      if (!p.find_product(inc.product_id))
        missing({inc.product_id, m.id},
                "milestone '" + m.id + "' increments unknown product '" + inc.product_id + "'");
  for (const auto& w : p.work_assignments) {
    if (!p.find_person(w.person_id))
      missing({w.person_id, w.product_id}, "work assignment names unknown person '" + w.person_id + "'");
    if (!p.find_product(w.product_id))
      missing({w.product_id, w.person_id}, "work assignment names unknown product '" + w.product_id + "'");
  }
  for (const auto& mt : p.meetings)
    if (mt.sprint_id && !p.find_sprint(*mt.sprint_id))
      missing({*mt.sprint_id, mt.id},
              "meeting '" + mt.id + "' refers to unknown sprint '" + *mt.sprint_id + "'");
}

} // namespace

std::vector<InvariantViolation> check_invariants(const Project& project)
{
  ViolationSink sink;
  check_id_unique(sink, project);
  check_acyclic(sink, product_graph(project));
  check_milestone_order(sink, project);
  check_increments(sink, project);
  check_work_delivery(sink, project);
  check_times(sink, project);
  check_references(sink, project);
  return std::move(sink).sorted();
}

} // namespace setheory
