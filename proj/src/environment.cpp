#include "setheory/environment.hpp"

namespace setheory {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};

AttributeValue opt(const std::optional<Timestamp>& t)
{
  if (t)
    return *t;
  return std::monostate{};
}

} // namespace

std::vector<std::string> entity_ids(const EntityRef& ref)
{
  return std::visit(overloaded{
                        [](const IncrementRef& r) { return std::vector<std::string>{r.increment->product_id, r.milestone->id}; },
                        [](const WorkAssignment* w) { return std::vector<std::string>{w->person_id, w->product_id}; },
                        [](const auto* e) { return std::vector<std::string>{e->id}; },
                    },
                    ref);
}

std::string describe(const EntityRef& ref)
{
  return std::visit(overloaded{
                        [](const Phase* p) { return "phase '" + p->id + "'"; },
                        [](const Sprint* s) { return "sprint '" + s->id + "'"; },
                        [](const Meeting* m) { return "meeting '" + m->id + "'"; },
                        [](const Milestone* m) { return "milestone '" + m->id + "'"; },
                        [](const Product* p) { return "product '" + p->id + "'"; },
                        [](const IncrementRef& r) {
                          return "increment of '" + r.increment->product_id + "' in milestone '" + r.milestone->id + "'";
                        },
                        [](const WorkAssignment* w) {
                          return "work of '" + w->person_id + "' on '" + w->product_id + "'";
                        },
                    },
                    ref);
}

AttributeValue read_attribute(const EntityRef& ref, std::string_view a)
{
  return std::visit(
      overloaded{
          [&](const Phase* p) -> AttributeValue {
            if (a == "id") return p->id;
            if (a == "start_time") return p->start_time;
            if (a == "end_time") return opt(p->end_time);
            return std::monostate{};
          },
          [&](const Sprint* s) -> AttributeValue {
            if (a == "id") return s->id;
            if (a == "start_time") return s->start_time;
            if (a == "end_time") return s->end_time;
            return std::monostate{};
          },
          [&](const Meeting* m) -> AttributeValue {
            if (a == "id") return m->id;
            if (a == "kind") return m->kind;
            if (a == "time") return m->time;
            if (a == "sprint_id" && m->sprint_id) return *m->sprint_id;
            return std::monostate{};
          },
          [&](const Milestone* m) -> AttributeValue {
            if (a == "id") return m->id;
            if (a == "due_time") return m->due_time;
            return std::monostate{};
          },
          [&](const Product* p) -> AttributeValue {
            if (a == "id") return p->id;
            if (a == "name") return p->name;
            if (a == "kind") return p->kind.label();
            if (a == "pre_existing") return p->pre_existing;
            return std::monostate{};
          },
          [&](const IncrementRef& r) -> AttributeValue {
            if (a == "product_id") return r.increment->product_id;
            if (a == "variant") return r.increment->variant.label();
            return std::monostate{};
          },
          [&](const WorkAssignment* w) -> AttributeValue {
            if (a == "person_id") return w->person_id;
            if (a == "product_id") return w->product_id;
            if (a == "start_time") return w->start_time;
            if (a == "end_time") return opt(w->end_time);
            return std::monostate{};
          },
      },
      ref);
}

void Environment::bind_phase(const std::string& name, const Phase& phase)
{
  bindings_.insert_or_assign(name, BoundPhase{&phase, {}});
}

void Environment::mark_absent(const std::string& name, std::string reason)
{
  bindings_.insert_or_assign(name, BoundPhase{nullptr, std::move(reason)});
}

void Environment::bind_collection(const std::string& name, procl::BindingKind kind, std::vector<EntityRef> elements)
{
  bindings_.insert_or_assign(name, BoundCollection{kind, std::move(elements)});
}

const BoundValue* Environment::find(std::string_view name) const
{
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::vector<EntityRef> collection_elements(const Project& project, procl::BindingKind kind)
{
  using procl::BindingKind;
  std::vector<EntityRef> out;
  auto all = [&](const auto& section) {
    for (const auto& e : section)
      out.emplace_back(&e);
  };
  switch (kind) {
    case BindingKind::phase: break;
    case BindingKind::sprint_collection: all(project.sprints); break;
    case BindingKind::meeting_collection: all(project.meetings); break;
    case BindingKind::milestone_collection: all(project.milestones); break;
    case BindingKind::product_collection: all(project.products); break;
    case BindingKind::work_collection: all(project.work_assignments); break;
    case BindingKind::increment_collection:
      for (const auto& m : project.milestones)
        for (const auto& inc : m.elements)
          out.emplace_back(IncrementRef{&m, &inc});
      break;
  }
  return out;
}

} // namespace setheory
