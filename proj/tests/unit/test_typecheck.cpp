#include "doctest.h"

#include "setheory/library.hpp"
#include "setheory/procl/parser.hpp"
#include "setheory/procl/typecheck.hpp"

#include <string>

using namespace setheory::procl;

namespace {

BindingTable table()
{
  BindingTable t;
  auto add = [&](BindingKind k, const char* name) { t.emplace(name, BindingDecl{k, name, false, {}}); };
  add(BindingKind::phase, "req");
  add(BindingKind::phase, "design");
  add(BindingKind::sprint_collection, "sprints");
  add(BindingKind::meeting_collection, "meetings");
  add(BindingKind::product_collection, "products");
  add(BindingKind::increment_collection, "incs");
  add(BindingKind::work_collection, "work");
  add(BindingKind::milestone_collection, "ms");
  return t;
}

ValueType type_of(const char* src) { return typecheck_expr(*parse_expression(src), table())->type; }

std::string rule_error(const char* src)
{
  try {
    typecheck_rule(*parse_expression(src), table());
  } catch (const TypeError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("well-typed rules")
{
  CHECK(typecheck_rule(*parse_expression("1 + 2 >= 2"), table())->type == ValueType::boolean);
  CHECK(typecheck_rule(*parse_expression("forall s in sprints: s.end_time - s.start_time <= 30"), table())->type ==
        ValueType::boolean);
  CHECK(type_of("design.start_time >= req.end_time") == ValueType::boolean);
  CHECK(type_of("count(meetings) + 1") == ValueType::integer);
  CHECK(type_of("\"a\"") == ValueType::string);
  CHECK(type_of("exists p in products: p.pre_existing == true") == ValueType::boolean);
  CHECK(type_of("exists i in incs: i.variant == \"update\" and i.product_id != \"x\"") == ValueType::boolean);
  CHECK(type_of("forall w in work: w.end_time >= w.start_time") == ValueType::boolean);
  CHECK(type_of("forall m in ms: m.due_time > 0") == ValueType::boolean);
  CHECK(type_of("exists_entity(req) and exists_entity(sprints)") == ValueType::boolean);
}

TEST_CASE("types are recorded on every node")
{
  auto e = typecheck_expr(*parse_expression("req.end_time + 1 > 2"), table());
  const auto& cmp = std::get<Binary>(e->node);
  CHECK(cmp.lhs->type == ValueType::integer);
  CHECK(std::get<Binary>(cmp.lhs->node).lhs->type == ValueType::integer);
  CHECK(cmp.rhs->type == ValueType::integer);
}

TEST_CASE("type errors")
{
  CHECK(contains(rule_error("design.start_time >= req.kind"), "unknown attribute 'kind'"));
  CHECK(contains(rule_error("1 + 2"), "expected bool"));
  CHECK(contains(rule_error("1 == \"a\""), "type mismatch"));
  CHECK(contains(rule_error("\"a\" < \"b\""), "expects int"));
  CHECK(contains(rule_error("not 3"), "expects bool"));
  CHECK(contains(rule_error("true and 1"), "expects bool"));
  CHECK(contains(rule_error("ghost.start_time > 0"), "unknown binding 'ghost'"));
  CHECK(contains(rule_error("forall s in req: true"), "not a collection"));
  CHECK(contains(rule_error("forall s in nothing: true"), "unknown binding"));
  CHECK(contains(rule_error("sprints.start_time > 0"), "collection binding"));
  CHECK(contains(rule_error("req == req"), "select an attribute"));
  CHECK(contains(rule_error("req.start_time.x > 0"), "no attributes"));
  CHECK(contains(rule_error("exists_entity(ghost)"), "unknown binding"));
  CHECK(contains(rule_error("count(req) > 0"), "not a collection"));
  CHECK(contains(rule_error("forall req in sprints: true"), "shadows"));
  CHECK(contains(rule_error("forall s in sprints: exists s in meetings: true"), "shadows"));
  CHECK(contains(rule_error("forall s in sprints: forall t in s: true"), "quantifier variable"));
}

TEST_CASE("type errors carry the position of the offending node")
{
  try {
    typecheck_rule(*parse_expression("true and\n  design.kind == \"x\""), table());
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 3);
  }
}

TEST_CASE("quantifier variables go out of scope")
{
  CHECK(contains(rule_error("(forall s in sprints: true) and s.start_time > 0"), "unknown binding 's'"));
  CHECK(rule_error("(forall s in sprints: true) and (exists s in sprints: true)").empty());
}

TEST_CASE("spec-level typecheck sees inherited bindings")
{
  SpecAst ast = parse_source("process A { requires phase a; }\n"
                             "process B extends A { requires phase b; rule r: b.start_time >= a.end_time; }");
  TypedSpec typed = typecheck(ast);
  const auto& rule = std::get<RuleDef>(typed.ast.processes[1].items[1]);
  CHECK(rule.expr->type == ValueType::boolean);

  CHECK_THROWS_AS(typecheck(parse_source("process A { rule r: a.start_time > 0; }")), TypeError);
  CHECK_THROWS_AS(typecheck(parse_source("process A extends Missing { }")), TypeError);

  std::map<std::string, ProcessDef, std::less<>> inherited;
  for (auto& def : parse_source("process Base { requires sprints ss; }").processes)
    inherited.emplace(def.name, def);
  CHECK_NOTHROW(typecheck(parse_source("process V extends Base { rule r: count(ss) > 0; }"),
                          AttributeSchema::builtin(), &inherited));
}

TEST_CASE("schema table")
{
  const auto& s = AttributeSchema::builtin();
  CHECK(s.find(EntityKind::phase, "end_time")->optional);
  CHECK_FALSE(s.find(EntityKind::phase, "start_time")->optional);
  CHECK(s.find(EntityKind::meeting, "sprint_id")->type == ValueType::string);
  CHECK(s.find(EntityKind::work, "end_time")->optional);
  CHECK(s.find(EntityKind::phase, "kind") == nullptr);
  CHECK(element_kind(BindingKind::increment_collection) == EntityKind::increment);
}
