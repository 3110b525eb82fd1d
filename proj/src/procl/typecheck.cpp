#include "setheory/procl/typecheck.hpp"

#include "setheory/procl/printer.hpp"

#include <set>

namespace setheory::procl {

std::string_view entity_name(EntityKind kind)
{
  switch (kind) {
    case EntityKind::phase: return "phase";
    case EntityKind::sprint: return "sprint";
    case EntityKind::meeting: return "meeting";
    case EntityKind::milestone: return "milestone";
    case EntityKind::product: return "product";
    case EntityKind::increment: return "increment";
    case EntityKind::work: return "work item";
  }
  return "?";
}

EntityKind element_kind(BindingKind kind)
{
  switch (kind) {
    case BindingKind::phase: return EntityKind::phase;
    case BindingKind::sprint_collection: return EntityKind::sprint;
    case BindingKind::meeting_collection: return EntityKind::meeting;
    case BindingKind::milestone_collection: return EntityKind::milestone;
    case BindingKind::product_collection: return EntityKind::product;
    case BindingKind::increment_collection: return EntityKind::increment;
    case BindingKind::work_collection: return EntityKind::work;
  }
  return EntityKind::phase;
}

const AttributeSchema& AttributeSchema::builtin()
{
  static const AttributeSchema schema = [] {
    constexpr auto I = ValueType::integer;
    constexpr auto S = ValueType::string;
    constexpr auto B = ValueType::boolean;
    AttributeSchema s;
    s.add(EntityKind::phase, "id", {S});
    s.add(EntityKind::phase, "start_time", {I});
    s.add(EntityKind::phase, "end_time", {I, true});
    s.add(EntityKind::sprint, "id", {S});
    s.add(EntityKind::sprint, "start_time", {I});
    s.add(EntityKind::sprint, "end_time", {I});
    s.add(EntityKind::meeting, "id", {S});
    s.add(EntityKind::meeting, "kind", {S});
    s.add(EntityKind::meeting, "time", {I});
    s.add(EntityKind::meeting, "sprint_id", {S, true});
    s.add(EntityKind::milestone, "id", {S});
    s.add(EntityKind::milestone, "due_time", {I});
    s.add(EntityKind::product, "id", {S});
    s.add(EntityKind::product, "name", {S});
    s.add(EntityKind::product, "kind", {S});
    s.add(EntityKind::product, "pre_existing", {B});
    s.add(EntityKind::increment, "product_id", {S});
    s.add(EntityKind::increment, "variant", {S});
    s.add(EntityKind::work, "person_id", {S});
    s.add(EntityKind::work, "product_id", {S});
    s.add(EntityKind::work, "start_time", {I});
    s.add(EntityKind::work, "end_time", {I, true});
    return s;
  }();
  return schema;
}

void AttributeSchema::add(EntityKind kind, std::string name, AttributeInfo info)
{
  table_[kind][std::move(name)] = info;
}

const AttributeInfo* AttributeSchema::find(EntityKind kind, std::string_view attribute) const
{
  auto t = table_.find(kind);
  if (t == table_.end())
    return nullptr;
  auto a = t->second.find(attribute);
  return a == t->second.end() ? nullptr : &a->second;
}

const std::map<std::string, AttributeInfo, std::less<>>& AttributeSchema::attributes(EntityKind kind) const
{
  static const std::map<std::string, AttributeInfo, std::less<>> empty;
  auto t = table_.find(kind);
  return t == table_.end() ? empty : t->second;
}

namespace {

class Checker
{
public:
  Checker(const BindingTable& bindings, const AttributeSchema& schema) : bindings_(bindings), schema_(schema) {}

  ExprPtr check(const Expr& e)
  {
    return std::visit([&](const auto& n) { return visit(n, e.pos); }, e.node);
  }

private:
  [[noreturn]] static void fail(const std::string& msg, SourcePos pos) { throw TypeError(msg, pos); }

  static ExprPtr typed(ExprNode node, SourcePos pos, ValueType t)
  {
    return std::make_shared<const Expr>(Expr{std::move(node), pos, t});
  }

  static void require(const Expr& e, ValueType want, std::string_view context)
  {
    if (e.type != want)
      fail(std::string(context) + " expects " + std::string(type_name(want)) + ", found " +
               std::string(type_name(e.type)) + " in '" + pretty_print(e) + "'",
           e.pos);
  }

  ExprPtr visit(const IntLit& n, SourcePos pos) { return typed(n, pos, ValueType::integer); }
  ExprPtr visit(const StrLit& n, SourcePos pos) { return typed(n, pos, ValueType::string); }
  ExprPtr visit(const BoolLit& n, SourcePos pos) { return typed(n, pos, ValueType::boolean); }

  ExprPtr visit(const Path& p, SourcePos pos)
  {
    const std::string& head = p.segments.front();
    std::optional<EntityKind> entity;
    if (auto v = variables_.find(head); v != variables_.end()) {
      entity = v->second;
    } else if (auto b = bindings_.find(head); b != bindings_.end()) {
      if (is_collection(b->second.kind))
        fail("collection binding '" + head + "' cannot be used as a single entity", pos);
      entity = EntityKind::phase;
    } else {
      fail("unknown binding '" + head + "'", pos);
    }
    if (p.segments.size() == 1)
      fail("entity '" + head + "' used as a value; select an attribute", pos);
    const std::string& attr = p.segments[1];
    const AttributeInfo* info = schema_.find(*entity, attr);
    if (!info)
      fail("unknown attribute '" + attr + "' for " + std::string(entity_name(*entity)) + " '" + head + "'", pos);
    if (p.segments.size() > 2)
      fail("attribute '" + attr + "' has no attributes of its own", pos);
    return typed(p, pos, info->type);
  }

  ExprPtr visit(const Not& n, SourcePos pos)
  {
    ExprPtr operand = check(*n.operand);
    require(*operand, ValueType::boolean, "'not'");
    return typed(Not{operand}, pos, ValueType::boolean);
  }

  ExprPtr visit(const Binary& b, SourcePos pos)
  {
    ExprPtr lhs = check(*b.lhs);
    ExprPtr rhs = check(*b.rhs);
    const std::string ctx = "'" + std::string(spelling(b.op)) + "'";
    ValueType result = ValueType::boolean;
    switch (b.op) {
      case BinaryOp::and_:
      case BinaryOp::or_:
      case BinaryOp::implies:
        require(*lhs, ValueType::boolean, ctx);
        require(*rhs, ValueType::boolean, ctx);
        break;
      case BinaryOp::add:
      case BinaryOp::sub:
        require(*lhs, ValueType::integer, ctx);
        require(*rhs, ValueType::integer, ctx);
        result = ValueType::integer;
        break;
      case BinaryOp::lt:
      case BinaryOp::le:
      case BinaryOp::gt:
      case BinaryOp::ge:
        require(*lhs, ValueType::integer, ctx);
        require(*rhs, ValueType::integer, ctx);
        break;
      case BinaryOp::eq:
      case BinaryOp::ne:
        if (lhs->type != rhs->type)
          fail("type mismatch: " + std::string(type_name(lhs->type)) + " " + std::string(spelling(b.op)) + " " +
                   std::string(type_name(rhs->type)),
               pos);
        break;
    }
    return typed(Binary{b.op, lhs, rhs}, pos, result);
  }

  EntityKind collection(const Path& p, SourcePos pos)
  {
    const std::string& head = p.segments.front();
    if (p.segments.size() != 1)
      fail("collection path must name a collection binding", pos);
    auto b = bindings_.find(head);
    if (b == bindings_.end()) {
      if (variables_.count(head))
        fail("'" + head + "' is a quantifier variable, not a collection", pos);
      fail("unknown binding '" + head + "'", pos);
    }
    if (!is_collection(b->second.kind))
      fail("binding '" + head + "' is a single phase, not a collection", pos);
    return element_kind(b->second.kind);
  }

  ExprPtr visit(const Quantified& q, SourcePos pos)
  {
    const EntityKind elem = collection(q.collection, pos);
    if (bindings_.count(q.variable) || variables_.count(q.variable))
      fail("quantifier variable '" + q.variable + "' shadows an existing name", pos);
    variables_.emplace(q.variable, elem);
    ExprPtr body;
    try {
      body = check(*q.body);
    } catch (...) {
      variables_.erase(q.variable);
      throw;
    }
    variables_.erase(q.variable);
    require(*body, ValueType::boolean, "quantifier body");
    return typed(Quantified{q.quantifier, q.variable, q.collection, body}, pos, ValueType::boolean);
  }

  ExprPtr visit(const Count& c, SourcePos pos)
  {
    collection(c.collection, pos);
    return typed(c, pos, ValueType::integer);
  }

  ExprPtr visit(const ExistsEntity& e, SourcePos pos)
  {
    if (!bindings_.count(e.binding))
      fail("unknown binding '" + e.binding + "'", pos);
    return typed(e, pos, ValueType::boolean);
  }

  const BindingTable& bindings_;
  const AttributeSchema& schema_;
  std::map<std::string, EntityKind, std::less<>> variables_;
};

} // namespace

ExprPtr typecheck_expr(const Expr& expr, const BindingTable& bindings, const AttributeSchema& schema)
{
  return Checker(bindings, schema).check(expr);
}

ExprPtr typecheck_rule(const Expr& expr, const BindingTable& bindings, const AttributeSchema& schema)
{
  ExprPtr typed = typecheck_expr(expr, bindings, schema);
  if (typed->type != ValueType::boolean)
    throw TypeError("rule expression has type " + std::string(type_name(typed->type)) + ", expected bool",
                    expr.pos);
  return typed;
}

TypedSpec typecheck(const SpecAst& ast, const AttributeSchema& schema,
                    const std::map<std::string, ProcessDef, std::less<>>* inherited)
{
  auto lookup = [&](std::string_view name) -> const ProcessDef* {
    for (const auto& p : ast.processes)
      if (p.name == name)
        return &p;
    if (inherited) {
      auto it = inherited->find(name);
      if (it != inherited->end())
        return &it->second;
    }
    return nullptr;
  };

  TypedSpec out{ast};
  for (auto& def : out.ast.processes) {
    BindingTable bindings;
    std::set<std::string> visited;
    for (const ProcessDef* p = &def; p && visited.insert(p->name).second;
         p = p->extends ? lookup(*p->extends) : nullptr) {
      if (p != &def && p->extends && !lookup(*p->extends))
        throw TypeError("process '" + p->name + "' extends unknown process '" + *p->extends + "'", p->pos);
      for (const auto& item : p->items)
        if (const auto* b = std::get_if<BindingDecl>(&item))
          bindings.emplace(b->name, *b);
    }
    if (def.extends && !lookup(*def.extends))
      throw TypeError("process '" + def.name + "' extends unknown process '" + *def.extends + "'", def.pos);

    for (auto& item : def.items) {
      if (auto* r = std::get_if<RuleDef>(&item))
        r->expr = typecheck_rule(*r->expr, bindings, schema);
      else if (auto* o = std::get_if<OverrideRule>(&item))
        o->expr = typecheck_rule(*o->expr, bindings, schema);
    }
  }
  return out;
}

} // namespace setheory::procl
