#include "setheory/procl/eval.hpp"

#include "setheory/procl/printer.hpp"

#include <vector>

namespace setheory::procl {

std::string to_string(const Value& v)
{
  if (v.is_int())
    return std::to_string(v.as_int());
  if (v.is_string())
    return quote(v.as_string());
  if (v.is_bool())
    return v.as_bool() ? "true" : "false";
  return "undetermined (" + v.reason() + ")";
}

namespace {

std::int64_t wrap_add(std::int64_t a, std::int64_t b)
{
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t wrap_sub(std::int64_t a, std::int64_t b)
{
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

class Evaluator
{
public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  Value eval(const Expr& e)
  {
    return std::visit([&](const auto& n) { return visit(n); }, e.node);
  }

  Evaluation top(const Expr& e)
  {
    if (const auto* q = std::get_if<Quantified>(&e.node)) {
      std::optional<EntityRef> witness;
      Value v = quantify(*q, &witness);
      return {std::move(v), witness};
    }
    return {eval(e), std::nullopt};
  }

private:
  Value visit(const IntLit& n) { return n.value; }
  Value visit(const StrLit& n) { return n.value; }
  Value visit(const BoolLit& n) { return n.value; }

  Value visit(const Path& p)
  {
    const std::string& head = p.segments.front();
    const std::string& attr = p.segments.at(1);
    EntityRef entity;
    if (auto v = lookup_variable(head)) {
      entity = *v;
    } else {
      const BoundValue* bound = env_.find(head);
      const auto* phase = bound ? std::get_if<BoundPhase>(bound) : nullptr;
      if (!phase)
        return Value::undetermined("binding '" + head + "' is not bound");
      if (!phase->phase)
        return Value::undetermined(phase->absent_reason);
      entity = phase->phase;
    }
    AttributeValue a = read_attribute(entity, attr);
    return std::visit(
        [&](auto&& x) -> Value {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, std::monostate>)
            return Value::undetermined(describe(entity) + " has no " + attr);
          else
            return Value(std::move(x));
        },
        std::move(a));
  }

  Value visit(const Not& n)
  {
    Value v = eval(*n.operand);
    if (v.is_undetermined())
      return v;
    return !v.as_bool();
  }

  Value visit(const Binary& b)
  {
    switch (b.op) {
      case BinaryOp::and_: {
        Value l = eval(*b.lhs);
        if (l.is_bool() && !l.as_bool())
          return false;
        Value r = eval(*b.rhs);
        if (r.is_bool() && !r.as_bool())
          return false;
        if (l.is_undetermined())
          return l;
        return r;
      }
      case BinaryOp::or_: {
        Value l = eval(*b.lhs);
        if (l.is_bool() && l.as_bool())
          return true;
        Value r = eval(*b.rhs);
        if (r.is_bool() && r.as_bool())
          return true;
        if (l.is_undetermined())
          return l;
        return r;
      }
      case BinaryOp::implies: {
        Value l = eval(*b.lhs);
        if (l.is_bool() && !l.as_bool())
          return true;
        Value r = eval(*b.rhs);
        if (r.is_bool() && r.as_bool())
          return true;
        if (l.is_undetermined())
          return l;
        return r; // l is true here, so the result is r
      }
      default: break;
    }

    Value l = eval(*b.lhs);
    if (l.is_undetermined())
      return l;
    Value r = eval(*b.rhs);
    if (r.is_undetermined())
      return r;
    switch (b.op) {
      case BinaryOp::add: return wrap_add(l.as_int(), r.as_int());
      case BinaryOp::sub: return wrap_sub(l.as_int(), r.as_int());
      case BinaryOp::lt: return l.as_int() < r.as_int();
      case BinaryOp::le: return l.as_int() <= r.as_int();
      case BinaryOp::gt: return l.as_int() > r.as_int();
      case BinaryOp::ge: return l.as_int() >= r.as_int();
      case BinaryOp::eq: return l.storage() == r.storage();
      case BinaryOp::ne: return l.storage() != r.storage();
      default: break;
    }
    return Value::undetermined("unsupported operator");
  }

  Value visit(const Quantified& q) { return quantify(q, nullptr); }

  Value quantify(const Quantified& q, std::optional<EntityRef>* witness)
  {
    const BoundCollection* coll = collection(q.collection.segments.front());
    if (!coll)
      return Value::undetermined("collection '" + q.collection.segments.front() + "' is not bound");
    const bool forall = q.quantifier == Quantifier::forall;
    std::optional<Value> undetermined;
    for (const EntityRef& elem : coll->elements) {
      scope_.emplace_back(q.variable, elem);
      Value v = eval(*q.body);
      scope_.pop_back();
      if (v.is_undetermined()) {
        if (!undetermined)
          undetermined = std::move(v);
        continue;
      }
      // forall stops at the first false, exists at the first true
      if (v.as_bool() != forall) {
        if (witness)
          *witness = elem;
        return !forall;
      }
    }
    if (undetermined)
      return *undetermined;
    return forall;
  }

  Value visit(const Count& c)
  {
    const BoundCollection* coll = collection(c.collection.segments.front());
    if (!coll)
      return Value::undetermined("collection '" + c.collection.segments.front() + "' is not bound");
    return static_cast<std::int64_t>(coll->elements.size());
  }

  Value visit(const ExistsEntity& e)
  {
    const BoundValue* bound = env_.find(e.binding);
    if (!bound)
      return false;
    if (const auto* phase = std::get_if<BoundPhase>(bound))
      return phase->phase != nullptr;
    return !std::get<BoundCollection>(*bound).elements.empty();
  }

  const BoundCollection* collection(const std::string& name) const
  {
    const BoundValue* bound = env_.find(name);
    return bound ? std::get_if<BoundCollection>(bound) : nullptr;
  }

  std::optional<EntityRef> lookup_variable(const std::string& name) const
  {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name)
        return it->second;
    return std::nullopt;
  }

  const Environment& env_;
  std::vector<std::pair<std::string, EntityRef>> scope_;
};

} // namespace

Value eval_expr(const Expr& expr, const Environment& env) { return Evaluator(env).eval(expr); }

Evaluation evaluate(const Expr& expr, const Environment& env) { return Evaluator(env).top(expr); }

} // namespace setheory::procl
