#include "expr_gen.hpp"

#include "setheory/procl/lexer.hpp"
#include "setheory/procl/typecheck.hpp"

#include <algorithm>
#include <limits>

using namespace setheory::procl;

namespace testsupport {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T, std::size_t N>
const T& one_of(Rng& rng, const T (&xs)[N])
{
  return xs[pick(rng, 0, static_cast<int>(N) - 1)];
}

// Identifiers, including the contextual KIND words which are not reserved.
std::string identifier(Rng& rng)
{
  static const char* fixed[] = {"a", "req", "design", "s", "x1", "_t", "phase", "sprints", "work", "Foo_2",
                                "end_time", "products", "m", "optional_", "in2"};
  if (pick(rng, 0, 3) > 0)
    return one_of(rng, fixed);
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789";
  std::string s;
  s.push_back(alphabet[pick(rng, 0, 52)]); // letters and underscore only
  const int len = pick(rng, 0, 7);
  for (int i = 0; i < len; ++i)
    s.push_back(alphabet[pick(rng, 0, 62)]);
  if (is_reserved_word(s))
    s += "_";
  return s;
}

Path random_path(Rng& rng)
{
  Path p;
  const int n = pick(rng, 1, 3);
  for (int i = 0; i < n; ++i)
    p.segments.push_back(identifier(rng));
  return p;
}

std::string random_string(Rng& rng)
{
  static const char chars[] = {'a', 'z', ' ', '"', '\\', '\n', '\t', '-', '_', '0', '(', ';'};
  std::string s;
  const int len = pick(rng, 0, 6);
  for (int i = 0; i < len; ++i)
    s.push_back(one_of(rng, chars));
  return s;
}

std::int64_t random_int(Rng& rng)
{
  switch (pick(rng, 0, 3)) {
    case 0: return 0;
    case 1: return std::numeric_limits<std::int64_t>::max();
    default: return std::uniform_int_distribution<std::int64_t>(0, 1'000'000)(rng);
  }
}

ExprPtr grammar_leaf(Rng& rng)
{
  switch (pick(rng, 0, 6)) {
    case 0: return make_expr(IntLit{random_int(rng)});
    case 1: return make_expr(StrLit{random_string(rng)});
    case 2: return make_expr(BoolLit{pick(rng, 0, 1) == 1});
    case 3: return make_expr(Count{random_path(rng)});
    case 4: return make_expr(ExistsEntity{identifier(rng)});
    default: return make_expr(random_path(rng));
  }
}

constexpr BinaryOp kAllOps[] = {BinaryOp::add, BinaryOp::sub, BinaryOp::lt,  BinaryOp::le,
                                BinaryOp::gt,  BinaryOp::ge,  BinaryOp::eq,  BinaryOp::ne,
                                BinaryOp::and_, BinaryOp::or_, BinaryOp::implies};

} // namespace

ExprPtr random_grammar_expr(Rng& rng, int depth)
{
  if (depth <= 1 || pick(rng, 0, 4) == 0)
    return grammar_leaf(rng);
  switch (pick(rng, 0, 5)) {
    case 0: return make_expr(Not{random_grammar_expr(rng, depth - 1)});
    case 1:
      return make_expr(Quantified{pick(rng, 0, 1) ? Quantifier::forall : Quantifier::exists, identifier(rng),
                                  random_path(rng), random_grammar_expr(rng, depth - 1)});
    default:
      return make_expr(
          Binary{one_of(rng, kAllOps), random_grammar_expr(rng, depth - 1), random_grammar_expr(rng, depth - 1)});
  }
}

SpecAst random_spec(Rng& rng, int max_depth)
{
  SpecAst ast;
  const int procs = pick(rng, 0, 3);
  for (int p = 0; p < procs; ++p) {
    ProcessDef def;
    def.name = identifier(rng);
    if (pick(rng, 0, 1))
      def.extends = identifier(rng);
    const int items = pick(rng, 0, 5);
    for (int i = 0; i < items; ++i) {
      switch (pick(rng, 0, 3)) {
        case 0:
          def.items.push_back(BindingDecl{static_cast<BindingKind>(pick(rng, 0, 6)), identifier(rng), pick(rng, 0, 1) == 1, {}});
          break;
        case 1:
          def.items.push_back(RuleDef{identifier(rng), random_grammar_expr(rng, pick(rng, 1, max_depth)), pick(rng, 0, 1) == 1, {}});
          break;
        case 2:
          def.items.push_back(OverrideRule{identifier(rng), random_grammar_expr(rng, pick(rng, 1, max_depth)), {}});
          break;
        default: def.items.push_back(RemoveRule{identifier(rng), {}}); break;
      }
    }
    ast.processes.push_back(std::move(def));
  }
  return ast;
}

int expr_depth(const Expr& e)
{
  if (auto* n = std::get_if<Not>(&e.node))
    return 1 + expr_depth(*n->operand);
  if (auto* n = std::get_if<Binary>(&e.node))
    return 1 + std::max(expr_depth(*n->lhs), expr_depth(*n->rhs));
  if (auto* n = std::get_if<Quantified>(&e.node))
    return 1 + expr_depth(*n->body);
  return 1;
}

int max_depth(const SpecAst& ast)
{
  int d = 0;
  for (const auto& def : ast.processes)
    for (const auto& item : def.items) {
      if (auto* r = std::get_if<RuleDef>(&item))
        d = std::max(d, expr_depth(*r->expr));
      if (auto* o = std::get_if<OverrideRule>(&item))
        d = std::max(d, expr_depth(*o->expr));
    }
  return d;
}

namespace {

struct TypedGen
{
  Rng& rng;
  const BindingList& bindings;
  std::vector<std::pair<std::string, EntityKind>> singles; // phases and quantifier variables
  int next_var = 0;

  std::vector<std::pair<std::string, EntityKind>> collections() const
  {
    std::vector<std::pair<std::string, EntityKind>> out;
    for (const auto& [name, kind] : bindings)
      if (is_collection(kind))
        out.emplace_back(name, element_kind(kind));
    return out;
  }

  // a path `entity.attr` of the wanted type, if any is available
  ExprPtr attribute(ValueType type)
  {
    std::vector<Path> options;
    for (const auto& [name, kind] : singles)
      for (const auto& [attr, info] : AttributeSchema::builtin().attributes(kind))
        if (info.type == type)
          options.push_back(Path{{name, attr}});
    if (options.empty())
      return nullptr;
    return make_expr(options[pick(rng, 0, static_cast<int>(options.size()) - 1)]);
  }

  ExprPtr literal(ValueType type)
  {
    static const char* strings[] = {"p0", "s1", "mt0", "daily", "retrospective", "module", "burndown_chart",
                                    "creation", "update", "prod1", "u0", "alpha", "m0"};
    switch (type) {
      case ValueType::integer: return make_expr(IntLit{pick(rng, 0, 20)});
      case ValueType::string: return make_expr(StrLit{one_of(rng, strings)});
      default: return make_expr(BoolLit{pick(rng, 0, 1) == 1});
    }
  }

  ExprPtr leaf(ValueType type)
  {
    if (type == ValueType::integer && pick(rng, 0, 4) == 0) {
      auto colls = collections();
      if (!colls.empty())
        return make_expr(Count{Path{{colls[pick(rng, 0, static_cast<int>(colls.size()) - 1)].first}}});
    }
    if (type == ValueType::boolean && pick(rng, 0, 4) == 0 && !bindings.empty())
      return make_expr(ExistsEntity{bindings[pick(rng, 0, static_cast<int>(bindings.size()) - 1)].first});
    if (pick(rng, 0, 2) > 0)
      if (auto a = attribute(type))
        return a;
    return literal(type);
  }

  ExprPtr gen(ValueType type, int depth)
  {
    if (depth <= 1 || pick(rng, 0, 5) == 0)
      return leaf(type);
    if (type == ValueType::string)
      return leaf(type);
    if (type == ValueType::integer)
      return make_expr(Binary{pick(rng, 0, 1) ? BinaryOp::add : BinaryOp::sub, gen(type, depth - 1),
                              gen(type, depth - 1)});
    switch (pick(rng, 0, 7)) {
      case 0: return make_expr(Not{gen(ValueType::boolean, depth - 1)});
      case 1:
      case 2: {
        static constexpr BinaryOp ops[] = {BinaryOp::and_, BinaryOp::or_, BinaryOp::implies};
        return make_expr(Binary{one_of(rng, ops), gen(type, depth - 1), gen(type, depth - 1)});
      }
      case 3:
      case 4: {
        static constexpr BinaryOp ops[] = {BinaryOp::lt, BinaryOp::le, BinaryOp::gt,
                                           BinaryOp::ge, BinaryOp::eq, BinaryOp::ne};
        return make_expr(
            Binary{one_of(rng, ops), gen(ValueType::integer, depth - 1), gen(ValueType::integer, depth - 1)});
      }
      case 5: {
        static constexpr ValueType types[] = {ValueType::string, ValueType::boolean};
        const ValueType t = one_of(rng, types);
        return make_expr(Binary{pick(rng, 0, 1) ? BinaryOp::eq : BinaryOp::ne, gen(t, depth - 1), gen(t, depth - 1)});
      }
      default: {
        auto colls = collections();
        if (colls.empty())
          return leaf(type);
        const auto& [coll, kind] = colls[pick(rng, 0, static_cast<int>(colls.size()) - 1)];
        std::string var = "v" + std::to_string(next_var++);
        singles.emplace_back(var, kind);
        ExprPtr body = gen(ValueType::boolean, depth - 1);
        singles.pop_back();
        return make_expr(Quantified{pick(rng, 0, 1) ? Quantifier::forall : Quantifier::exists, var, Path{{coll}}, body});
      }
    }
  }
};

} // namespace

ExprPtr random_typed_expr(Rng& rng, ValueType type, int depth, const BindingList& bindings)
{
  TypedGen g{rng, bindings, {}, 0};
  for (const auto& [name, kind] : bindings)
    if (!is_collection(kind))
      g.singles.emplace_back(name, EntityKind::phase);
  return g.gen(type, depth);
}

} // namespace testsupport
