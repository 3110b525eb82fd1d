#include "setheory/procl/printer.hpp"

namespace setheory::procl {

namespace {

// Grammar levels, loosest first. A child printed where a tighter level is
// required gets parenthesized.
enum Level { quantifier = 0, implies = 1, disjunction = 2, conjunction = 3, negation = 4, comparison = 5, sum = 6, term = 7 };

Level level_of(const Expr& e)
{
  if (std::holds_alternative<Quantified>(e.node))
    return quantifier;
  if (std::holds_alternative<Not>(e.node))
    return negation;
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::implies: return implies;
      case BinaryOp::or_: return disjunction;
      case BinaryOp::and_: return conjunction;
      case BinaryOp::add:
      case BinaryOp::sub: return sum;
      default: return comparison;
    }
  }
  return term;
}

void print_path(std::string& out, const Path& p)
{
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    if (i)
      out += '.';
    out += p.segments[i];
  }
}

void print(std::string& out, const Expr& e, Level required);

void print_child(std::string& out, const ExprPtr& e, Level required) { print(out, *e, required); }

void print_binary(std::string& out, const Binary& b)
{
  Level lhs = term, rhs = term;
  switch (b.op) {
    case BinaryOp::implies: lhs = rhs = disjunction; break;
    case BinaryOp::or_: lhs = disjunction; rhs = conjunction; break;
    case BinaryOp::and_: lhs = conjunction; rhs = negation; break;
    case BinaryOp::add:
    case BinaryOp::sub: lhs = sum; rhs = term; break;
    default: lhs = rhs = sum; break;
  }
  print_child(out, b.lhs, lhs);
  out += ' ';
  out += spelling(b.op);
  out += ' ';
  print_child(out, b.rhs, rhs);
}

void print(std::string& out, const Expr& e, Level required)
{
  const bool parens = level_of(e) < required;
  if (parens)
    out += '(';
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, IntLit>) {
          out += std::to_string(n.value);
        } else if constexpr (std::is_same_v<N, StrLit>) {
          out += quote(n.value);
        } else if constexpr (std::is_same_v<N, BoolLit>) {
          out += n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<N, Path>) {
          print_path(out, n);
        } else if constexpr (std::is_same_v<N, Not>) {
          out += "not ";
          print_child(out, n.operand, negation);
        } else if constexpr (std::is_same_v<N, Binary>) {
          print_binary(out, n);
        } else if constexpr (std::is_same_v<N, Quantified>) {
          out += n.quantifier == Quantifier::forall ? "forall " : "exists ";
          out += n.variable;
          out += " in ";
          print_path(out, n.collection);
          out += ": ";
          print_child(out, n.body, quantifier);
        } else if constexpr (std::is_same_v<N, Count>) {
          out += "count(";
          print_path(out, n.collection);
          out += ')';
        } else if constexpr (std::is_same_v<N, ExistsEntity>) {
          out += "exists_entity(" + n.binding + ")";
        }
      },
      e.node);
  if (parens)
    out += ')';
}

void print_item(std::string& out, const Item& item)
{
  out += "  ";
  std::visit(
      [&](const auto& it) {
        using I = std::decay_t<decltype(it)>;
        if constexpr (std::is_same_v<I, BindingDecl>) {
          out += "requires ";
          out += keyword(it.kind);
          out += ' ' + it.name;
          if (it.optional)
            out += " optional";
        } else if constexpr (std::is_same_v<I, RuleDef>) {
          out += it.optional ? "optional rule " : "rule ";
          out += it.name + ": ";
          print(out, *it.expr, quantifier);
        } else if constexpr (std::is_same_v<I, OverrideRule>) {
          out += "override rule " + it.name + ": ";
          print(out, *it.expr, quantifier);
        } else if constexpr (std::is_same_v<I, RemoveRule>) {
          out += "remove rule " + it.name;
        }
      },
      item);
  out += ";\n";
}

} // namespace

std::string quote(std::string_view text)
{
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + '"';
}

std::string pretty_print(const Expr& expr)
{
  std::string out;
  print(out, expr, quantifier);
  return out;
}

std::string pretty_print(const ProcessDef& def)
{
  std::string out = "process " + def.name;
  if (def.extends)
    out += " extends " + *def.extends;
  out += " {\n";
  for (const auto& item : def.items)
    print_item(out, item);
  out += "}\n";
  return out;
}

std::string pretty_print(const SpecAst& ast)
{
  std::string out;
  for (std::size_t i = 0; i < ast.processes.size(); ++i) {
    if (i)
      out += '\n';
    out += pretty_print(ast.processes[i]);
  }
  return out;
}

} // namespace setheory::procl
