#include "setheory/procl/parser.hpp"

#include <algorithm>

namespace setheory::procl {

namespace {

std::string expected_message(const std::vector<TokenKind>& expected, const Token& found)
{
  std::string msg = "expected ";
  if (expected.size() > 1)
    msg += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i)
      msg += ", ";
    msg += describe(expected[i]);
  }
  msg += " but found ";
  if (found.kind == TokenKind::end_of_input)
    msg += "end of input";
  else
    msg += "'" + found.lexeme + "'";
  return msg;
}

constexpr TokenKind kTermStarts[] = {
    TokenKind::integer,  TokenKind::string,           TokenKind::kw_true,    TokenKind::kw_false,
    TokenKind::kw_count, TokenKind::kw_exists_entity, TokenKind::identifier, TokenKind::lparen,
};

class Parser
{
public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens)
  {
    eof_.kind = TokenKind::end_of_input;
    eof_.pos = tokens.empty() ? SourcePos{} : tokens.back().pos;
    if (!tokens.empty())
      eof_.pos.column += static_cast<int>(tokens.back().lexeme.size());
  }

  SpecAst spec()
  {
    SpecAst ast;
    while (!at(TokenKind::end_of_input))
      ast.processes.push_back(process_def());
    return ast;
  }

  ExprPtr whole_expression()
  {
    ExprPtr e = expr();
    expect({TokenKind::end_of_input});
    return e;
  }

private:
  const Token& peek() const { return i_ < tokens_.size() ? tokens_[i_] : eof_; }
  bool at(TokenKind k) const { return peek().kind == k; }

  const Token& take()
  {
    const Token& t = peek();
    if (i_ < tokens_.size())
      ++i_;
    return t;
  }

  [[noreturn]] void fail(std::vector<TokenKind> expected) const { throw ParseError(std::move(expected), peek()); }

  const Token& expect(std::vector<TokenKind> kinds)
  {
    if (std::find(kinds.begin(), kinds.end(), peek().kind) == kinds.end())
      fail(std::move(kinds));
    return take();
  }

  bool accept(TokenKind k)
  {
    if (!at(k))
      return false;
    take();
    return true;
  }

  std::string ident() { return expect({TokenKind::identifier}).lexeme; }

  ProcessDef process_def()
  {
    ProcessDef def;
    def.pos = expect({TokenKind::kw_process}).pos;
    def.name = ident();
    if (accept(TokenKind::kw_extends))
      def.extends = ident();
    if (!at(TokenKind::lbrace))
      fail(def.extends ? std::vector{TokenKind::lbrace} : std::vector{TokenKind::kw_extends, TokenKind::lbrace});
    take();
    while (!accept(TokenKind::rbrace))
      def.items.push_back(item());
    return def;
  }

  Item item()
  {
    const SourcePos pos = peek().pos;
    switch (peek().kind) {
      case TokenKind::kw_requires: return binding();
      case TokenKind::kw_optional:
        take();
        expect({TokenKind::kw_rule});
        return rule_def(pos, true);
      case TokenKind::kw_rule: take(); return rule_def(pos, false);
      case TokenKind::kw_override: {
        take();
        expect({TokenKind::kw_rule});
        OverrideRule o;
        o.pos = pos;
        o.name = ident();
        expect({TokenKind::colon});
        o.expr = expr();
        expect({TokenKind::semicolon});
        return o;
      }
      case TokenKind::kw_remove: {
        take();
        expect({TokenKind::kw_rule});
        RemoveRule r;
        r.pos = pos;
        r.name = ident();
        expect({TokenKind::semicolon});
        return r;
      }
      default:
        fail({TokenKind::kw_requires, TokenKind::kw_optional, TokenKind::kw_rule, TokenKind::kw_override,
              TokenKind::kw_remove, TokenKind::rbrace});
    }
  }

  BindingDecl binding()
  {
    BindingDecl b;
    b.pos = take().pos;
    const Token& kind_tok = peek();
    auto kind = kind_tok.kind == TokenKind::identifier ? binding_kind_from_keyword(kind_tok.lexeme) : std::nullopt;
    if (!kind)
      throw ProclError(
          "expected binding kind (phase, sprints, meetings, milestones, products, increments, work) but found " +
              (kind_tok.kind == TokenKind::end_of_input ? std::string("end of input") : "'" + kind_tok.lexeme + "'"),
          kind_tok.pos);
    take();
    b.kind = *kind;
    b.name = ident();
    b.optional = accept(TokenKind::kw_optional);
    expect({TokenKind::semicolon});
    return b;
  }

  RuleDef rule_def(SourcePos pos, bool optional)
  {
    RuleDef r;
    r.pos = pos;
    r.optional = optional;
    r.name = ident();
    expect({TokenKind::colon});
    r.expr = expr();
    expect({TokenKind::semicolon});
    return r;
  }

  ExprPtr expr()
  {
    if (at(TokenKind::kw_forall) || at(TokenKind::kw_exists)) {
      const Token& q = take();
      Quantified node;
      node.quantifier = q.kind == TokenKind::kw_forall ? Quantifier::forall : Quantifier::exists;
      node.variable = ident();
      expect({TokenKind::kw_in});
      node.collection = path();
      expect({TokenKind::colon});
      node.body = expr();
      return make_expr(std::move(node), q.pos);
    }
    return implies();
  }

  ExprPtr implies()
  {
    ExprPtr lhs = or_expr();
    if (at(TokenKind::kw_implies)) {
      const SourcePos pos = take().pos;
      return make_expr(Binary{BinaryOp::implies, lhs, or_expr()}, pos);
    }
    return lhs;
  }

  ExprPtr or_expr()
  {
    ExprPtr lhs = and_expr();
    while (at(TokenKind::kw_or)) {
      const SourcePos pos = take().pos;
      lhs = make_expr(Binary{BinaryOp::or_, lhs, and_expr()}, pos);
    }
    return lhs;
  }

  ExprPtr and_expr()
  {
    ExprPtr lhs = not_expr();
    while (at(TokenKind::kw_and)) {
      const SourcePos pos = take().pos;
      lhs = make_expr(Binary{BinaryOp::and_, lhs, not_expr()}, pos);
    }
    return lhs;
  }

  ExprPtr not_expr()
  {
    if (at(TokenKind::kw_not)) {
      const SourcePos pos = take().pos;
      return make_expr(Not{not_expr()}, pos);
    }
    return comparison();
  }

  static std::optional<BinaryOp> comparison_op(TokenKind k)
  {
    switch (k) {
      case TokenKind::lt: return BinaryOp::lt;
      case TokenKind::le: return BinaryOp::le;
      case TokenKind::gt: return BinaryOp::gt;
      case TokenKind::ge: return BinaryOp::ge;
      case TokenKind::eq: return BinaryOp::eq;
      case TokenKind::ne: return BinaryOp::ne;
      default: return std::nullopt;
    }
  }

  ExprPtr comparison()
  {
    ExprPtr lhs = sum();
    if (auto op = comparison_op(peek().kind)) {
      const SourcePos pos = take().pos;
      return make_expr(Binary{*op, lhs, sum()}, pos);
    }
    return lhs;
  }

  ExprPtr sum()
  {
    ExprPtr lhs = term();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      const Token& t = take();
      const BinaryOp op = t.kind == TokenKind::plus ? BinaryOp::add : BinaryOp::sub;
      lhs = make_expr(Binary{op, lhs, term()}, t.pos);
    }
    return lhs;
  }

  ExprPtr term()
  {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer: take(); return make_expr(IntLit{t.int_value}, t.pos);
      case TokenKind::string: take(); return make_expr(StrLit{t.lexeme}, t.pos);
      case TokenKind::kw_true: take(); return make_expr(BoolLit{true}, t.pos);
      case TokenKind::kw_false: take(); return make_expr(BoolLit{false}, t.pos);
      case TokenKind::kw_count: {
        take();
        expect({TokenKind::lparen});
        Count c{path()};
        expect({TokenKind::rparen});
        return make_expr(std::move(c), t.pos);
      }
      case TokenKind::kw_exists_entity: {
        take();
        expect({TokenKind::lparen});
        ExistsEntity e{ident()};
        expect({TokenKind::rparen});
        return make_expr(std::move(e), t.pos);
      }
      case TokenKind::identifier: return make_expr(path(), t.pos);
      case TokenKind::lparen: {
        take();
        ExprPtr inner = expr();
        expect({TokenKind::rparen});
        return inner;
      }
      default: fail({std::begin(kTermStarts), std::end(kTermStarts)});
    }
  }

  Path path()
  {
    Path p;
    p.segments.push_back(ident());
    while (accept(TokenKind::dot))
      p.segments.push_back(ident());
    return p;
  }

  std::span<const Token> tokens_;
  std::size_t i_ = 0;
  Token eof_;
};

} // namespace

ParseError::ParseError(std::vector<TokenKind> expected, const Token& found)
    : ProclError(expected_message(expected, found), found.pos)
    , expected_(std::move(expected))
    , found_(found.kind)
{
}

SpecAst parse(std::span<const Token> tokens) { return Parser(tokens).spec(); }

SpecAst parse_source(std::string_view source)
{
  const auto tokens = tokenize(source);
  return parse(tokens);
}

ExprPtr parse_expression(std::string_view source)
{
  const auto tokens = tokenize(source);
  return Parser(tokens).whole_expression();
}

} // namespace setheory::procl
