#include "setheory/procl/lexer.hpp"

#include <limits>
#include <utility>

namespace setheory::procl {

std::string to_string(const SourcePos& pos)
{
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

namespace {

constexpr std::pair<std::string_view, TokenKind> kReserved[] = {
    {"process", TokenKind::kw_process},
    {"extends", TokenKind::kw_extends},
    {"requires", TokenKind::kw_requires},
    {"optional", TokenKind::kw_optional},
    {"rule", TokenKind::kw_rule},
    {"override", TokenKind::kw_override},
    {"remove", TokenKind::kw_remove},
    {"forall", TokenKind::kw_forall},
    {"exists", TokenKind::kw_exists},
    {"in", TokenKind::kw_in},
    {"implies", TokenKind::kw_implies},
    {"or", TokenKind::kw_or},
    {"and", TokenKind::kw_and},
    {"not", TokenKind::kw_not},
    {"count", TokenKind::kw_count},
    {"exists_entity", TokenKind::kw_exists_entity},
    {"true", TokenKind::kw_true},
    {"false", TokenKind::kw_false},
};

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer
{
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run()
  {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (at_end())
        return out;
      out.push_back(next());
    }
  }

private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

  char advance()
  {
    char c = src_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_trivia()
  {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (!at_end() && peek() != '\n')
          advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::string lexeme, SourcePos at) { return Token{kind, std::move(lexeme), at, 0}; }

  Token next()
  {
    const SourcePos start = pos_;
    const char c = peek();
    if (is_ident_start(c))
      return word(start);
    if (is_digit(c))
      return number(start);
    if (c == '"')
      return string(start);

    auto single = [&](TokenKind k) {
      advance();
      return make(k, std::string(1, c), start);
    };
    auto maybe_pair = [&](char second, TokenKind two, TokenKind one) {
      advance();
      if (peek() == second) {
        advance();
        return make(two, std::string{c, second}, start);
      }
      return make(one, std::string(1, c), start);
    };

    switch (c) {
      case '{': return single(TokenKind::lbrace);
      case '}': return single(TokenKind::rbrace);
      case '(': return single(TokenKind::lparen);
      case ')': return single(TokenKind::rparen);
      case ';': return single(TokenKind::semicolon);
      case ':': return single(TokenKind::colon);
      case '.': return single(TokenKind::dot);
      case '+': return single(TokenKind::plus);
      case '-': return single(TokenKind::minus);
      case '<': return maybe_pair('=', TokenKind::le, TokenKind::lt);
      case '>': return maybe_pair('=', TokenKind::ge, TokenKind::gt);
      case '=':
        if (peek(1) == '=') {
          advance();
          advance();
          return make(TokenKind::eq, "==", start);
        }
        break;
      case '!':
        if (peek(1) == '=') {
          advance();
          advance();
          return make(TokenKind::ne, "!=", start);
        }
        break;
      default: break;
    }
    throw LexError("illegal character '" + std::string(1, c) + "'", start);
  }

  Token word(SourcePos start)
  {
    std::size_t begin = i_;
    while (!at_end() && is_ident_char(peek()))
      advance();
    std::string text(src_.substr(begin, i_ - begin));
    for (const auto& [spelling, kind] : kReserved)
      if (spelling == text)
        return make(kind, std::move(text), start);
    return make(TokenKind::identifier, std::move(text), start);
  }

  Token number(SourcePos start)
  {
    std::size_t begin = i_;
    std::int64_t value = 0;
    constexpr auto max = std::numeric_limits<std::int64_t>::max();
    while (!at_end() && is_digit(peek())) {
      int d = advance() - '0';
      if (value > (max - d) / 10)
        throw LexError("integer literal out of range", start);
      value = value * 10 + d;
    }
    if (!at_end() && is_ident_start(peek()))
      throw LexError("identifier may not start with a digit", start);
    Token t = make(TokenKind::integer, std::string(src_.substr(begin, i_ - begin)), start);
    t.int_value = value;
    return t;
  }

  Token string(SourcePos start)
  {
    advance(); // opening quote
    std::string text;
    for (;;) {
      if (at_end() || peek() == '\n')
        throw LexError("unterminated string literal", start);
      char c = advance();
      if (c == '"')
        break;
      if (c != '\\') {
        text.push_back(c);
        continue;
      }
      if (at_end())
        throw LexError("unterminated string literal", start);
      const SourcePos esc = pos_;
      switch (advance()) {
        case '"': text.push_back('"'); break;
        case '\\': text.push_back('\\'); break;
        case 'n': text.push_back('\n'); break;
        case 't': text.push_back('\t'); break;
        default: throw LexError("unknown escape sequence", esc);
      }
    }
    return make(TokenKind::string, std::move(text), start);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

} // namespace

std::string_view describe(TokenKind kind)
{
  switch (kind) {
    case TokenKind::end_of_input: return "end of input";
    case TokenKind::identifier: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::string: return "string";
    case TokenKind::kw_process: return "'process'";
    case TokenKind::kw_extends: return "'extends'";
    case TokenKind::kw_requires: return "'requires'";
    case TokenKind::kw_optional: return "'optional'";
    case TokenKind::kw_rule: return "'rule'";
    case TokenKind::kw_override: return "'override'";
    case TokenKind::kw_remove: return "'remove'";
    case TokenKind::kw_forall: return "'forall'";
    case TokenKind::kw_exists: return "'exists'";
    case TokenKind::kw_in: return "'in'";
    case TokenKind::kw_implies: return "'implies'";
    case TokenKind::kw_or: return "'or'";
    case TokenKind::kw_and: return "'and'";
    case TokenKind::kw_not: return "'not'";
    case TokenKind::kw_count: return "'count'";
    case TokenKind::kw_exists_entity: return "'exists_entity'";
    case TokenKind::kw_true: return "'true'";
    case TokenKind::kw_false: return "'false'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::colon: return "':'";
    case TokenKind::dot: return "'.'";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::lt: return "'<'";
    case TokenKind::le: return "'<='";
    case TokenKind::gt: return "'>'";
    case TokenKind::ge: return "'>='";
    case TokenKind::eq: return "'=='";
    case TokenKind::ne: return "'!='";
  }
  return "?";
}

bool is_reserved_word(std::string_view word)
{
  for (const auto& [spelling, kind] : kReserved)
    if (spelling == word)
      return true;
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

} // namespace setheory::procl
