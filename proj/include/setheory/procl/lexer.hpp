#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setheory::procl {

struct SourcePos
{
  int line = 1;
  int column = 1;

  // Positions are diagnostic metadata; they never take part in AST equality.
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

std::string to_string(const SourcePos& pos);

enum class TokenKind {
  end_of_input,
  identifier,
  integer,
  string,
  // reserved words
  kw_process,
  kw_extends,
  kw_requires,
  kw_optional,
  kw_rule,
  kw_override,
  kw_remove,
  kw_forall,
  kw_exists,
  kw_in,
  kw_implies,
  kw_or,
  kw_and,
  kw_not,
  kw_count,
  kw_exists_entity,
  kw_true,
  kw_false,
  // punctuation
  lbrace,
  rbrace,
  lparen,
  rparen,
  semicolon,
  colon,
  dot,
  plus,
  minus,
  lt,
  le,
  gt,
  ge,
  eq,
  ne,
};

/// Human-readable spelling used in diagnostics, e.g. "'>='" or "identifier".
std::string_view describe(TokenKind kind);

struct Token
{
  TokenKind kind;
  std::string lexeme; ///< decoded contents for strings, raw text otherwise
  SourcePos pos;
  std::int64_t int_value = 0;

  bool operator==(const Token& o) const
  {
    return kind == o.kind && lexeme == o.lexeme && pos.line == o.pos.line &&
           pos.column == o.pos.column && int_value == o.int_value;
  }
};

class ProclError : public std::runtime_error
{
public:
  ProclError(const std::string& what, SourcePos pos)
      : std::runtime_error(to_string(pos) + ": " + what)
      , pos_(pos)
  {
  }
  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

class LexError : public ProclError
{
  using ProclError::ProclError;
};

/// Splits PROCL source into tokens. `--` comments and whitespace are dropped;
/// the trailing end_of_input token is not included.
std::vector<Token> tokenize(std::string_view source);

bool is_reserved_word(std::string_view word);

} // namespace setheory::procl
