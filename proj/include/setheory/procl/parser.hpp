#pragma once

#include "setheory/procl/ast.hpp"

#include <span>

namespace setheory::procl {

/// Syntax error carrying the set of token kinds that would have been accepted.
class ParseError : public ProclError
{
public:
  ParseError(std::vector<TokenKind> expected, const Token& found);
  const std::vector<TokenKind>& expected() const { return expected_; }
  TokenKind found() const { return found_; }

private:
  std::vector<TokenKind> expected_;
  TokenKind found_;
};

/// Recursive-descent parse of a whole PROCL file. No error recovery: the
/// first syntax error is thrown.
SpecAst parse(std::span<const Token> tokens);
SpecAst parse_source(std::string_view source);

/// Parses a single expression (the whole token stream must be consumed).
ExprPtr parse_expression(std::string_view source);

} // namespace setheory::procl
