#pragma once

#include "setheory/procl/ast.hpp"

namespace setheory::procl {

/// Canonical source text; parse_source(pretty_print(ast)) == ast.
/// Parentheses are emitted only where precedence requires them.
std::string pretty_print(const SpecAst& ast);
std::string pretty_print(const ProcessDef& def);
std::string pretty_print(const Expr& expr);

/// Quoted, escaped string literal.
std::string quote(std::string_view text);

} // namespace setheory::procl
