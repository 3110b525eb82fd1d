#include "doctest.h"

#include "setheory/procl/lexer.hpp"

using namespace setheory::procl;

namespace {

std::vector<TokenKind> kinds(std::string_view src)
{
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(src))
    out.push_back(t.kind);
  return out;
}

} // namespace

TEST_CASE("empty input yields no tokens")
{
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \n\t  -- only a comment\n").empty());
}

TEST_CASE("rule header tokenizes against the grammar")
{
  using K = TokenKind;
  const std::vector<K> expected{K::kw_rule,    K::identifier, K::colon,      K::identifier,
                                K::dot,        K::identifier, K::ge,         K::identifier,
                                K::dot,        K::identifier, K::semicolon};
  CHECK(kinds("rule r: a.start_time >= b.end_time;") == expected);

  auto toks = tokenize("rule r: a.start_time >= b.end_time;");
  CHECK(toks[1].lexeme == "r");
  CHECK(toks[5].lexeme == "start_time");
  CHECK(toks[6].lexeme == ">=");
}

TEST_CASE("illegal character is reported with its position")
{
  try {
    tokenize("x @ y");
    FAIL("expected a lexical error");
  } catch (const LexError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 3);
    CHECK(std::string(e.what()).find("1:3") == 0);
  }
}

TEST_CASE("positions track lines and columns")
{
  auto toks = tokenize("process P {\n  rule r: true;\n}");
  REQUIRE(toks.size() == 9);
  CHECK(toks[3].pos.line == 2);
  CHECK(toks[3].pos.column == 3);
  CHECK(toks[8].kind == TokenKind::rbrace);
  CHECK(toks[8].pos.line == 3);
  CHECK(toks[8].pos.column == 1);
}

TEST_CASE("comments run to end of line and a single minus is an operator")
{
  using K = TokenKind;
  CHECK(kinds("a - b -- a comment - with minus\nc") ==
        std::vector<K>{K::identifier, K::minus, K::identifier, K::identifier});
}

TEST_CASE("operators")
{
  using K = TokenKind;
  CHECK(kinds("< <= > >= == != + -") == std::vector<K>{K::lt, K::le, K::gt, K::ge, K::eq, K::ne, K::plus, K::minus});
  CHECK_THROWS_AS(tokenize("a = b"), LexError);
  CHECK_THROWS_AS(tokenize("!a"), LexError);
}

TEST_CASE("reserved words and contextual kind words")
{
  using K = TokenKind;
  CHECK(kinds("forall exists exists_entity count implies") ==
        std::vector<K>{K::kw_forall, K::kw_exists, K::kw_exists_entity, K::kw_count, K::kw_implies});
  // KIND words are ordinary identifiers
  CHECK(kinds("phase sprints work") == std::vector<K>{K::identifier, K::identifier, K::identifier});
  CHECK(is_reserved_word("optional"));
  CHECK_FALSE(is_reserved_word("phase"));
  CHECK(kinds("forall_x") == std::vector<K>{K::identifier});
}

TEST_CASE("integer literals")
{
  auto toks = tokenize("0 42 9223372036854775807");
  CHECK(toks[0].int_value == 0);
  CHECK(toks[1].int_value == 42);
  CHECK(toks[2].int_value == INT64_MAX);
  CHECK_THROWS_AS(tokenize("9223372036854775808"), LexError);
  CHECK_THROWS_AS(tokenize("12abc"), LexError);
}

TEST_CASE("string literals and escapes")
{
  auto toks = tokenize(R"("a\"b\\c\nd\te")");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].kind == TokenKind::string);
  CHECK(toks[0].lexeme == "a\"b\\c\nd\te");
  CHECK_THROWS_AS(tokenize(R"("abc)"), LexError);
  CHECK_THROWS_AS(tokenize("\"ab\ncd\""), LexError);
  CHECK_THROWS_AS(tokenize(R"("\q")"), LexError);
}
