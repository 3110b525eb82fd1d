#pragma once

#include "setheory/environment.hpp"
#include "setheory/procl/ast.hpp"

#include <optional>
#include <string>
#include <variant>

namespace setheory::procl {

struct Undetermined
{
  std::string reason;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

/// Result of evaluating an expression: an int, a string, a bool, or
/// Undetermined when the data needed to decide is missing.
class Value
{
public:
  using Storage = std::variant<std::int64_t, std::string, bool, Undetermined>;

  Value(std::int64_t n) : v_(n) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(bool b) : v_(b) {}
  Value(Undetermined u) : v_(std::move(u)) {}

  static Value undetermined(std::string reason) { return Value(Undetermined{std::move(reason)}); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_undetermined() const { return std::holds_alternative<Undetermined>(v_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const std::string& reason() const { return std::get<Undetermined>(v_).reason; }

  const Storage& storage() const { return v_; }

  friend bool operator==(const Value&, const Value&) = default;

private:
  Storage v_;
};

std::string to_string(const Value& v);

/// Kleene three-valued evaluation of a typechecked expression. Total: never
/// throws on input that passed typecheck_expr against the environment's
/// bindings. Integer arithmetic wraps modulo 2^64.
Value eval_expr(const Expr& expr, const Environment& env);

struct Evaluation
{
  Value value;
  /// Set only when the top node is a quantifier: the first falsifying
  /// element of a false `forall`, or the first validating element of a
  /// true `exists`.
  std::optional<EntityRef> witness;
};

Evaluation evaluate(const Expr& expr, const Environment& env);

} // namespace setheory::procl
