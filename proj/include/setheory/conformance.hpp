#pragma once

// Deciding whether a recorded project follows a process: per-rule
// three-valued verdicts, ontology invariant results, and the aggregate
// is_satisfied answer.

#include "setheory/environment.hpp"
#include "setheory/ontology.hpp"
#include "setheory/process.hpp"
#include "setheory/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace setheory {

enum class Verdict { satisfied, violated, undetermined };

std::string_view to_string(Verdict v);

struct RuleVerdict
{
  std::string rule_name;
  std::string origin;
  bool mandatory = true;
  Verdict verdict = Verdict::satisfied;
  std::string reason; ///< empty iff satisfied
  std::optional<std::vector<std::string>> witness;

  friend bool operator==(const RuleVerdict&, const RuleVerdict&) = default;
};

struct ConformanceReport
{
  std::string process_name;
  std::string project_name;
  std::vector<InvariantViolation> invariant_violations;
  std::vector<BindingError> binding_errors;
  std::vector<RuleVerdict> rule_verdicts; ///< rule_set order
  /// no binding errors, no invariant violations, and every mandatory
  /// rule satisfied
  bool satisfied = false;

  friend bool operator==(const ConformanceReport&, const ConformanceReport&) = default;
};

RuleVerdict evaluate_rule(const ProcessRule& rule, const Environment& env);

ConformanceReport evaluate_process(const Process& process, const Project& project);

inline bool is_satisfied(const ConformanceReport& report) { return report.satisfied; }

/// Recomputes `satisfied` from the other report fields.
bool compute_satisfied(const ConformanceReport& report);

/// Machine-readable report with a stable key order, newline-terminated.
std::string report_to_json(const ConformanceReport& report);

/// Human-readable report.
std::string report_to_text(const ConformanceReport& report);

} // namespace setheory
