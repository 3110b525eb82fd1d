#include "setheory/conformance.hpp"

#include "setheory/procl/eval.hpp"
#include "setheory/procl/printer.hpp"

#include "json.hpp"

#include <algorithm>

namespace setheory {

std::string_view to_string(Verdict v)
{
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

RuleVerdict evaluate_rule(const ProcessRule& rule, const Environment& env)
{
  RuleVerdict out;
  out.rule_name = rule.name;
  out.origin = rule.origin;
  out.mandatory = rule.mandatory;

  const procl::Evaluation result = procl::evaluate(*rule.expr, env);
  if (result.witness)
    out.witness = entity_ids(*result.witness);

  const procl::Value& v = result.value;
  if (v.is_undetermined()) {
    out.verdict = Verdict::undetermined;
    out.reason = v.reason();
  } else if (v.is_bool() && v.as_bool()) {
    out.verdict = Verdict::satisfied;
  } else {
    out.verdict = Verdict::violated;
    out.reason = "constraint violated: " + procl::pretty_print(*rule.expr);
    if (result.witness)
      out.reason += " (fails for " + describe(*result.witness) + ")";
  }
  return out;
}

bool compute_satisfied(const ConformanceReport& report)
{
  return report.binding_errors.empty() && report.invariant_violations.empty() &&
         std::all_of(report.rule_verdicts.begin(), report.rule_verdicts.end(),
                     [](const RuleVerdict& r) { return !r.mandatory || r.verdict == Verdict::satisfied; });
}

ConformanceReport evaluate_process(const Process& process, const Project& project)
{
  ConformanceReport report;
  report.process_name = process.name;
  report.project_name = project.name;
  report.invariant_violations = check_invariants(project);

  BindingOutcome bound = try_bind_entities(project, process);
  report.binding_errors = std::move(bound.errors);
  report.rule_verdicts.reserve(process.rules.size());
  for (const auto& rule : process.rules)
    report.rule_verdicts.push_back(evaluate_rule(rule, bound.env));

  report.satisfied = compute_satisfied(report);
  return report;
}

std::string report_to_json(const ConformanceReport& report)
{
  using ordered_json = nlohmann::ordered_json;
  ordered_json doc;
  doc["process"] = report.process_name;
  doc["project"] = report.project_name;
  doc["satisfied"] = report.satisfied;

  auto& invariants = doc["invariant_violations"] = ordered_json::array();
  for (const auto& v : report.invariant_violations)
    invariants.push_back({{"code", code_name(v.code)}, {"entity_ids", v.entity_ids}, {"message", v.message}});

  auto& bindings = doc["binding_errors"] = ordered_json::array();
  for (const auto& b : report.binding_errors)
    bindings.push_back({{"binding", b.binding_name}, {"reason", to_string(b.reason)}});

  auto& rules = doc["rules"] = ordered_json::array();
  for (const auto& r : report.rule_verdicts) {
    ordered_json o;
    o["name"] = r.rule_name;
    o["origin"] = r.origin;
    o["mandatory"] = r.mandatory;
    o["verdict"] = to_string(r.verdict);
    o["reason"] = r.reason;
    o["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    rules.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

std::string report_to_text(const ConformanceReport& report)
{
  std::string out = "process " + report.process_name + " on project " + report.project_name + ": " +
                    (report.satisfied ? "SATISFIED" : "NOT SATISFIED") + "\n";

  if (!report.invariant_violations.empty()) {
    out += "\ninvariant violations:\n";
    for (const auto& v : report.invariant_violations)
      out += "  " + std::string(code_name(v.code)) + "  " + v.message + "\n";
  }
  if (!report.binding_errors.empty()) {
    out += "\nbinding errors:\n";
    for (const auto& b : report.binding_errors)
      out += "  " + b.binding_name + ": " + std::string(to_string(b.reason)) + "\n";
  }
  out += "\nrules:\n";
  std::size_t width = 0;
  for (const auto& r : report.rule_verdicts)
    width = std::max(width, r.rule_name.size());
  for (const auto& r : report.rule_verdicts) {
    std::string verdict(to_string(r.verdict));
    verdict.resize(12, ' ');
    std::string name = r.rule_name;
    name.resize(width, ' ');
    out += "  " + verdict + " " + name + "  [" + r.origin + (r.mandatory ? "" : ", advisory") + "]\n";
    if (!r.reason.empty())
      out += "      " + r.reason + "\n";
  }
  if (report.rule_verdicts.empty())
    out += "  (none)\n";
  return out;
}

} // namespace setheory
