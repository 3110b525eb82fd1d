#include "doctest.h"

#include "json.hpp"
#include "setheory/conformance.hpp"
#include "setheory/library.hpp"
#include "setheory/trace.hpp"

using namespace setheory;
using json = nlohmann::ordered_json;

namespace {

Project fixture(const char* name) { return load_project_file(std::string(SETHEORY_FIXTURE_DIR) + "/" + name + ".json"); }

const RuleVerdict& verdict(const ConformanceReport& r, const std::string& rule)
{
  for (const auto& v : r.rule_verdicts)
    if (v.rule_name == rule)
      return v;
  throw std::runtime_error("no verdict for " + rule);
}

} // namespace

TEST_CASE("waterfall_ok satisfies waterfall")
{
  ConformanceReport r = evaluate_process(load_process("waterfall"), fixture("waterfall_ok"));
  CHECK(r.satisfied);
  CHECK(is_satisfied(r));
  CHECK(r.invariant_violations.empty());
  CHECK(r.binding_errors.empty());
  REQUIRE(r.rule_verdicts.size() == 4);
  for (const auto& v : r.rule_verdicts) {
    CHECK(v.verdict == Verdict::satisfied);
    CHECK(v.reason.empty());
  }
}

TEST_CASE("single-edit mutation violates exactly the ordering rule")
{
  Project p = fixture("waterfall_ok");
  p.phases[1].start_time = *p.phases[0].end_time - 1;
  ConformanceReport r = evaluate_process(load_process("waterfall"), p);
  CHECK_FALSE(r.satisfied);
  CHECK(r.invariant_violations.empty());
  for (const auto& v : r.rule_verdicts)
    CHECK((v.verdict == Verdict::violated) == (v.rule_name == "order_design"));
  CHECK(verdict(r, "order_design").reason == "constraint violated: design.start_time >= requirements.end_time");
  CHECK_FALSE(verdict(r, "order_design").witness);

  // the shipped bad fixture is the same edit
  ConformanceReport bad = evaluate_process(load_process("waterfall"), fixture("waterfall_bad_order"));
  CHECK(verdict(bad, "order_design").verdict == Verdict::violated);
  CHECK_FALSE(bad.satisfied);
}

TEST_CASE("scrum fixtures")
{
  for (const char* proc : {"scrum", "our_scrum_variant"}) {
    CAPTURE(proc);
    CHECK(evaluate_process(load_process(proc), fixture("scrum_ok")).satisfied);
    ConformanceReport r = evaluate_process(load_process(proc), fixture("scrum_missing_retro"));
    CHECK_FALSE(r.satisfied);
    const auto& v = verdict(r, "retrospective_each_sprint");
    CHECK(v.verdict == Verdict::violated);
    REQUIRE(v.witness);
    CHECK(*v.witness == std::vector<std::string>{"s2"});
    CHECK(v.reason.find("(fails for sprint 's2')") != std::string::npos);
  }
}

TEST_CASE("advisory rules do not affect satisfaction")
{
  Project p = fixture("scrum_ok");
  p.products[1].kind = ProductKind::from_label("document");
  ConformanceReport r = evaluate_process(load_process("our_scrum_variant"), p);
  CHECK(verdict(r, "burndown_present").verdict == Verdict::violated);
  CHECK_FALSE(verdict(r, "burndown_present").mandatory);
  CHECK(r.satisfied);
}

TEST_CASE("undetermined mandatory rule is not satisfied")
{
  Project p = fixture("waterfall_ok");
  p.phases[3].end_time.reset(); // verification still running, maintenance recorded
  ConformanceReport r = evaluate_process(load_process("waterfall"), p);
  const auto& v = verdict(r, "order_maintenance");
  CHECK(v.verdict == Verdict::undetermined);
  CHECK(v.reason == "phase 'ph-verif' has no end_time");
  CHECK_FALSE(r.satisfied);
}

TEST_CASE("binding errors and invariant violations fail the report")
{
  Project p = fixture("waterfall_ok");
  p.phases.erase(p.phases.begin() + 1); // no design phase
  ConformanceReport r = evaluate_process(load_process("waterfall"), p);
  CHECK(r.binding_errors == std::vector<BindingError>{{"design", BindingFailure::missing}});
  CHECK(verdict(r, "order_design").verdict == Verdict::undetermined);
  CHECK(verdict(r, "order_design").reason == "required phase 'design' missing");
  CHECK_FALSE(r.satisfied);

  p = fixture("waterfall_ok");
  p.milestones[1].due_time = 1;
  r = evaluate_process(load_process("waterfall"), p);
  REQUIRE(r.invariant_violations.size() == 1);
  for (const auto& v : r.rule_verdicts)
    CHECK(v.verdict == Verdict::satisfied);
  CHECK_FALSE(r.satisfied);
}

TEST_CASE("satisfied agrees with its definition")
{
  for (const char* f : {"waterfall_ok", "waterfall_bad_order"}) {
    ConformanceReport r = evaluate_process(load_process("waterfall"), fixture(f));
    CHECK(r.satisfied == compute_satisfied(r));
  }
}

TEST_CASE("json report layout")
{
  ConformanceReport r = evaluate_process(load_process("scrum"), fixture("scrum_missing_retro"));
  const std::string text = report_to_json(r);
  CHECK(text.back() == '\n');
  json doc = json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"process", "project", "satisfied", "invariant_violations", "binding_errors",
                                         "rules"});
  CHECK(doc["process"] == "scrum");
  CHECK(doc["satisfied"] == false);
  const auto& rule = doc["rules"][2];
  CHECK(rule["name"] == "retrospective_each_sprint");
  CHECK(rule["verdict"] == "violated");
  CHECK(rule["origin"] == "scrum");
  CHECK(rule["mandatory"] == true);
  CHECK(rule["witness"] == json::array({"s2"}));
  CHECK(doc["rules"][0]["witness"].is_null());

  Project p = fixture("waterfall_ok");
  p.targets.push_back("ghost");
  doc = json::parse(report_to_json(evaluate_process(load_process("waterfall"), p)));
  CHECK(doc["invariant_violations"][0]["code"] == "INV-REF-EXISTS");
  CHECK(doc["invariant_violations"][0]["entity_ids"] == json::array({"ghost"}));
}

TEST_CASE("text report")
{
  const std::string text = report_to_text(evaluate_process(load_process("waterfall"), fixture("waterfall_bad_order")));
  CHECK(text.find("NOT SATISFIED") != std::string::npos);
  CHECK(text.find("order_design") != std::string::npos);
  CHECK(text.find("violated") != std::string::npos);
}
