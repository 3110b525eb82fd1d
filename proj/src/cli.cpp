#include "setheory/cli.hpp"

#include "setheory/conformance.hpp"
#include "setheory/library.hpp"
#include "setheory/simulator.hpp"
#include "setheory/trace.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace setheory {

namespace {

struct Options
{
  std::istream* in = nullptr;
  std::string process;
  std::string project_file;
  std::string format = "text";
  bool lenient = false;
  std::uint64_t seed = 1;
  std::string out_file;
  std::string mutation;
  GenParams gen;
};

void print_warnings(const std::vector<SchemaError>& warnings, std::ostream& err)
{
  for (const auto& w : warnings)
    err << "warning: " << (w.path.empty() ? "<root>" : w.path) << ": " << w.message << "\n";
}

Project load(const Options& o, std::ostream& err)
{
  std::vector<SchemaError> warnings;
  Project p;
  if (o.project_file == "-") {
    std::stringstream buf;
    buf << o.in->rdbuf();
    p = load_project(buf.str(), LoadOptions{o.lenient}, &warnings);
  } else {
    p = load_project_file(o.project_file, LoadOptions{o.lenient}, &warnings);
  }
  print_warnings(warnings, err);
  return p;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err)
{
  const Project p = load(o, err);
  const auto violations = check_invariants(p);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["project"] = p.name;
    doc["valid"] = violations.empty();
    auto& list = doc["invariant_violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations)
      list.push_back({{"code", code_name(v.code)}, {"entity_ids", v.entity_ids}, {"message", v.message}});
    out << doc.dump(2) << "\n";
  } else {
    out << "project " << p.name << ": " << (violations.empty() ? "valid" : "invariant violations") << "\n";
    for (const auto& v : violations)
      out << "  " << code_name(v.code) << "  " << v.message << "\n";
  }
  return violations.empty() ? exit_ok : exit_not_satisfied;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
  const Process process = load_process(o.process);
  const Project project = load(o, err);
  const ConformanceReport report = evaluate_process(process, project);
  out << (o.format == "json" ? report_to_json(report) : report_to_text(report));
  return is_satisfied(report) ? exit_ok : exit_not_satisfied;
}

int cmd_rules(const Options& o, std::ostream& out)
{
  const Process process = load_process(o.process);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["process"] = process.name;
    doc["lineage"] = process.lineage;
    auto& rules = doc["rules"] = nlohmann::ordered_json::array();
    for (const auto& r : rule_set(process))
      rules.push_back({{"name", r.name}, {"origin", r.origin}, {"mandatory", r.mandatory}});
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  out << "process " << process.name;
  if (process.lineage.size() > 1) {
    out << " (lineage:";
    for (const auto& ancestor : process.lineage)
      out << " " << ancestor << (ancestor == process.name ? "" : " ->");
    out << ")";
  }
  out << "\n";
  for (const auto& r : rule_set(process))
    out << "  " << r.name << "  [" << r.origin << (r.mandatory ? "" : ", advisory") << "]\n";
  return exit_ok;
}

int cmd_simulate(const Options& o, std::ostream& out)
{
  const Process process = load_process(o.process);
  GenParams params = o.gen;
  params.seed = o.seed;
  write_output(emit_project(generate_trace(process, params)), o.out_file, out);
  return exit_ok;
}

int cmd_mutate(const Options& o, std::ostream& out, std::ostream& err)
{
  const Process process = load_process(o.process);
  const Project project = load(o, err);
  std::optional<MutationKind> only;
  if (!o.mutation.empty())
    only = mutation_from_name(o.mutation);
  const MutatedTrace mutated = mutate_trace(project, process, o.seed, only);
  err << "mutation " << to_string(mutated.kind) << ": " << mutated.description << "\n"
      << "expected: " << mutated.expected.describe() << "\n";
  write_output(emit_project(mutated.project), o.out_file, out);
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  return run_cli(args, std::cin, out, err);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Check recorded software projects against process models.", "setheory"};
  app.require_subcommand(1);
  Options o;
  o.in = &in;

  auto add_process = [&](CLI::App* cmd) {
    cmd->add_option("--process", o.process, "Built-in process name or path to a .procl file")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_project = [&](CLI::App* cmd) {
    cmd->add_option("project-file", o.project_file, "Project trace (JSON), or - for standard input")->required();
    cmd->add_flag("--lenient", o.lenient, "Downgrade unknown fields to warnings");
  };

  auto* validate = app.add_subcommand("validate", "Schema-validate a trace and check the ontology invariants");
  add_project(validate);
  add_format(validate);

  auto* check = app.add_subcommand("check", "Check a trace against a process");
  add_process(check);
  add_project(check);
  add_format(check);

  auto* rules = app.add_subcommand("rules", "List the flattened rules of a process with their origins");
  add_process(rules);
  add_format(rules);

  auto* simulate = app.add_subcommand("simulate", "Generate a conformant trace for a process");
  add_process(simulate);
  simulate->add_option("--seed", o.seed, "Generator seed")->required();
  simulate->add_option("--out", o.out_file, "Write the trace here instead of standard output");
  simulate->add_option("--products", o.gen.n_products, "Number of products (1-50)");
  simulate->add_option("--milestones", o.gen.n_milestones, "Number of milestones (1-20)");
  simulate->add_option("--phase-gap-max", o.gen.phase_gap_max, "Largest gap between phases or sprints");
  simulate->add_option("--sprints", o.gen.sprint_count, "Number of sprints (0-100)");

  auto* mutate = app.add_subcommand("mutate", "Apply one catalog mutation to a conformant trace");
  add_process(mutate);
  mutate->add_option("--seed", o.seed, "Mutation seed")->required();
  add_project(mutate);
  mutate->add_option("--out", o.out_file, "Write the mutated trace here instead of standard output");
  std::vector<std::string> kinds;
  for (auto k : kMutationCatalog)
    kinds.emplace_back(to_string(k));
  mutate->add_option("--kind", o.mutation, "Restrict to one mutation kind")->check(CLI::IsMember(kinds));

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*validate)
      return cmd_validate(o, out, err);
    if (*check)
      return cmd_check(o, out, err);
    if (*rules)
      return cmd_rules(o, out);
    if (*simulate)
      return cmd_simulate(o, out);
    if (*mutate)
      return cmd_mutate(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

} // namespace setheory
