#include "doctest.h"

#include "json.hpp"
#include "setheory/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace setheory;
using json = nlohmann::json;

namespace {

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "setheory");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(SETHEORY_FIXTURE_DIR) + "/" + name + ".json"; }

struct TempDir
{
  std::filesystem::path path = std::filesystem::temp_directory_path() / "setheory_cli_test";
  TempDir() { std::filesystem::create_directories(path); }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("check fixtures")
{
  Run ok = run({"check", "--process", "waterfall", fixture("waterfall_ok")});
  CHECK(ok.code == exit_ok);
  CHECK(ok.out.find("SATISFIED") != std::string::npos);

  Run bad = run({"check", "--process", "waterfall", fixture("waterfall_bad_order"), "--format", "json"});
  CHECK(bad.code == exit_not_satisfied);
  json doc = json::parse(bad.out);
  CHECK(doc["satisfied"] == false);
  bool named = false;
  for (const auto& r : doc["rules"])
    named = named || (r["name"] == "order_design" && r["verdict"] == "violated");
  CHECK(named);

  Run retro = run({"check", "--process", "our_scrum_variant", fixture("scrum_missing_retro"), "--format", "json"});
  CHECK(retro.code == exit_not_satisfied);
  CHECK(retro.out.find("retrospective_each_sprint") != std::string::npos);
}

TEST_CASE("validate")
{
  TempDir tmp;
  CHECK(run({"validate", fixture("waterfall_ok")}).code == exit_ok);

  json doc = json::parse(std::ifstream(fixture("waterfall_ok")));
  doc["targets"].push_back("ghost");
  write(tmp.file("dangling.json"), doc.dump());
  Run r = run({"validate", tmp.file("dangling.json"), "--format", "json"});
  CHECK(r.code == exit_not_satisfied);
  CHECK(json::parse(r.out)["invariant_violations"][0]["code"] == "INV-REF-EXISTS");

  doc["extra"] = 1;
  write(tmp.file("extra.json"), doc.dump());
  r = run({"validate", tmp.file("extra.json")});
  CHECK(r.code == exit_error);
  CHECK(r.err.find("extra") != std::string::npos);
  r = run({"validate", "--lenient", tmp.file("extra.json")});
  CHECK(r.code == exit_not_satisfied);
  CHECK(r.err.find("warning: extra") != std::string::npos);

  write(tmp.file("broken.json"), "{");
  CHECK(run({"validate", tmp.file("broken.json")}).code == exit_error);
  CHECK(run({"validate", tmp.file("missing.json")}).code == exit_error);
}

TEST_CASE("rules")
{
  Run r = run({"rules", "--process", "our_scrum_variant", "--format", "json"});
  CHECK(r.code == exit_ok);
  json doc = json::parse(r.out);
  CHECK(doc["lineage"] == json::array({"scrum", "our_scrum_variant"}));
  REQUIRE(doc["rules"].size() == 4);
  CHECK(doc["rules"][3]["name"] == "burndown_present");
  CHECK(doc["rules"][3]["mandatory"] == false);

  r = run({"rules", "--process", "waterfall"});
  CHECK(r.out.find("order_maintenance  [waterfall]") != std::string::npos);
}

TEST_CASE("simulate, check and mutate")
{
  TempDir tmp;
  const std::string trace = tmp.file("trace.json");
  const std::string mutated = tmp.file("mutated.json");
  for (const char* proc : {"waterfall", "scrum", "our_scrum_variant"}) {
    CAPTURE(proc);
    Run sim = run({"simulate", "--process", proc, "--seed", "5", "--products", "4", "--sprints", "2"});
    REQUIRE(sim.code == exit_ok);
    write(trace, sim.out);
    CHECK(run({"simulate", "--process", proc, "--seed", "5", "--products", "4", "--sprints", "2"}).out == sim.out);
    CHECK(run({"check", "--process", proc, trace}).code == exit_ok);

    Run mut = run({"mutate", "--process", proc, "--seed", "3", trace, "--out", mutated});
    REQUIRE(mut.code == exit_ok);
    CHECK(mut.out.empty());
    CHECK(mut.err.find("expected: ") != std::string::npos);
    CHECK(run({"check", "--process", proc, mutated}).code == exit_not_satisfied);
  }
  Run sim = run({"simulate", "--process", "waterfall", "--seed", "1", "--out", trace});
  CHECK(sim.out.empty());
  CHECK(run({"mutate", "--process", "waterfall", "--seed", "1", trace, "--kind", "swap_milestone_due"}).code == exit_ok);
  CHECK(run({"mutate", "--process", "waterfall", "--seed", "1", trace, "--kind", "delete_retrospective"}).code ==
        exit_error);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).code == exit_error);
  CHECK(run({"frobnicate"}).code == exit_error);
  CHECK(run({"check", fixture("waterfall_ok")}).code == exit_error);
  CHECK(run({"check", "--process", "waterfall", fixture("waterfall_ok"), "--format", "xml"}).code == exit_error);
  CHECK(run({"simulate", "--process", "waterfall"}).code == exit_error);
  CHECK(run({"simulate", "--process", "waterfall", "--seed", "1", "--products", "0"}).code == exit_error);
  CHECK(run({"mutate", "--process", "waterfall", "--seed", "1", fixture("waterfall_ok"), "--kind", "nope"}).code ==
        exit_error);
  Run r = run({"check", "--process", "nope", fixture("waterfall_ok")});
  CHECK(r.code == exit_error);
  CHECK(r.err.rfind("error: ", 0) == 0);
  Run help = run({"--help"});
  CHECK(help.code == exit_ok);
  CHECK(help.out.find("simulate") != std::string::npos);
}

TEST_CASE("custom process file")
{
  TempDir tmp;
  const std::string procl = tmp.file("strict.procl");
  write(procl, "process strict extends waterfall {\n"
               "  rule short_design: design.end_time - design.start_time <= 5;\n"
               "}\n");
  Run r = run({"check", "--process", procl, fixture("waterfall_ok"), "--format", "json"});
  CHECK(r.code == exit_not_satisfied);
  CHECK(json::parse(r.out)["process"] == "strict");
  write(procl, "process broken { rule r: ; }\n");
  r = run({"rules", "--process", procl});
  CHECK(r.code == exit_error);
  CHECK(r.err.find("strict.procl:1:") != std::string::npos);
}

TEST_CASE("project file from standard input")
{
  std::ostringstream sim_out, sim_err;
  REQUIRE(run_cli({"setheory", "simulate", "--process", "scrum", "--seed", "8"}, sim_out, sim_err) == exit_ok);
  std::istringstream in(sim_out.str());
  std::ostringstream out, err;
  CHECK(run_cli({"setheory", "check", "--process", "scrum", "-"}, in, out, err) == exit_ok);
  std::istringstream garbage("not json");
  CHECK(run_cli({"setheory", "validate", "-"}, garbage, out, err) == exit_error);
}
