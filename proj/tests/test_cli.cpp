#include "polydual/cli.hpp"
#include "polydual/report_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace polydual;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "polydual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("polydual_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Checks the subset of JSON Schema used by docs/report.schema.json.
void validate(const Json& value, const Json& schema, const std::string& where) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = false;
    if (t == "string") ok = value.is_string();
    if (t == "integer") ok = value.is_number_integer();
    if (t == "number") ok = value.is_number();
    if (t == "boolean") ok = value.is_boolean();
    if (t == "object") ok = value.is_object();
    ASSERT_TRUE(ok) << where << " should be " << t;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == value;
    EXPECT_TRUE(found) << where << " = " << value.dump();
  }
  if (schema.contains("pattern")) {
    EXPECT_TRUE(std::regex_match(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
        << where << " = " << value.dump();
  }
  if (schema.contains("minimum")) {
    EXPECT_GE(value.get<double>(), schema["minimum"].get<double>()) << where;
  }
  if (value.is_object() && schema.contains("properties")) {
    for (const auto& req : schema.value("required", Json::array())) {
      EXPECT_TRUE(value.contains(req.get<std::string>())) << where << " lacks " << req;
    }
    for (const auto& [k, v] : value.items()) {
      if (schema["properties"].contains(k)) {
        validate(v, schema["properties"][k], where + "." + k);
      } else {
        ADD_FAILURE() << where << " has key " << k << " outside the schema";
      }
    }
  }
}

Json report_schema() {
  std::ifstream in(POLYDUAL_SCHEMA_PATH);
  return Json::parse(in);
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--ring", "F_2"}).code, kExitUsage);  // k missing
  EXPECT_EQ(run({"count", "--ring", "F_2", "--k", "1", "--quantity", "orbits"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--ring", "F_2[1]", "--k", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"ring", "info"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--ring", "F_2", "--k", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"perm", "check", "--ring", "F_3", "--poly", "x", "--path", "nonfield"}).code, kExitUsage);
}

TEST(Cli, DomainErrorsExitOneWithJson) {
  struct Case {
    std::vector<std::string> args;
    std::string code;
  };
  const std::vector<Case> cases{
      {{"ring", "info", "--ring", "Z/6"}, "invalid_ring_spec"},
      {{"null", "check", "--ring", "Z/4", "--poly", "x^^2"}, "parse_error"},
      {{"perm", "check", "--ring", "F_2 (+) Z/4", "--k", "1", "--poly", "x", "--path", "nonfield"},
       "precondition"},
      {{"null", "enumerate", "--ring", "Z/9", "--n", "18", "--budget", "1000"}, "budget_exceeded"},
      {{"pair", "construct", "--ring", "Z/4", "--values", "0,1,2,3", "--derivative", "1,1,1,1"},
       "precondition"},
  };
  for (const auto& c : cases) {
    const CliRun r = run(c.args);
    EXPECT_EQ(r.code, kExitDomainError) << c.args[0];
    EXPECT_TRUE(r.out.empty());
    const Json j = Json::parse(r.err);
    EXPECT_EQ(j["error"]["code"], c.code) << r.err;
    EXPECT_TRUE(j["error"]["message"].is_string());
  }
  const Json j = Json::parse(run({"null", "check", "--ring", "Z/4", "--poly", "x^^2"}).err);
  EXPECT_EQ(j["error"]["offset"], 2);
}

TEST(Cli, RingInfo) {
  const CliRun r = run({"ring", "info", "--ring", "Z/4[2]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["ring"], "Z/4[2]");
  EXPECT_EQ(j["order"], "4");
  EXPECT_EQ(j["units"], "2");
  EXPECT_EQ(j["dual"]["order"], "64");
  EXPECT_EQ(j["dual"]["units"], "32");
  EXPECT_EQ(j["is_local"], true);
}

TEST(Cli, NullAndPermCommands) {
  Json j = Json::parse(run({"null", "check", "--ring", "F_2", "--poly", "x^2+x"}).out);
  EXPECT_EQ(j["in_N"], true);
  EXPECT_EQ(j["in_Nprime"], false);
  j = Json::parse(run({"null", "check", "--ring", "Z/4[1]", "--poly", "a1*(2x^2+2x)"}).out);
  EXPECT_EQ(j["null_on_dual"], true);
  j = Json::parse(run({"null", "canonical", "--ring", "Z/4"}).out);
  EXPECT_EQ(j["base"], "x^4+2*x^3+3*x^2+2*x");
  EXPECT_EQ(j["dual_degree"], 8);
  j = Json::parse(run({"null", "enumerate", "--ring", "F_2", "--n", "4"}).out);
  EXPECT_EQ(j["N"]["size"], "4");
  EXPECT_EQ(j["Nprime"]["size"], "1");

  j = Json::parse(run({"perm", "check", "--ring", "F_3", "--poly", "x^2"}).out);
  EXPECT_EQ(j["is_permutation"], false);
  EXPECT_EQ(j["witness"]["kind"], "collision");
  EXPECT_EQ(j["witness"]["x"], "1");
  EXPECT_EQ(j["witness"]["y"], "2");
  j = Json::parse(run({"perm", "check", "--ring", "F_3[1]", "--poly", "x^3"}).out);
  EXPECT_EQ(j["witness"]["kind"], "nonunit_derivative");
  EXPECT_EQ(j["witness"]["point"], "0");
  j = Json::parse(run({"perm", "check", "--ring", "Z/4", "--k", "1", "--poly", "x"}).out);
  EXPECT_EQ(j["is_permutation"], true);
  EXPECT_EQ(j["criterion_path"], "dual_criterion");

  j = Json::parse(run({"pair", "construct", "--ring", "F_3", "--values", "0,2,1", "--derivative", "1,1,1"}).out);
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, CountJsonFollowsSchema) {
  const Json schema = report_schema();
  const CliRun r = run({"count", "--ring", "F_3", "--k", "1", "--quantity", "perms", "--method", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  validate(j, schema, "count");
  EXPECT_EQ(j["formula"], "1296");
  EXPECT_EQ(j["enum"], "1296");
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(to_json(count_report_from_json(j)), j);

  const CliRun v = run({"verify", "--ring", "Z/4", "--k", "1"});
  ASSERT_EQ(v.code, kExitOk) << v.err;
  for (const Json& e : Json::parse(v.out)) validate(e, schema, "verify");
  const CliRun s = run({"count", "--ring", "F_5", "--k", "1", "--quantity", "stab", "--method", "enum", "--budget", "10"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const Json sj = Json::parse(s.out);
  validate(sj, schema, "skipped");
  EXPECT_EQ(sj["enum"], "skipped:budget");
}

TEST(Cli, ReportParserRejectsSchemaViolations) {
  Json j = Json::parse(R"({"ring":"F_2","k":1,"quantity":"perms","method":"both","relation":"equal","formula":8})");
  EXPECT_THROW(count_report_from_json(j), Error);
  j["formula"] = "8x";
  EXPECT_THROW(count_report_from_json(j), Error);
  j.erase("formula");
  j.erase("ring");
  EXPECT_THROW(count_report_from_json(j), Error);
}

TEST(Cli, CsvAndTextFormats) {
  const CliRun r = run({"count", "--ring", "F_2", "--k", "1", "--quantity", "functions", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "ring,k,quantity,formula,enum,match,seconds");
  EXPECT_EQ(row.rfind("F_2,1,functions,64,64,true,", 0), 0U) << row;
  const CliRun t = run({"count", "--ring", "F_2", "--k", "1", "--quantity", "functions", "--format", "text"});
  EXPECT_EQ(t.out, "F_2 k=1 functions: formula=64 enum=64 match\n");
}

TEST(Cli, WarmCacheGivesIdenticalOutput) {
  const fs::path dir = scratch("cache");
  const std::vector<std::string> args{"count", "--ring", "F_3", "--k", "1", "--quantity", "functions",
                                      "--cache-dir", dir.string()};
  const CliRun cold = run(args);
  ASSERT_EQ(cold.code, kExitOk) << cold.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1U);
  const CliRun warm = run(args);
  EXPECT_EQ(warm.out, cold.out);

  const std::vector<std::string> vargs{"verify", "--ring", "F_2", "--k", "1", "--cache-dir", dir.string()};
  EXPECT_EQ(run(vargs).out, run(vargs).out);

  // The environment variable names the same cache.
  ::setenv(kCacheDirEnv, dir.string().c_str(), 1);
  const CliRun env = run({"count", "--ring", "F_3", "--k", "1", "--quantity", "functions"});
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(env.out, cold.out);
  fs::remove_all(dir);
}

TEST(Cli, OutFileAndSweep) {
  const fs::path dir = scratch("sweep");
  fs::create_directories(dir);
  const fs::path cfg = dir / "rings.json";
  std::ofstream(cfg) << R"({"rings": ["F_2", "F_3", "Z/4"], "k": {"from": 1, "to": 2},
                            "quantities": ["functions", "perms", "stab"], "method": "formula"})";
  const fs::path out = dir / "out.csv";
  const CliRun r = run({"sweep", "--rings", cfg.string(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::istringstream lines(slurp(out));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "ring,k,quantity,formula,enum,match,seconds");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6) << line;
  }
  EXPECT_EQ(rows, 18U);

  std::ofstream(cfg) << R"({"rings": ["Z/6", "F_2"], "k": 1, "quantities": ["perms"]})";
  const CliRun bad = run({"sweep", "--rings", cfg.string(), "--format", "json"});
  ASSERT_EQ(bad.code, kExitOk) << bad.err;
  const Json j = Json::parse(bad.out);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["enum"], "skipped:error:invalid_ring_spec");
  EXPECT_EQ(j[1]["match"], true);

  std::ofstream(cfg) << R"({"rings": "F_2"})";
  EXPECT_EQ(run({"sweep", "--rings", cfg.string()}).code, kExitDomainError);
  fs::remove_all(dir);
}

TEST(Cli, TimingCanBeOmitted) {
  const CliRun r = run({"count", "--ring", "F_2", "--k", "1", "--quantity", "perms", "--no-timing"});
  EXPECT_FALSE(Json::parse(r.out).contains("seconds"));
}

// The installed binary maps errors to process exit codes.
TEST(CliBinary, ExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(POLYDUAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("ring info --ring Z/4"), 0);
  EXPECT_EQ(status("ring info --ring Z/6"), 1);
  EXPECT_EQ(status("ring info"), 2);
  EXPECT_EQ(status("--help"), 0);
}
