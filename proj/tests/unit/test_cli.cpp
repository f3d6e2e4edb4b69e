#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wfid/checks.hpp"
#include "wfid/cli.hpp"

using namespace wfid;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wfid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "wfid_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json load(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, VerifyWritesAReport) {
  const auto path = temp_file("jing.json");
  const Invocation r = invoke({"verify", "jing", "--ell", "3", "--seed", "1", "--trials", "2", "--json", path.string()});
  EXPECT_EQ(r.code, 0);
  const auto j = load(path);
  EXPECT_EQ(j["verdict"], "verified");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_EQ(j["trials"].size(), 2u);
  EXPECT_TRUE(j.contains("timing_ms"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"verify", "id1", "--ell", "-1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "nope"}).code, 2);
  EXPECT_EQ(invoke({"verify", "id1", "--i", "2", "--j", "1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "jing", "--field", "prime", "--prime", "91"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, MutationExitsOne) {
  const Invocation r = invoke({"verify", "id2", "--ell", "2", "--n", "2", "--i", "1", "--j", "2", "--mutate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "falsified");
}

TEST(Cli, LiftedConditionIsReportedAsSuch) {
  const Invocation r = invoke({"verify", "id1", "--ell", "2", "--n", "2", "--lift-condition"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "condition-not-satisfied");
}

TEST(Cli, SeedComesFromTheEnvironment) {
  ::setenv("WFID_SEED", "4242", 1);
  const Invocation r = invoke({"verify", "jing", "--ell", "1", "--trials", "1"});
  ::unsetenv("WFID_SEED");
  EXPECT_EQ(nlohmann::json::parse(r.out)["config"]["seed"], 4242);
  EXPECT_EQ(nlohmann::json::parse(invoke({"verify", "jing", "--ell", "1"}).out)["config"]["seed"], kDefaultSeed);
}

TEST(Cli, PrimeFieldMode) {
  const Invocation r = invoke({"verify", "jing", "--ell", "4", "--field", "prime"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["config"]["field"], "prime");
}

TEST(Cli, SuiteAggregates) {
  const auto empty = temp_file("empty.json");
  std::ofstream(empty) << R"({"entries": []})";
  EXPECT_EQ(invoke({"suite", empty.string()}).code, 2);

  const auto ok = temp_file("ok.json");
  std::ofstream(ok) << R"({"entries": [{"check": "jing", "ell": 2}, {"check": "id1", "ell": 1, "n": 2},
                                       {"check": "id2", "ell": 2, "n": 2, "mutate": true, "expect": "falsified"}]})";
  EXPECT_EQ(invoke({"suite", ok.string()}).code, 0);

  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << R"({"entries": [{"check": "jing", "ell": 2}, {"check": "id2", "ell": 2, "n": 2, "mutate": true}]})";
  const Invocation r = invoke({"suite", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[1] id2: falsified"), std::string::npos);

  const auto broken = temp_file("broken.json");
  std::ofstream(broken) << R"({"entries": [{"check": "jing", "ell": -3}, {"check": "jing", "ell": 1}]})";
  const auto agg = temp_file("agg.json");
  EXPECT_EQ(invoke({"suite", broken.string(), "--json", agg.string()}).code, 3);
  const auto j = load(agg);
  EXPECT_EQ(j["entries"][0]["verdict"], "error");
  EXPECT_EQ(j["entries"][1]["verdict"], "verified");
}

TEST(Cli, ReplayIsBitIdentical) {
  const auto path = temp_file("replay.json");
  ASSERT_EQ(invoke({"verify", "idp1", "--ell", "1", "--n", "2", "--K", "4", "--no-timing", "--json", path.string()}).code, 0);
  EXPECT_EQ(invoke({"replay", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream before;
  before << in.rdbuf();
  nlohmann::json fresh;
  ASSERT_TRUE(cli::replay_matches(nlohmann::json::parse(before.str()), &fresh));
  EXPECT_EQ(fresh.dump(2) + "\n", before.str());
}

TEST(Cli, ReplayDetectsTampering) {
  const auto path = temp_file("tamper.json");
  ASSERT_EQ(invoke({"verify", "jing", "--ell", "2", "--json", path.string()}).code, 0);
  auto j = load(path);
  j["trials"][0]["draws"][0]["value"] = "12345/7";
  std::ofstream(path) << j.dump();
  EXPECT_EQ(invoke({"replay", path.string()}).code, 1);
}

TEST(Cli, RegistryCoversEveryCheck) {
  for (const char* name : {"jing", "id1", "id2", "pp", "mn", "detq", "deta", "idp1", "idp2", "xx", "xt", "detprod",
                           "rll", "kbi", "bc1", "bc2", "singular", "resI"}) {
    EXPECT_TRUE(check_registry().count(name)) << name;
  }
}
