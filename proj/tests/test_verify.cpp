#include "zxlat/errors.hpp"
#include "zxlat/models/builders.hpp"
#include "zxlat/models/graph_io.hpp"
#include "zxlat/verify/report.hpp"
#include "zxlat/verify/suites.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

using namespace zxlat;
using verify::Outcome;
using verify::Report;
using verify::Status;

namespace {

void expectAllPass(const Report& r) {
  for (const auto& c : r.checks()) {
    EXPECT_NE(c.status, Status::Fail) << r.suite() << ":" << c.id << " error " << c.observedError
                                      << " " << c.note;
    if (c.status == Status::Pass) {
      EXPECT_LE(c.observedError, c.tolerance) << c.id;
    }
  }
}

int runCli(const std::string& args, const std::string& outFile) {
  const std::string cmd = std::string(ZXLAT_CLI) + " " + args + " > " + outFile + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json readJson(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

} // namespace

TEST(Report, PassFailAndSkip) {
  Report r("unit");
  r.run("good", "a = a", 1e-12, [] { return Outcome{1e-14, 2.0, ""}; });
  EXPECT_EQ(r.exitCode(), 0);
  r.skip("gated", "big", 1e-9, "too many qubits");
  EXPECT_EQ(r.exitCode(), 3);
  EXPECT_FALSE(r.allPassed());
  r.run("bad", "a = b", 1e-12, [] { return Outcome{0.5, std::nullopt, ""}; });
  EXPECT_EQ(r.exitCode(), 1);
  EXPECT_TRUE(r.anyFailed());
  EXPECT_EQ(r.check("good").status, Status::Pass);
  EXPECT_EQ(r.check("bad").status, Status::Fail);
  EXPECT_TRUE(r.check("gated").sizeGated);
}

TEST(Report, ExceptionsBecomeFailuresOrGatedSkips) {
  Report r("unit");
  r.run("large", "x", 1e-9, []() -> Outcome { throw TooLarge("2^40"); });
  r.run("boom", "y", 1e-9, []() -> Outcome { throw BadCurve("open"); });
  EXPECT_EQ(r.check("large").status, Status::Skipped);
  EXPECT_TRUE(r.check("large").sizeGated);
  EXPECT_EQ(r.check("boom").status, Status::Fail);
  EXPECT_TRUE(std::isinf(r.check("boom").observedError));
  EXPECT_NE(r.check("boom").note.find("open"), std::string::npos);
}

TEST(Report, NanErrorFails) {
  Report r("unit");
  r.run("nan", "x", 1e-9, [] { return Outcome{std::nan(""), std::nullopt, ""}; });
  EXPECT_EQ(r.check("nan").status, Status::Fail);
}

TEST(Report, NonGatedSkipKeepsExitZero) {
  Report r("unit");
  r.skip("n/a", "x", 1e-9, "not applicable here", false);
  EXPECT_EQ(r.exitCode(), 0);
}

TEST(Report, DuplicateIdThrows) {
  Report r("unit");
  r.run("a", "x", 1.0, [] { return Outcome{}; });
  EXPECT_ANY_THROW(r.run("a", "x", 1.0, [] { return Outcome{}; }));
}

TEST(Report, JsonSchema) {
  Report r("unit");
  r.setParameter("L", 4);
  r.addWarning("heads up");
  r.run("c", "identity", 1e-10, [] { return Outcome{1e-12, 4.0, "n"}; });
  const auto j = r.toJson();
  EXPECT_EQ(j["suite"], "unit");
  EXPECT_EQ(j["parameters"]["L"], 4);
  ASSERT_EQ(j["checks"].size(), 1U);
  const auto& c = j["checks"][0];
  for (const char* key : {"id", "anchor", "status", "observed_error", "tolerance", "runtime_ms"}) {
    EXPECT_TRUE(c.contains(key)) << key;
  }
  EXPECT_EQ(c["status"], "pass");
  EXPECT_EQ(c["value"], 4.0);
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["environment"].contains("compiler"));
  EXPECT_EQ(j["warnings"][0], "heads up");
}

TEST(Suites, SelftestRulesPasses) {
  verify::SuiteOptions o;
  const auto r = verify::selftestRules(o, 4);
  EXPECT_EQ(r.checks().size(), 12U);
  expectAllPass(r);
  EXPECT_EQ(r.exitCode(), 0);
}

TEST(Suites, Verify1dPasses) {
  verify::SuiteOptions o;
  for (std::size_t L : {3U, 4U, 7U}) {
    const auto r = verify::verify1d(L, 1.0, o);
    expectAllPass(r);
    EXPECT_EQ(r.exitCode(), 0) << L;
  }
}

TEST(Suites, Verify1dAwayFromOneSkipsDegeneracy) {
  verify::SuiteOptions o;
  const auto r = verify::verify1d(5, 0.4, o);
  expectAllPass(r);
  EXPECT_EQ(r.check("deformed_threefold_ground").status, Status::Skipped);
  EXPECT_EQ(r.exitCode(), 0);
}

TEST(Suites, Verify1dSizeGates) {
  verify::SuiteOptions o;
  o.denseCap = 4;
  const auto r = verify::verify1d(6, 1.0, o);
  expectAllPass(r);
  EXPECT_TRUE(r.anySizeGated());
  EXPECT_EQ(r.exitCode(), 3);
}

TEST(Suites, VerifyGraphOnBuiltModels) {
  verify::SuiteOptions o;
  for (const auto& m : {models::isingChain(5), models::ashkinTeller(4), models::threeSpin(6),
                        models::plaquetteIsing(2, 3)}) {
    const auto r = verify::verifyGraph(m, o);
    expectAllPass(r);
    EXPECT_EQ(r.exitCode(), 0) << m.name;
  }
}

TEST(Suites, AshkinTellerFusionCoefficient) {
  verify::SuiteOptions o;
  const auto r = verify::verifyGraph(models::ashkinTeller(4), o);
  bool seen = false;
  for (const auto& c : r.checks()) {
    if (c.id.rfind("fusion_coefficient:", 0) == 0) {
      ASSERT_TRUE(c.value.has_value());
      EXPECT_NEAR(*c.value, 4.0, 1e-10);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Suites, Verify3dGatesAboveStateCap) {
  verify::SuiteOptions o;
  o.stateCap = 20;
  const auto r = verify::verify3d(2, 2, 2, 1.0, false, o);
  expectAllPass(r);
  EXPECT_TRUE(r.anySizeGated());
  EXPECT_EQ(r.check("kernel_dimension").status, Status::Pass);
}

TEST(Cli, Verify1dWritesReport) {
  const std::string out = ::testing::TempDir() + "v1d.json";
  EXPECT_EQ(runCli("verify-1d --L 4 --lambda 1", out), 0);
  const auto j = readJson(out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_GT(j["checks"].size(), 10U);
  std::remove(out.c_str());
}

TEST(Cli, BadArgumentsExitTwo) {
  const std::string out = ::testing::TempDir() + "bad.json";
  EXPECT_EQ(runCli("verify-1d --L 2", out), 2);
  EXPECT_EQ(runCli("no-such-command", out), 2);
  EXPECT_EQ(runCli("verify-graph /nonexistent.json", out), 2);
  std::remove(out.c_str());
}

TEST(Cli, VerifyGraphFixture) {
  const std::string out = ::testing::TempDir() + "vg.json";
  EXPECT_EQ(runCli(std::string("verify-graph ") + ZXLAT_DATA_DIR + "/graphs/ashkin_teller_L4.json", out), 0);
  const auto j = readJson(out);
  EXPECT_EQ(j["passed"], true);
  std::remove(out.c_str());
}

TEST(Cli, SimplifyAndContract) {
  const std::string dir = ::testing::TempDir();
  {
    std::ofstream f(dir + "chain.json");
    f << R"({"spiders": [{"id": 1, "color": "Z", "phase_num": 1, "phase_den_log2": 2},
                         {"id": 2, "color": "Z", "phase_num": 1, "phase_den_log2": 2}],
             "wires": [{"a": 0, "b": 1}, {"a": 1, "b": 2}, {"a": 2, "b": 3}],
             "inputs": [0], "outputs": [3]})";
  }
  EXPECT_EQ(runCli("simplify " + dir + "chain.json", dir + "s.json"), 0);
  const auto s = readJson(dir + "s.json");
  EXPECT_EQ(s["trace"].size(), 1U);
  EXPECT_EQ(s["trace"][0]["rule"], "SF");
  EXPECT_EQ(runCli("contract " + dir + "chain.json", dir + "c.json"), 0);
  const auto c = readJson(dir + "c.json");
  EXPECT_EQ(c["rows"], 2);
  EXPECT_NEAR(c["re"][0][0].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(c["im"][1][1].get<double>(), 1.0, 1e-15);
  for (const char* f : {"chain.json", "s.json", "c.json"}) {
    std::remove((dir + f).c_str());
  }
}
