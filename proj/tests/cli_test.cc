//
// Copyright 2026 The dpcondorcet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace dpcondorcet {
namespace {

using ::nlohmann::json;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

json Result(const CliRun& run) { return json::parse(run.out).at("result"); }

std::string WriteBallots(const std::string& name, const std::string& text) {
  const char* dir = std::getenv("DPCONDORCET_TMP");
  const std::string path =
      std::string(dir != nullptr ? dir : "/tmp") + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const std::string& NarrowWinnerFile() {
  static const std::string* path = new std::string(WriteBallots(
      "narrow.txt", "51: a1 > a2 > a3 > a4 > a5\n50: a2 > a3 > a4 > a5 > a1\n"));
  return *path;
}

TEST(CliTallyTest, NarrowWinner) {
  const CliRun run = Cli({"tally", "--ballots", NarrowWinnerFile()});
  ASSERT_EQ(run.code, 0) << run.err;
  const json r = Result(run);
  EXPECT_EQ(r["condorcet_winner"], "a1");
  EXPECT_EQ(r["S"][0][1], 51);
  EXPECT_EQ(r["w"][1][2], 101);
  EXPECT_EQ(r["U"][4][0], -1);
}

TEST(CliTallyTest, CycleHasNullWinner) {
  const std::string path =
      WriteBallots("cycle.txt", "1: a>b>c\n1: b>c>a\n1: c>a>b\n");
  const CliRun run = Cli({"tally", "--ballots", path});
  ASSERT_EQ(run.code, 0);
  EXPECT_TRUE(Result(run)["condorcet_winner"].is_null());
}

TEST(CliTallyTest, ParseErrors) {
  CliRun run = Cli({"tally", "--ballots", WriteBallots("empty.txt", "")});
  EXPECT_EQ(run.code, 1);
  EXPECT_THAT(run.err, HasSubstr("no votes"));
  run = Cli({"tally", "--ballots", WriteBallots("bad.txt", "1: a>b\n2 a>b\n")});
  EXPECT_EQ(run.code, 1);
  EXPECT_THAT(run.err, HasSubstr("line 2"));
  run = Cli({"tally", "--ballots", "/nonexistent/ballots.txt"});
  EXPECT_EQ(run.code, 1);
}

TEST(CliTallyTest, CsvAndTextCarryMetadata) {
  for (const char* format : {"csv", "text"}) {
    const CliRun run = Cli({"tally", "--ballots", NarrowWinnerFile(), "--format", format});
    ASSERT_EQ(run.code, 0);
    EXPECT_THAT(run.out, StartsWith(std::string("# dpcondorcet ") + kToolVersion));
    EXPECT_THAT(run.out, HasSubstr("\"seed\":0"));
  }
}

TEST(CliWinnerDistTest, NarrowWinnerLaplace) {
  const CliRun run = Cli({"winner-dist", "--ballots", NarrowWinnerFile(), "--mech", "lap",
                       "--lambda", "0.5"});
  ASSERT_EQ(run.code, 0) << run.err;
  const json r = Result(run);
  EXPECT_NEAR(std::exp(r["log_scores"][0].get<double>()), 0.2357, 5e-5);
  EXPECT_NEAR(std::exp(r["log_scores"][1].get<double>()), 0.3033, 5e-5);
  EXPECT_EQ(r["mechanism"], "lap");
  EXPECT_TRUE(r.contains("cw_exists_prob"));
  EXPECT_TRUE(r.contains("expected_rounds"));
}

TEST(CliWinnerDistTest, OpposedVotesAreUniform) {
  const std::string path = WriteBallots("opposed.txt", "1: a>b>c\n1: c>b>a\n");
  const CliRun run =
      Cli({"winner-dist", "--ballots", path, "--mech", "exp", "--lambda", "1"});
  ASSERT_EQ(run.code, 0);
  for (const json& p : Result(run)["probs"]) {
    EXPECT_NEAR(p.get<double>(), 1.0 / 3, 1e-12);
  }
}

TEST(CliWinnerDistTest, RandomizedResponseClosedForm) {
  const std::string path = WriteBallots("tiefree.txt", "2: a>b>c\n1: c>a>b\n");
  const CliRun run =
      Cli({"winner-dist", "--ballots", path, "--mech", "rr", "--lambda", "1"});
  ASSERT_EQ(run.code, 0);
  // a beats b and c, b beats c.
  const double e = std::exp(1.0);
  const double z = e * e + e + 1;
  const json probs = Result(run)["probs"];
  EXPECT_NEAR(probs[0].get<double>(), e * e / z, 1e-11);
  EXPECT_NEAR(probs[1].get<double>(), e / z, 1e-11);
  EXPECT_NEAR(probs[2].get<double>(), 1 / z, 1e-11);
}

TEST(CliWinnerDistTest, RequiresMechanismAndLambda) {
  EXPECT_EQ(Cli({"winner-dist", "--ballots", NarrowWinnerFile()}).code, 1);
  EXPECT_EQ(Cli({"winner-dist", "--ballots", NarrowWinnerFile(), "--mech", "lap",
                 "--lambda", "0"})
                .code,
            1);
  EXPECT_EQ(Cli({"winner-dist", "--ballots", NarrowWinnerFile(), "--mech", "gauss",
                 "--lambda", "1"})
                .code,
            1);
}

TEST(CliSampleTest, SeedIsMandatoryAndReproducible) {
  const std::vector<std::string> base = {"sample", "--ballots", NarrowWinnerFile(),
                                         "--mech", "lap", "--lambda", "0.5",
                                         "--draws", "50"};
  EXPECT_EQ(Cli(base).code, 1);
  std::vector<std::string> seeded = base;
  seeded.insert(seeded.end(), {"--seed", "18446744073709551615"});
  const CliRun a = Cli(seeded);
  const CliRun b = Cli(seeded);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["config"]["seed"], 18446744073709551615ull);
}

TEST(CliSampleTest, TwoAlternativesTakeOneRound) {
  const std::string path = WriteBallots("two.txt", "1: a>b\n1: b>a\n");
  const CliRun run = Cli({"sample", "--ballots", path, "--mech", "rr", "--lambda",
                       "1", "--seed", "3", "--draws", "500", "--method",
                       "rejection"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(Result(run)["mean_rounds"].get<double>(), 1.0);
}

TEST(CliSampleTest, MethodsAgree) {
  const std::string path = WriteBallots(
      "four.txt", "2: a>b>c>d\n1: d>c>a>b\n1: b>d>a>c\n");
  std::map<std::string, std::vector<double>> freq;
  for (const char* method : {"closed", "rejection"}) {
    const CliRun run = Cli({"sample", "--ballots", path, "--mech", "exp",
                         "--lambda", "0.5", "--seed", "9", "--draws", "100000",
                         "--method", method});
    ASSERT_EQ(run.code, 0) << run.err;
    const json counts = Result(run)["counts"];
    for (const char* label : {"a", "b", "c", "d"}) {
      freq[method].push_back(counts[label].get<double>() / 100000);
    }
  }
  double tv = 0.0;
  for (int a = 0; a < 4; ++a) {
    tv += std::fabs(freq["closed"][a] - freq["rejection"][a]) / 2;
  }
  EXPECT_LT(tv, 0.01);
}

TEST(CliAuditTest, EdpRandomizedResponse) {
  const CliRun run = Cli({"audit", "edp", "--mech", "rr", "--lambda", "1", "--m",
                       "2", "--n", "1"});
  ASSERT_EQ(run.code, 0) << run.err;
  const json r = Result(run);
  EXPECT_EQ(r["measured"]["eps_exact"].get<double>(), 1.0);
  EXPECT_EQ(r["claimed_bounds"]["eps_upper"].get<double>(), 2.0);
  EXPECT_EQ(r["space"]["kind"], "exhaustive");
}

TEST(CliAuditTest, StrongLexiFailsForRr) {
  const std::string path = WriteBallots("unanimous.txt", "3: a>b>c\n");
  const CliRun run = Cli({"audit", "axiom", "--id", "strong-lexi", "--mech", "rr",
                       "--lambda", "1", "--ballots", path});
  EXPECT_EQ(run.code, 2);
  const json r = Result(run);
  EXPECT_EQ(r["verdict"], "fail");
  EXPECT_EQ(r["axiom"], "strong-lexi-participation");
  EXPECT_FALSE(r["witness"].is_null());
  EXPECT_EQ(r["witness"]["profile"], "3: a > b > c\n");
}

TEST(CliAuditTest, ParetoPasses) {
  const CliRun run = Cli({"audit", "axiom", "--id", "p-pareto", "--mech", "exp",
                       "--lambda", "1", "--m", "3", "--n", "3"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(Result(run)["verdict"], "pass");
}

TEST(CliAuditTest, AlphaDefaultsToGuarantees) {
  CliRun run = Cli({"audit", "axiom", "--id", "alpha-p-condorcet", "--mech", "lap",
                 "--lambda", "1", "--m", "3", "--n", "2"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_NEAR(Result(run)["params"]["alpha"].get<double>(),
              2 * std::exp(1.0) * std::pow(1 - std::exp(-1.0) / 2, 2), 1e-9);
  run = Cli({"audit", "axiom", "--id", "alpha-sd-sp", "--mech", "rr",
             "--lambda", "1", "--m", "3", "--n", "2", "--order-convention",
             "truthful"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_NEAR(Result(run)["params"]["alpha"].get<double>(), std::exp(-4.0),
              1e-12);
  // Under the reported-order convention a voter's truthful top has an empty
  // left-hand sum, so the ratio drops to 0 and any positive level fails.
  run = Cli({"audit", "axiom", "--id", "alpha-sd-sp", "--mech", "rr",
             "--lambda", "1", "--m", "3", "--n", "2", "--order-convention",
             "def8"});
  EXPECT_EQ(run.code, 2) << run.err;
  EXPECT_EQ(Result(run)["params"]["order_convention"], "def8");
  EXPECT_EQ(Result(run)["measured"]["alpha"].get<double>(), 0.0);
}

TEST(CliAuditTest, UsageErrors) {
  EXPECT_EQ(Cli({"audit", "edp", "--mech", "rr", "--lambda", "1", "--m", "9",
                 "--n", "2"})
                .code,
            1);
  EXPECT_EQ(Cli({"audit", "axiom", "--id", "borda", "--mech", "rr", "--lambda",
                 "1", "--m", "3", "--n", "2"})
                .code,
            1);
  EXPECT_EQ(Cli({"audit", "axiom", "--id", "p-pareto", "--mech", "rr",
                 "--lambda", "1", "--m", "3"})
                .code,
            1);
  EXPECT_EQ(Cli({"audit", "edp", "--mech", "rr", "--lambda", "1", "--m", "2",
                 "--n", "1", "--format", "csv"})
                .code,
            1);
}

TEST(CliCurvesTest, GridRowsAndRatios) {
  const CliRun run = Cli({"curves", "--m", "5", "--grid", "0.1:2:0.1"});
  ASSERT_EQ(run.code, 0) << run.err;
  std::vector<std::string> lines = absl::StrSplit(run.out, '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 2u + 1u + 60u);
  EXPECT_THAT(lines[0], StartsWith("# dpcondorcet"));
  EXPECT_EQ(lines[2], "mechanism,lambda,m,eps_lower,eps_upper,alpha_pcond,alpha_sdsp");
  for (size_t i = 3; i < lines.size(); ++i) {
    std::vector<std::string> f = absl::StrSplit(lines[i], ',');
    ASSERT_EQ(f.size(), 7u);
    const double lower = std::stod(f[3]), upper = std::stod(f[4]);
    EXPECT_LT(lower, upper);
    if (f[0] == "rr") {
      EXPECT_NEAR(upper, 2 * lower, 1e-10);
    }
  }
  EXPECT_EQ(run.out, Cli({"curves", "--m", "5", "--grid", "0.1:2:0.1"}).out);
}

TEST(CliCurvesTest, BadGrids) {
  for (const char* grid : {"0:1:0.1", "1:0.5:0.1", "0.1:1:0", "a:b:c", "1:2"}) {
    EXPECT_EQ(Cli({"curves", "--m", "5", "--grid", grid}).code, 1) << grid;
  }
}

TEST(CliTest, HelpAndUnknownCommands) {
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({"--version"}).code, 0);
  EXPECT_EQ(Cli({}).code, 1);
  EXPECT_EQ(Cli({"plot"}).code, 1);
}

}  // namespace
}  // namespace dpcondorcet
