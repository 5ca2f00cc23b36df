// Copyright 2026 The algconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "algconn/harness.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "algconn/metrics.hpp"
#include "json.hpp"

namespace algconn::harness {
namespace {

using ::testing::HasSubstr;
namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("algconn_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

TEST(FormatRealTest, TwelveSignificantDigits) {
  EXPECT_EQ(FormatReal(2.0 - std::sqrt(2.0)), "0.585786437627");
  EXPECT_EQ(FormatReal(0.5), "0.5");
  EXPECT_EQ(FormatReal(-0.0), "0");
  EXPECT_EQ(FormatReal(85.0), "85");
}

TEST(ReportTest, ColumnOrder) {
  EXPECT_EQ(ReportCsvHeader(),
            "n,m,ell,s1,s2,s_ell,diameter,e_power,e_complement,lambda2,"
            "bound_s1,bound_s2_over_n,bound_g1,bound_g1_diam,bound_mohar,"
            "bound_g2,bound_lu,slack_s1,slack_s2_over_n,slack_g1,"
            "slack_g1_diam,slack_mohar,slack_g2,slack_lu");
}

TEST(ReportTest, NotApplicableIsEmptyOrNull) {
  const BoundReport r = EvaluateAll(ParseEdgeList("n 4\n0 1\n2 3\n"), 2);
  const auto cols = ReportColumns();
  const auto fields = SplitCsv(ReportCsvRow(r));
  ASSERT_EQ(fields.size(), cols.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    const bool blank = cols[i] == "diameter" || cols[i].ends_with("g1_diam") ||
                       cols[i].ends_with("mohar") || cols[i].ends_with("_lu");
    EXPECT_EQ(fields[i].empty(), blank) << cols[i];
  }
  const auto j = nlohmann::json::parse(ReportJson(r));
  EXPECT_TRUE(j["diameter"].is_null());
  EXPECT_TRUE(j["bound_lu"].is_null());
  EXPECT_EQ(j["bound_g1"], 0.0);
}

TEST(CmdAnalyzeTest, PathCsv) {
  TempDir dir;
  const std::string file = dir.Write("p4.txt", "n 4\n0 1\n1 2\n2 3\n");
  std::ostringstream out, err;
  ASSERT_EQ(CmdAnalyze(file, 3, "csv", out, err), kExitOk) << err.str();
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  const auto cols = SplitCsv(header);
  const auto fields = SplitCsv(row);
  ASSERT_EQ(cols.size(), fields.size());
  auto field = [&](const std::string& name) {
    return fields[std::find(cols.begin(), cols.end(), name) - cols.begin()];
  };
  EXPECT_EQ(field("lambda2"), "0.585786437627");
  EXPECT_EQ(field("bound_g1"), "0.5");
  EXPECT_EQ(field("diameter"), "3");
}

TEST(CmdAnalyzeTest, CompleteJsonListsS1AsTight) {
  TempDir dir;
  const std::string file =
      dir.Write("k4.txt", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  std::ostringstream out, err;
  ASSERT_EQ(CmdAnalyze(file, 2, "json", out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["lambda2"], 4.0);
  EXPECT_THAT(j["tight"].get<std::vector<std::string>>(), ::testing::Contains("s1"));
  EXPECT_EQ(j["tight"][0], "s1");
}

TEST(CmdAnalyzeTest, Errors) {
  TempDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(CmdAnalyze(dir.Write("bad.txt", "n 3\n0 x\n"), 2, "csv", out, err),
            kExitUsage);
  EXPECT_THAT(err.str(), HasSubstr("line 2"));
  EXPECT_EQ(CmdAnalyze(dir.Write("one.txt", "n 1\n"), 2, "csv", out, err),
            kExitUsage);
  EXPECT_EQ(CmdAnalyze(dir.Path("missing.txt"), 2, "csv", out, err), kExitUsage);
  const std::string ok = dir.Write("p3.txt", "n 3\n0 1\n1 2\n");
  EXPECT_EQ(CmdAnalyze(ok, 2, "xml", out, err), kExitUsage);
  EXPECT_EQ(CmdAnalyze(ok, 1, "csv", out, err), kExitUsage);
}

TEST(EllPolicyTest, ParseAndExpand) {
  EXPECT_FALSE(ParseEllPolicy("all")->fixed.has_value());
  EXPECT_EQ(ParseEllPolicy("3")->fixed, 3);
  EXPECT_FALSE(ParseEllPolicy("1").has_value());
  EXPECT_FALSE(ParseEllPolicy("x").has_value());
  EXPECT_EQ(EllValues(EllPolicy::All(), 4), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(EllValues(EllPolicy::All(), 1), (std::vector<int>{2}));
  EXPECT_EQ(EllValues(EllPolicy::All(), kUnreachable), (std::vector<int>{2}));
  EXPECT_EQ(EllValues(EllPolicy::Fixed(7), 3), (std::vector<int>{7}));
}

TEST(CampaignTest, ErdosRenyiHasNoViolations) {
  CampaignConfig config;
  config.generator = {Family::kErdosRenyi, 0.3, 0};
  config.n = 12;
  config.trials = 1000;
  config.seed = 42;
  const CampaignSummary s = RunCampaign(config);
  EXPECT_EQ(s.violations, 0) << (s.violation_details.empty()
                                     ? ""
                                     : s.violation_details.front());
  EXPECT_EQ(s.trials, 1000);
  EXPECT_GT(s.connected, 0);
  EXPECT_LT(s.connected, 1000);  // p = 0.3 at n = 12 leaves some disconnected
  EXPECT_GT(s.certificates, 0);
  ASSERT_TRUE(s.worst_g1.has_value());
  EXPECT_GE(s.worst_g1->relative_slack, -1e-9);
  EXPECT_NO_THROW(ParseEdgeList(s.worst_g1->graph));
}

TEST(CampaignTest, RandomTreesHaveNoViolations) {
  CampaignConfig config;
  config.generator = {Family::kRandomTree};
  config.n = 10;
  config.trials = 500;
  config.seed = 7;
  const CampaignSummary s = RunCampaign(config);
  EXPECT_EQ(s.violations, 0);
  EXPECT_EQ(s.connected, 500);
}

TEST(CampaignTest, ThreadCountDoesNotChangeReport) {
  CampaignConfig config;
  config.n = 9;
  config.trials = 40;
  config.seed = 5;
  const std::string serial = SummaryJson(config, RunCampaign(config));
  config.threads = 4;
  const std::string parallel = SummaryJson(config, RunCampaign(config));
  // The thread count is not part of the report.
  EXPECT_EQ(serial, parallel);
}

TEST(CampaignTest, InvalidConfigsAreRejected) {
  CampaignConfig config;
  config.trials = 0;
  EXPECT_THROW(RunCampaign(config), std::invalid_argument);
  std::ostringstream out, err;
  EXPECT_EQ(CmdVerify(config, out, err), kExitUsage);
  config.trials = 1;
  config.n = 1;
  EXPECT_EQ(CmdVerify(config, out, err), kExitUsage);
  config.n = 5;
  config.generator.p = 2.0;
  EXPECT_EQ(CmdVerify(config, out, err), kExitUsage);
}

TEST(CmdVerifyTest, DeterministicOutput) {
  CampaignConfig config;
  config.n = 10;
  config.trials = 30;
  config.seed = 11;
  std::ostringstream a, b, err;
  EXPECT_EQ(CmdVerify(config, a, err), kExitOk);
  EXPECT_EQ(CmdVerify(config, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  const auto j = nlohmann::json::parse(a.str());
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["config"]["seed"], 11);
}

TEST(TightnessTest, CompleteAndStarAreTightForS1) {
  for (Family f : {Family::kComplete, Family::kStar}) {
    const auto records = Tightness(f, 8, EllPolicy::All());
    for (int n = 3; n <= 8; ++n) {
      bool found = false;
      for (const TightnessRecord& t : records) {
        if (t.n == n && t.bound == BoundKind::kS1) {
          EXPECT_NEAR(t.ratio, 1.0, 1e-9);
          found = true;
        }
      }
      EXPECT_TRUE(found) << FamilyName(f) << " n=" << n;
    }
  }
}

TEST(TightnessTest, PathOnThreeIsTightForG2) {
  const auto records = Tightness(Family::kPath, 6, EllPolicy::All());
  bool found = false;
  for (const TightnessRecord& t : records) {
    EXPECT_LE(t.ratio, 1.0 + 1e-9);
    if (t.n == 3 && t.ell == 2 && t.bound == BoundKind::kG2) {
      EXPECT_NEAR(t.ratio, 1.0, 1e-9);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  for (size_t i = 1; i < records.size(); ++i) {
    EXPECT_GE(records[i - 1].ratio, records[i].ratio);
  }
}

TEST(TightnessTest, RejectsBadArguments) {
  EXPECT_THROW(Tightness(Family::kErdosRenyi, 8, {}), std::invalid_argument);
  EXPECT_THROW(Tightness(Family::kPath, 2, {}), std::invalid_argument);
  std::ostringstream out, err;
  EXPECT_EQ(CmdTightness(Family::kPath, 2, {}, out, err), kExitUsage);
  EXPECT_EQ(CmdTightness(Family::kCycle, 6, {}, out, err), kExitOk);
  EXPECT_THAT(out.str(), HasSubstr("family,n,ell,bound,ratio\n"));
}

TEST(CmdPowerTest, WritesAndRoundTrips) {
  TempDir dir;
  const std::string in = dir.Write("p4.txt", "n 4\n0 1\n1 2\n2 3\n");
  std::ostringstream out, err;

  ASSERT_EQ(CmdPower(in, 2, dir.Path("sq.txt"), out, err), kExitOk);
  EXPECT_THAT(out.str(), HasSubstr("wrote 5 edges"));
  std::ifstream sq(dir.Path("sq.txt"));
  const Graph p4 = PathGraph(4);
  EXPECT_EQ(ParseEdgeList(sq), PowerGraph(p4, AllPairsDistances(p4), 2));

  std::ostringstream same;
  ASSERT_EQ(CmdPower(in, 1, std::nullopt, same, err), kExitOk);
  EXPECT_EQ(ParseEdgeList(same.str()), p4);

  std::ostringstream full;
  ASSERT_EQ(CmdPower(in, 9, std::nullopt, full, err), kExitOk);
  EXPECT_EQ(ParseEdgeList(full.str()), CompleteGraph(4));

  EXPECT_EQ(CmdPower(dir.Write("bad.txt", "n 2\n0 0\n"), 2, std::nullopt, out, err),
            kExitUsage);
  EXPECT_EQ(CmdPower(in, 0, std::nullopt, out, err), kExitUsage);
}

}  // namespace
}  // namespace algconn::harness
