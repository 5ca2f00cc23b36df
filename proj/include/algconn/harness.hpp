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

#ifndef ALGCONN_HARNESS_HPP_
#define ALGCONN_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algconn/bounds.hpp"
#include "algconn/generators.hpp"
#include "algconn/graph.hpp"

namespace algconn::harness {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Reals in reports: 12 significant digits, %g style.
std::string FormatReal(double x);

// --- Reports ---------------------------------------------------------------

// n, m, ell, s1, s2, s_ell, diameter, e_power, e_complement, lambda2, the
// seven bound values, then slack_<bound> in the same order.
std::vector<std::string> ReportColumns();
std::string ReportCsvHeader();
// Not-applicable fields are left empty.
std::string ReportCsvRow(const BoundReport& r);
// Same fields as the CSV plus "tight": [bound names]. Not-applicable fields
// are null.
std::string ReportJson(const BoundReport& r, int indent = 2);

// --- ell policy ------------------------------------------------------------

// Either one fixed ell, or every ell in 2..max(2, d).
struct EllPolicy {
  std::optional<int> fixed;

  static EllPolicy All() { return {}; }
  static EllPolicy Fixed(int ell) { return {ell}; }
};

// Accepts "all" or an integer >= 2.
std::optional<EllPolicy> ParseEllPolicy(std::string_view text);

// For a disconnected graph under the "all" policy this is {2}.
std::vector<int> EllValues(const EllPolicy& policy, Distance diameter);

// --- Verification campaigns ------------------------------------------------

struct CampaignConfig {
  GeneratorSpec generator{Family::kErdosRenyi, 0.3, 0};
  int n = 12;
  int trials = 1;
  uint64_t seed = 0;
  EllPolicy ell;
  // Soundness and tightness threshold is bound_tolerance * max(1, lambda2).
  double bound_tolerance = 1e-9;
  // Absolute PSD tolerance; default is DefaultPsdTolerance per matrix.
  std::optional<double> psd_tolerance;
  int threads = 1;
};

// Throws std::invalid_argument describing the first bad field.
void ValidateConfig(const CampaignConfig& config);

struct BoundStats {
  int64_t evaluated = 0;
  int64_t tight = 0;
  int64_t violations = 0;
  double min_slack = 0.0;
  double sum_slack = 0.0;

  double mean_slack() const {
    return evaluated > 0 ? sum_slack / static_cast<double>(evaluated) : 0.0;
  }
};

struct WorstInstance {
  std::string graph;  // edge-list text
  int trial = -1;
  int ell = 0;
  double lambda2 = 0.0;
  double bound = 0.0;
  double relative_slack = 0.0;  // slack / max(1, lambda2)
};

struct CampaignSummary {
  int trials = 0;
  int connected = 0;
  int64_t instances = 0;  // (graph, ell) pairs evaluated
  int64_t disconnected_instances = 0;
  int64_t certificates = 0;
  int64_t violations = 0;
  std::vector<std::string> violation_details;  // first kMaxDetails only
  // Over connected instances only.
  std::array<BoundStats, kAllBounds.size()> stats{};
  // Smallest relative slack seen for the g1 and g2 bounds.
  std::optional<WorstInstance> worst_g1;
  std::optional<WorstInstance> worst_g2;

  static constexpr size_t kMaxDetails = 20;
};

// Per-trial graph seeds are drawn in order from SplitMix64(config.seed).
// The result is identical for any thread count.
CampaignSummary RunCampaign(const CampaignConfig& config);

std::string SummaryJson(const CampaignConfig& config,
                        const CampaignSummary& summary);

// --- Tightness -------------------------------------------------------------

struct TightnessRecord {
  Family family = Family::kPath;
  int n = 0;
  int ell = 0;
  BoundKind bound = BoundKind::kS1;
  double ratio = 0.0;  // bound / lambda2
  Graph graph;
};

// Every applicable bound for every family member with 2 <= n <= n_max
// (3 <= n for cycles) and every ell in the policy, sorted by ratio
// descending. Only path, cycle, star and complete are accepted.
std::vector<TightnessRecord> Tightness(Family family, int n_max,
                                       const EllPolicy& policy);

// --- Subcommands -----------------------------------------------------------

int CmdAnalyze(const std::string& path, int ell, std::string_view format,
               std::ostream& out, std::ostream& err);
int CmdVerify(const CampaignConfig& config, std::ostream& out,
              std::ostream& err);
int CmdTightness(Family family, int n_max, const EllPolicy& policy,
                 std::ostream& out, std::ostream& err);
// Writes G^ell to `out_path`, or to `out` when no path is given.
int CmdPower(const std::string& path, int ell,
             const std::optional<std::string>& out_path, std::ostream& out,
             std::ostream& err);

}  // namespace algconn::harness

#endif  // ALGCONN_HARNESS_HPP_
