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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "algconn/certify.hpp"
#include "algconn/metrics.hpp"
#include "algconn/random.hpp"
#include "algconn/spectral.hpp"
#include "json.hpp"

namespace algconn::harness {
namespace {

using Json = nlohmann::ordered_json;

Json RealOrNull(const std::optional<double>& x) {
  if (!x) return nullptr;
  return std::stod(FormatReal(*x));
}

Json Real(double x) { return std::stod(FormatReal(x)); }

std::string CsvField(const std::optional<double>& x) {
  return x ? FormatReal(*x) : std::string();
}

std::optional<Graph> ReadGraph(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return ParseEdgeList(in);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

}  // namespace

std::string FormatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  // Keep "-0" out of reports.
  if (std::string_view(buf) == "-0") return "0";
  return buf;
}

std::vector<std::string> ReportColumns() {
  std::vector<std::string> cols = {"n",       "m",        "ell",
                                   "s1",      "s2",       "s_ell",
                                   "diameter", "e_power", "e_complement",
                                   "lambda2"};
  for (BoundKind k : kAllBounds) cols.push_back("bound_" + std::string(BoundName(k)));
  for (BoundKind k : kAllBounds) cols.push_back("slack_" + std::string(BoundName(k)));
  return cols;
}

std::string ReportCsvHeader() {
  std::string line;
  for (const std::string& c : ReportColumns()) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line;
}

std::string ReportCsvRow(const BoundReport& r) {
  std::ostringstream row;
  row << r.n << ',' << r.m << ',' << r.ell << ',' << r.s1 << ',' << r.s2
      << ',' << r.s_ell << ',';
  if (r.diameter) row << *r.diameter;
  row << ',' << r.e_power << ',' << r.e_complement << ','
      << FormatReal(r.lambda2);
  for (const BoundEntry& b : r.bounds) row << ',' << CsvField(b.value);
  for (const BoundEntry& b : r.bounds) row << ',' << CsvField(b.slack);
  return row.str();
}

std::string ReportJson(const BoundReport& r, int indent) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["ell"] = r.ell;
  j["s1"] = r.s1;
  j["s2"] = r.s2;
  j["s_ell"] = r.s_ell;
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
  j["e_power"] = r.e_power;
  j["e_complement"] = r.e_complement;
  j["lambda2"] = Real(r.lambda2);
  for (BoundKind k : kAllBounds) {
    j["bound_" + std::string(BoundName(k))] = RealOrNull(r[k].value);
  }
  for (BoundKind k : kAllBounds) {
    j["slack_" + std::string(BoundName(k))] = RealOrNull(r[k].slack);
  }
  Json tight = Json::array();
  for (BoundKind k : kAllBounds) {
    if (r[k].tight(r.lambda2)) tight.push_back(BoundName(k));
  }
  j["tight"] = std::move(tight);
  return j.dump(indent);
}

std::optional<EllPolicy> ParseEllPolicy(std::string_view text) {
  if (text == "all") return EllPolicy::All();
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 2) return std::nullopt;
  return EllPolicy::Fixed(value);
}

std::vector<int> EllValues(const EllPolicy& policy, Distance diameter) {
  if (policy.fixed) return {*policy.fixed};
  const int top = diameter ? std::max(2, *diameter) : 2;
  std::vector<int> out;
  for (int ell = 2; ell <= top; ++ell) out.push_back(ell);
  return out;
}

void ValidateConfig(const CampaignConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (config.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (config.generator.family == Family::kCycle && config.n < 3) {
    throw std::invalid_argument("cycle needs --n >= 3");
  }
  if (!(config.generator.p >= 0.0 && config.generator.p <= 1.0)) {
    throw std::invalid_argument("--p must lie in [0, 1]");
  }
  if (config.ell.fixed && *config.ell.fixed < 2) {
    throw std::invalid_argument("--ell must be >= 2 or 'all'");
  }
  if (!(config.bound_tolerance >= 0.0)) {
    throw std::invalid_argument("bound tolerance must be >= 0");
  }
  if (config.psd_tolerance && !(*config.psd_tolerance >= 0.0)) {
    throw std::invalid_argument("PSD tolerance must be >= 0");
  }
  if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

namespace {

struct TrialOutcome {
  Graph graph;
  bool connected = false;
  int64_t certificates = 0;
  std::vector<BoundReport> reports;
  std::vector<std::string> violations;
};

TrialOutcome RunTrial(const CampaignConfig& config, int trial, uint64_t seed) {
  TrialOutcome out;
  GeneratorSpec spec = config.generator;
  spec.seed = seed;
  auto fail = [&](int ell, const std::string& what) {
    out.violations.push_back("trial " + std::to_string(trial) + " ell " +
                             std::to_string(ell) + ": " + what);
  };
  try {
    out.graph = Generate(spec, config.n);
    const EccentricityProfile ecc =
        Eccentricities(AllPairsDistances(out.graph));
    out.connected = ecc.connected();
    for (int ell : EllValues(config.ell, ecc.diameter)) {
      BoundReport r = EvaluateAll(out.graph, ell);
      const double tol = config.bound_tolerance * std::max(1.0, r.lambda2);
      for (BoundKind k : kAllBounds) {
        const BoundEntry& b = r[k];
        if (b.slack && *b.slack < -tol) {
          fail(ell, "bound " + std::string(BoundName(k)) + " = " +
                        FormatReal(*b.value) + " exceeds lambda2 = " +
                        FormatReal(r.lambda2));
        }
      }
      if (!out.connected) {
        if (r.s_ell != 0 || *r[BoundKind::kG1].value != 0.0 ||
            *r[BoundKind::kG2].value != 0.0) {
          fail(ell, "disconnected graph with nonzero s_ell bound");
        }
        if (std::abs(r.lambda2) > tol) {
          fail(ell, "disconnected graph with lambda2 = " +
                        FormatReal(r.lambda2));
        }
        out.reports.push_back(std::move(r));
        continue;
      }
      const CertificateResult c1 =
          CertifyG1Matrix(out.graph, ell, config.psd_tolerance);
      const CertificateResult c2 =
          CertifyG2Matrix(out.graph, ell, config.psd_tolerance);
      out.certificates += 2;
      if (!c1.psd()) {
        fail(ell, "g1 certificate NOT_PSD, min eigenvalue " +
                      FormatReal(c1.min_eigenvalue));
      }
      if (!c2.psd()) {
        fail(ell, "g2 certificate NOT_PSD, min eigenvalue " +
                      FormatReal(c2.min_eigenvalue));
      }
      const ChainCheck chain = CheckChain(out.graph, ell);
      for (size_t i = 0; i < chain.links_hold.size(); ++i) {
        if (!chain.links_hold[i]) {
          fail(ell, "chain link " + std::to_string(i + 1) + " fails");
        }
      }
      const double g1 = *r[BoundKind::kG1].value;
      if (std::abs(chain.bound() - g1) > 1e-12 * std::max(1e-300, g1)) {
        fail(ell, "chain bound disagrees with g1 bound");
      }
      out.reports.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    fail(-1, std::string("exception: ") + e.what());
  }
  return out;
}

void UpdateWorst(std::optional<WorstInstance>& worst, const TrialOutcome& t,
                 int trial, const BoundReport& r, BoundKind kind) {
  const BoundEntry& b = r[kind];
  if (!b.slack) return;
  const double rel = *b.slack / std::max(1.0, r.lambda2);
  if (worst && !(rel < worst->relative_slack)) return;
  worst = WorstInstance{ToEdgeListString(t.graph), trial, r.ell, r.lambda2,
                        *b.value, rel};
}

Json WorstJson(const std::optional<WorstInstance>& w) {
  if (!w) return nullptr;
  Json j;
  j["trial"] = w->trial;
  j["ell"] = w->ell;
  j["lambda2"] = Real(w->lambda2);
  j["bound"] = Real(w->bound);
  j["relative_slack"] = Real(w->relative_slack);
  j["graph"] = w->graph;
  return j;
}

}  // namespace

CampaignSummary RunCampaign(const CampaignConfig& config) {
  ValidateConfig(config);
  SplitMix64 master(config.seed);
  std::vector<uint64_t> seeds(config.trials);
  for (uint64_t& s : seeds) s = master.Next();

  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.trials; i = next++) {
      outcomes[i] = RunTrial(config, i, seeds[i]);
    }
  };
  const int threads = std::min(config.threads, config.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Aggregate in trial order so floating-point sums do not depend on the
  // schedule.
  CampaignSummary s;
  s.trials = config.trials;
  for (int i = 0; i < config.trials; ++i) {
    const TrialOutcome& t = outcomes[i];
    s.connected += t.connected ? 1 : 0;
    s.certificates += t.certificates;
    s.violations += static_cast<int64_t>(t.violations.size());
    for (const std::string& v : t.violations) {
      if (s.violation_details.size() < CampaignSummary::kMaxDetails) {
        s.violation_details.push_back(v);
      }
    }
    for (const BoundReport& r : t.reports) {
      ++s.instances;
      // Every bound is trivially 0 = lambda2 on a disconnected graph; keep
      // those out of the tightness statistics.
      if (!t.connected) {
        ++s.disconnected_instances;
        continue;
      }
      const double tol = config.bound_tolerance * std::max(1.0, r.lambda2);
      for (BoundKind k : kAllBounds) {
        const BoundEntry& b = r[k];
        if (!b.slack) continue;
        BoundStats& st = s.stats[static_cast<size_t>(k)];
        st.min_slack =
            st.evaluated == 0 ? *b.slack : std::min(st.min_slack, *b.slack);
        ++st.evaluated;
        st.sum_slack += *b.slack;
        st.tight += *b.slack <= tol ? 1 : 0;
        st.violations += *b.slack < -tol ? 1 : 0;
      }
      UpdateWorst(s.worst_g1, t, i, r, BoundKind::kG1);
      UpdateWorst(s.worst_g2, t, i, r, BoundKind::kG2);
    }
  }
  return s;
}

std::string SummaryJson(const CampaignConfig& config,
                        const CampaignSummary& summary) {
  Json cfg;
  cfg["family"] = FamilyName(config.generator.family);
  cfg["n"] = config.n;
  if (config.generator.family == Family::kErdosRenyi) {
    cfg["p"] = Real(config.generator.p);
  }
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["ell"] = config.ell.fixed ? Json(*config.ell.fixed) : Json("all");
  cfg["bound_tolerance"] = Real(config.bound_tolerance);
  cfg["psd_tolerance"] = config.psd_tolerance
                             ? Real(*config.psd_tolerance)
                             : Json("1e-8*max(1,|M|_inf)");

  Json stats;
  for (BoundKind k : kAllBounds) {
    const BoundStats& st = summary.stats[static_cast<size_t>(k)];
    Json b;
    b["evaluated"] = st.evaluated;
    b["tight"] = st.tight;
    b["violations"] = st.violations;
    b["min_slack"] = st.evaluated ? Real(st.min_slack) : Json(nullptr);
    b["mean_slack"] = st.evaluated ? Real(st.mean_slack()) : Json(nullptr);
    stats[std::string(BoundName(k))] = std::move(b);
  }

  Json j;
  j["config"] = std::move(cfg);
  j["trials"] = summary.trials;
  j["connected"] = summary.connected;
  j["instances"] = summary.instances;
  j["disconnected_instances"] = summary.disconnected_instances;
  j["certificates"] = summary.certificates;
  j["violations"] = summary.violations;
  j["violation_details"] = summary.violation_details;
  j["bounds"] = std::move(stats);
  j["worst_g1"] = WorstJson(summary.worst_g1);
  j["worst_g2"] = WorstJson(summary.worst_g2);
  return j.dump(2);
}

std::vector<TightnessRecord> Tightness(Family family, int n_max,
                                       const EllPolicy& policy) {
  if (family != Family::kPath && family != Family::kCycle &&
      family != Family::kStar && family != Family::kComplete) {
    throw std::invalid_argument(
        "tightness families are path, cycle, star and complete");
  }
  if (n_max < 3) throw std::invalid_argument("--n-max must be >= 3");
  std::vector<TightnessRecord> records;
  const int n_min = family == Family::kCycle ? 3 : 2;
  for (int n = n_min; n <= n_max; ++n) {
    const Graph g = Generate({family}, n);
    const Distance diameter =
        Eccentricities(AllPairsDistances(g)).diameter;
    for (int ell : EllValues(policy, diameter)) {
      const BoundReport r = EvaluateAll(g, ell);
      for (BoundKind k : kAllBounds) {
        if (!r[k].value) continue;
        records.push_back({family, n, ell, k, *r[k].value / r.lambda2, g});
      }
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const TightnessRecord& a, const TightnessRecord& b) {
                     return a.ratio > b.ratio;
                   });
  return records;
}

int CmdAnalyze(const std::string& path, int ell, std::string_view format,
               std::ostream& out, std::ostream& err) {
  if (format != "csv" && format != "json") {
    err << "error: --format must be csv or json\n";
    return kExitUsage;
  }
  if (ell < 2) {
    err << "error: --ell must be >= 2\n";
    return kExitUsage;
  }
  const std::optional<Graph> g = ReadGraph(path, err);
  if (!g) return kExitUsage;
  if (g->num_nodes() < 2) {
    err << "error: algebraic connectivity undefined for n < 2\n";
    return kExitUsage;
  }
  const BoundReport r = EvaluateAll(*g, ell);
  if (format == "csv") {
    out << ReportCsvHeader() << '\n' << ReportCsvRow(r) << '\n';
  } else {
    out << ReportJson(r) << '\n';
  }
  for (BoundKind k : kAllBounds) {
    if (r[k].violated(r.lambda2)) return kExitViolation;
  }
  return kExitOk;
}

int CmdVerify(const CampaignConfig& config, std::ostream& out,
              std::ostream& err) {
  try {
    ValidateConfig(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const CampaignSummary summary = RunCampaign(config);
  out << SummaryJson(config, summary) << '\n';
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int CmdTightness(Family family, int n_max, const EllPolicy& policy,
                 std::ostream& out, std::ostream& err) {
  std::vector<TightnessRecord> records;
  try {
    records = Tightness(family, n_max, policy);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  int status = kExitOk;
  out << "family,n,ell,bound,ratio\n";
  for (const TightnessRecord& t : records) {
    out << FamilyName(t.family) << ',' << t.n << ',' << t.ell << ','
        << BoundName(t.bound) << ',' << FormatReal(t.ratio) << '\n';
    if (t.ratio > 1.0 + 1e-9) status = kExitViolation;
  }
  return status;
}

int CmdPower(const std::string& path, int ell,
             const std::optional<std::string>& out_path, std::ostream& out,
             std::ostream& err) {
  if (ell < 1) {
    err << "error: --ell must be >= 1\n";
    return kExitUsage;
  }
  const std::optional<Graph> g = ReadGraph(path, err);
  if (!g) return kExitUsage;
  const Graph power = PowerGraph(*g, AllPairsDistances(*g), ell);
  if (!out_path) {
    WriteEdgeList(out, power);
    return kExitOk;
  }
  std::ofstream file(*out_path);
  if (!file) {
    err << "error: cannot write '" << *out_path << "'\n";
    return kExitUsage;
  }
  WriteEdgeList(file, power);
  file.close();
  if (!file) {
    err << "error: write to '" << *out_path << "' failed\n";
    return kExitUsage;
  }
  out << "wrote " << power.num_edges() << " edges to " << *out_path << '\n';
  return kExitOk;
}

}  // namespace algconn::harness
