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

// algconn: eccentricity lower bounds on algebraic connectivity.
//
//   algconn analyze   <graph> --ell L [--format csv|json]
//   algconn verify    --family F --n N [--p P] --trials T --seed S [--ell L|all]
//   algconn tightness --family F --n-max N [--ell L|all]
//   algconn power     <graph> --ell L [--out FILE]
//
// Exit codes: 0 success, 1 verification violation, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "algconn/generators.hpp"
#include "algconn/harness.hpp"

namespace {

using algconn::Family;
namespace harness = algconn::harness;

std::optional<Family> FamilyOrReport(const std::string& name) {
  auto family = algconn::ParseFamily(name);
  if (!family) std::cerr << "error: unknown family '" << name << "'\n";
  return family;
}

std::optional<harness::EllPolicy> EllOrReport(const std::string& text) {
  auto policy = harness::ParseEllPolicy(text);
  if (!policy) std::cerr << "error: --ell must be an integer >= 2 or 'all'\n";
  return policy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentricity-based lower bounds on algebraic connectivity"};
  app.require_subcommand(1);

  std::string graph_path;
  int ell = 2;
  std::string format = "csv";
  auto* analyze = app.add_subcommand("analyze", "Report every bound for one graph");
  analyze->add_option("graph", graph_path, "Edge-list file")->required();
  analyze->add_option("--ell", ell, "Eccentricity threshold (>= 2)")->required();
  analyze->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string family_name = "erdos_renyi";
  std::string ell_text = "all";
  harness::CampaignConfig config;
  auto* verify = app.add_subcommand(
      "verify", "Randomized soundness and certificate campaign");
  verify->add_option("--family", family_name, "Generator family");
  verify->add_option("--n", config.n, "Nodes per graph");
  verify->add_option("--p", config.generator.p, "Edge probability (erdos_renyi)");
  verify->add_option("--trials", config.trials, "Number of graphs");
  verify->add_option("--seed", config.seed, "Campaign seed");
  verify->add_option("--ell", ell_text, "Integer >= 2 or 'all'");
  verify->add_option("--threads", config.threads, "Worker threads");
  verify->add_option("--psd-tol", config.psd_tolerance,
                     "Absolute PSD tolerance override");
  verify->add_option("--bound-tol", config.bound_tolerance,
                     "Relative soundness tolerance");

  std::string tight_family = "path";
  int n_max = 8;
  auto* tightness = app.add_subcommand(
      "tightness", "Bound / lambda2 ratios over a deterministic family");
  tightness->add_option("--family", tight_family, "path, cycle, star or complete");
  tightness->add_option("--n-max", n_max, "Largest member (>= 3)");
  tightness->add_option("--ell", ell_text, "Integer >= 2 or 'all'");

  int power_ell = 1;
  std::optional<std::string> out_path;
  auto* power = app.add_subcommand("power", "Write the ell-th power graph");
  power->add_option("graph", graph_path, "Edge-list file")->required();
  power->add_option("--ell", power_ell, "Distance threshold (>= 1)")->required();
  power->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return harness::kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return harness::CmdAnalyze(graph_path, ell, format, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      auto family = FamilyOrReport(family_name);
      auto policy = EllOrReport(ell_text);
      if (!family || !policy) return harness::kExitUsage;
      config.generator.family = *family;
      config.ell = *policy;
      return harness::CmdVerify(config, std::cout, std::cerr);
    }
    if (tightness->parsed()) {
      auto family = FamilyOrReport(tight_family);
      auto policy = EllOrReport(ell_text);
      if (!family || !policy) return harness::kExitUsage;
      return harness::CmdTightness(*family, n_max, *policy, std::cout,
                                   std::cerr);
    }
    if (power->parsed()) {
      return harness::CmdPower(graph_path, power_ell, out_path, std::cout,
                               std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return harness::kExitUsage;
  }
  return harness::kExitUsage;
}
