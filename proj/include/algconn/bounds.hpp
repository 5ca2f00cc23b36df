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

#ifndef ALGCONN_BOUNDS_HPP_
#define ALGCONN_BOUNDS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "algconn/graph.hpp"
#include "algconn/metrics.hpp"

namespace algconn {

// Lower bounds on the algebraic connectivity lambda_2, all in one place.
//
// Notation: n nodes, m edges, s_ell nodes of eccentricity <= ell, d the
// diameter, e(G^ell) edges of the ell-th power, e(~G) edges of the
// complement.

// (ell - 2 + 4/n) n^2 / 4, the factor for which gamma L(G) - L(G^ell) is
// PSD on connected graphs. Equals n at ell = 2. Throws std::domain_error for
// n < 2 or ell < 2.
double Gamma(int n, int ell);

// lambda_2 >= s_1 (number of nodes adjacent to every other node).
double BoundS1(int s1);

// lambda_2 >= s_2 / n.
double BoundS2OverN(int n, int s2);

// lambda_2 >= 4 s_ell / ((ell - 2 + 4/n) n^2) = s_ell / Gamma(n, ell).
// Accepts ell >= 2; at ell = 2 it coincides with BoundS2OverN.
double BoundG1(int n, int ell, int s_ell);

// The ell = d case of BoundG1, where s_d = n: 4 / ((d - 2 + 4/n) n).
// d = 1 only occurs for K_n, where s_1 = n and the bound is BoundS1(n).
// Throws std::domain_error when d is unreachable (disconnected graph),
// d < 1, or n < 2.
double BoundG1Diameter(int n, Distance d);

// Mohar: lambda_2 >= 4 / (d n).
double BoundMohar(int n, Distance d);

// lambda_2 >= s_ell / (1 + ell (e(G^ell) - m)). Throws std::invalid_argument
// when e_power < m, m < 0 or ell < 1.
double BoundG2(int s_ell, int ell, int64_t e_power, int64_t m);

// Lu: lambda_2 >= n / (1 + d e(~G)).
double BoundLu(int n, Distance d, int64_t e_complement);

enum class BoundKind { kS1, kS2OverN, kG1, kG1Diameter, kMohar, kG2, kLu };

inline constexpr std::array<BoundKind, 7> kAllBounds = {
    BoundKind::kS1,         BoundKind::kS2OverN, BoundKind::kG1,
    BoundKind::kG1Diameter, BoundKind::kMohar,   BoundKind::kG2,
    BoundKind::kLu};

// "s1", "s2_over_n", "g1", "g1_diam", "mohar", "g2", "lu".
std::string_view BoundName(BoundKind kind);

// 1e-9 * max(1, lambda2). Used both for soundness checks and tightness.
double SlackTolerance(double lambda2);

struct BoundEntry {
  // nullopt when the bound does not apply (diameter-based bounds on a
  // disconnected graph).
  std::optional<double> value;
  std::optional<double> slack;  // lambda2 - value

  bool applicable() const { return value.has_value(); }
  bool tight(double lambda2) const {
    return slack && *slack <= SlackTolerance(lambda2);
  }
  bool violated(double lambda2) const {
    return slack && *slack < -SlackTolerance(lambda2);
  }
};

struct BoundReport {
  int n = 0;
  int64_t m = 0;
  int ell = 0;
  int s1 = 0;
  int s2 = 0;
  int s_ell = 0;
  Distance diameter;
  int64_t e_power = 0;
  int64_t e_complement = 0;
  double lambda2 = 0.0;
  std::array<BoundEntry, kAllBounds.size()> bounds;

  const BoundEntry& operator[](BoundKind kind) const {
    return bounds[static_cast<size_t>(kind)];
  }
  BoundEntry& operator[](BoundKind kind) {
    return bounds[static_cast<size_t>(kind)];
  }
};

// Computes every quantity and every bound for one graph and one ell.
// Throws std::domain_error for n < 2 or ell < 2.
BoundReport EvaluateAll(const Graph& g, int ell);

}  // namespace algconn

#endif  // ALGCONN_BOUNDS_HPP_
