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

#include "algconn/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "algconn/spectral.hpp"

namespace algconn {
namespace {

int RequireDiameter(Distance d) {
  if (!d) {
    throw std::domain_error("diameter undefined for disconnected graph");
  }
  if (*d < 1) throw std::domain_error("diameter must be at least 1");
  return *d;
}

void RequireNodes(int n) {
  if (n < 2) throw std::domain_error("bounds need n >= 2");
}

}  // namespace

double Gamma(int n, int ell) {
  RequireNodes(n);
  if (ell < 2) throw std::domain_error("gamma needs ell >= 2");
  // ((ell - 2) n^2 + 4 n) / 4 keeps every intermediate an exact integer, so
  // Gamma(n, 2) is exactly n.
  const double nn = static_cast<double>(n);
  return (static_cast<double>(ell - 2) * nn * nn + 4.0 * nn) / 4.0;
}

double BoundS1(int s1) {
  if (s1 < 0) throw std::invalid_argument("s1 must be >= 0");
  return static_cast<double>(s1);
}

double BoundS2OverN(int n, int s2) {
  RequireNodes(n);
  return static_cast<double>(s2) / static_cast<double>(n);
}

double BoundG1(int n, int ell, int s_ell) {
  if (s_ell < 0 || s_ell > n) {
    throw std::invalid_argument("s_ell must lie in [0, n]");
  }
  return static_cast<double>(s_ell) / Gamma(n, ell);
}

double BoundG1Diameter(int n, Distance d) {
  RequireNodes(n);
  const int diameter = RequireDiameter(d);
  if (diameter == 1) return BoundS1(n);
  return BoundG1(n, diameter, n);
}

double BoundMohar(int n, Distance d) {
  RequireNodes(n);
  const int diameter = RequireDiameter(d);
  return 4.0 / (static_cast<double>(diameter) * static_cast<double>(n));
}

double BoundG2(int s_ell, int ell, int64_t e_power, int64_t m) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  if (m < 0 || e_power < m) {
    throw std::invalid_argument("need e(G^ell) >= m >= 0");
  }
  const double denom =
      1.0 + static_cast<double>(ell) * static_cast<double>(e_power - m);
  return static_cast<double>(s_ell) / denom;
}

double BoundLu(int n, Distance d, int64_t e_complement) {
  RequireNodes(n);
  const int diameter = RequireDiameter(d);
  if (e_complement < 0) throw std::invalid_argument("e(~G) must be >= 0");
  return static_cast<double>(n) /
         (1.0 + static_cast<double>(diameter) *
                    static_cast<double>(e_complement));
}

std::string_view BoundName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kS1:
      return "s1";
    case BoundKind::kS2OverN:
      return "s2_over_n";
    case BoundKind::kG1:
      return "g1";
    case BoundKind::kG1Diameter:
      return "g1_diam";
    case BoundKind::kMohar:
      return "mohar";
    case BoundKind::kG2:
      return "g2";
    case BoundKind::kLu:
      return "lu";
  }
  return "unknown";
}

double SlackTolerance(double lambda2) {
  return 1e-9 * std::max(1.0, lambda2);
}

BoundReport EvaluateAll(const Graph& g, int ell) {
  const int n = g.num_nodes();
  if (n < 2) throw std::domain_error("bound report needs n >= 2");
  if (ell < 2) throw std::domain_error("bound report needs ell >= 2");

  const DistanceMatrix dist = AllPairsDistances(g);
  const EccentricityProfile ecc = Eccentricities(dist);
  const Graph power = PowerGraph(g, dist, ell);

  BoundReport r;
  r.n = n;
  r.m = g.num_edges();
  r.ell = ell;
  r.s1 = CountWithinEccentricity(ecc, 1);
  r.s2 = CountWithinEccentricity(ecc, 2);
  r.s_ell = CountWithinEccentricity(ecc, ell);
  r.diameter = ecc.diameter;
  r.e_power = power.num_edges();
  r.e_complement =
      static_cast<int64_t>(n) * (n - 1) / 2 - g.num_edges();
  r.lambda2 = AlgebraicConnectivity(g);

  r[BoundKind::kS1].value = BoundS1(r.s1);
  r[BoundKind::kS2OverN].value = BoundS2OverN(n, r.s2);
  r[BoundKind::kG1].value = BoundG1(n, ell, r.s_ell);
  r[BoundKind::kG2].value = BoundG2(r.s_ell, ell, r.e_power, r.m);
  if (ecc.connected()) {
    r[BoundKind::kG1Diameter].value = BoundG1Diameter(n, r.diameter);
    r[BoundKind::kMohar].value = BoundMohar(n, r.diameter);
    r[BoundKind::kLu].value = BoundLu(n, r.diameter, r.e_complement);
  }
  for (BoundEntry& entry : r.bounds) {
    if (entry.value) entry.slack = r.lambda2 - *entry.value;
  }
  return r;
}

}  // namespace algconn
