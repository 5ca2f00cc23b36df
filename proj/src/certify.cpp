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

#include "algconn/certify.hpp"

#include <stdexcept>

#include "algconn/bounds.hpp"
#include "algconn/metrics.hpp"

namespace algconn {
namespace {

struct PowerContext {
  EccentricityProfile ecc;
  Graph power;
};

PowerContext Prepare(const Graph& g, int ell) {
  const DistanceMatrix dist = AllPairsDistances(g);
  return {Eccentricities(dist), PowerGraph(g, dist, ell)};
}

void RequireConnected(const EccentricityProfile& ecc) {
  if (!ecc.connected()) {
    throw std::domain_error("certificate requires a connected graph");
  }
}

CertificateResult Certify(const SymMatrix& m, std::optional<double> tol) {
  return tol ? IsPsd(m, *tol) : IsPsd(m);
}

SymMatrix ScaledDifference(double scale, const Graph& g, const Graph& power) {
  return LinearCombination(scale, Laplacian(g), -1.0, Laplacian(power));
}

}  // namespace

SymMatrix G1CertificateMatrix(const Graph& g, int ell) {
  const double gamma = Gamma(g.num_nodes(), ell);
  const PowerContext ctx = Prepare(g, ell);
  RequireConnected(ctx.ecc);
  return ScaledDifference(gamma, g, ctx.power);
}

SymMatrix G2CertificateMatrix(const Graph& g, int ell) {
  if (g.num_nodes() < 2) throw std::domain_error("certificate needs n >= 2");
  if (ell < 1) throw std::domain_error("certificate needs ell >= 1");
  const PowerContext ctx = Prepare(g, ell);
  const double scale =
      1.0 + static_cast<double>(ell) *
                static_cast<double>(ctx.power.num_edges() - g.num_edges());
  return ScaledDifference(scale, g, ctx.power);
}

CertificateResult CertifyG1Matrix(const Graph& g, int ell,
                                  std::optional<double> tol) {
  return Certify(G1CertificateMatrix(g, ell), tol);
}

CertificateResult CertifyG2Matrix(const Graph& g, int ell,
                                  std::optional<double> tol) {
  return Certify(G2CertificateMatrix(g, ell), tol);
}

ChainCheck CheckChain(const Graph& g, int ell) {
  ChainCheck c;
  c.gamma_val = Gamma(g.num_nodes(), ell);
  const PowerContext ctx = Prepare(g, ell);
  RequireConnected(ctx.ecc);

  c.lambda2_g = AlgebraicConnectivity(g);
  c.lambda2_power = AlgebraicConnectivity(ctx.power);
  c.s1_power = CountDominatingNodes(ctx.power);
  c.s_ell = CountWithinEccentricity(ctx.ecc, ell);

  c.links_hold[0] = c.lambda2_g >= c.lambda2_power / c.gamma_val -
                                       SlackTolerance(c.lambda2_g);
  c.links_hold[1] =
      c.lambda2_power >= c.s1_power - SlackTolerance(c.lambda2_power);
  c.links_hold[2] = c.s1_power == c.s_ell;
  return c;
}

}  // namespace algconn
