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

#ifndef ALGCONN_CERTIFY_HPP_
#define ALGCONN_CERTIFY_HPP_

#include <array>
#include <optional>

#include "algconn/graph.hpp"
#include "algconn/spectral.hpp"

namespace algconn {

// Numerical PSD certificates for the two matrix inequalities behind the
// eccentricity bounds:
//
//   gamma(n, ell) L(G) - L(G^ell)            >= 0   (G connected, ell >= 2)
//   (1 + ell (e(G^ell) - m)) L(G) - L(G^ell) >= 0   (ell >= 1)
//
// When `tol` is omitted the tolerance is DefaultPsdTolerance of the matrix
// being certified. The tolerance actually used is always recorded in the
// result.

SymMatrix G1CertificateMatrix(const Graph& g, int ell);
SymMatrix G2CertificateMatrix(const Graph& g, int ell);

// Throws std::domain_error if g is disconnected, n < 2 or ell < 2.
CertificateResult CertifyG1Matrix(const Graph& g, int ell,
                                  std::optional<double> tol = std::nullopt);

// Throws std::domain_error if n < 2 or ell < 1.
CertificateResult CertifyG2Matrix(const Graph& g, int ell,
                                  std::optional<double> tol = std::nullopt);

// The chain lambda2(G) >= lambda2(G^ell) / gamma >= s1(G^ell) / gamma
// = s_ell / gamma, link by link.
struct ChainCheck {
  double lambda2_g = 0.0;
  double lambda2_power = 0.0;
  double gamma_val = 0.0;
  int s1_power = 0;
  int s_ell = 0;
  // [0]: lambda2_g >= lambda2_power / gamma_val - tol
  // [1]: lambda2_power >= s1_power - tol
  // [2]: s1_power == s_ell
  std::array<bool, 3> links_hold = {false, false, false};

  bool holds() const { return links_hold[0] && links_hold[1] && links_hold[2]; }
  double bound() const { return s_ell / gamma_val; }
};

// Throws std::domain_error if g is disconnected, n < 2 or ell < 2. Each
// inequality link uses SlackTolerance of its left-hand side.
ChainCheck CheckChain(const Graph& g, int ell);

}  // namespace algconn

#endif  // ALGCONN_CERTIFY_HPP_
