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

#ifndef ALGCONN_METRICS_HPP_
#define ALGCONN_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

// A hop count, or std::nullopt when no path exists. Unreachable values are
// never encoded as a large integer.
using Distance = std::optional<int>;
inline constexpr std::nullopt_t kUnreachable = std::nullopt;

// Dense n x n table of unweighted shortest-path lengths.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), dist_(static_cast<size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  Distance at(int i, int j) const { return dist_[Index(i, j)]; }
  void set(int i, int j, Distance d) { dist_[Index(i, j)] = d; }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<Distance> dist_;
};

struct EccentricityProfile {
  std::vector<Distance> ecc;
  // Max eccentricity; unreachable for a disconnected graph.
  Distance diameter;

  bool connected() const { return diameter.has_value(); }
};

// One breadth-first search per source. `threads` > 1 splits the sources
// across worker threads; the result does not depend on the split.
DistanceMatrix AllPairsDistances(const Graph& g, int threads = 1);

EccentricityProfile Eccentricities(const DistanceMatrix& d);

// Number of nodes with finite eccentricity at most `ell`. Zero for a
// disconnected graph. Throws std::invalid_argument for ell < 1.
int CountWithinEccentricity(const EccentricityProfile& profile, int ell);

// G^ell: {i, j} is an edge iff 1 <= dist(i, j) <= ell. `d` must be the
// distance matrix of `g`. Throws std::invalid_argument for ell < 1 or a size
// mismatch.
Graph PowerGraph(const Graph& g, const DistanceMatrix& d, int ell);

// Number of nodes of degree n - 1.
int CountDominatingNodes(const Graph& g);

}  // namespace algconn

#endif  // ALGCONN_METRICS_HPP_
