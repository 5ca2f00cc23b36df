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

#include "algconn/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace algconn {
namespace {

void BreadthFirst(const Graph& g, int source, std::vector<int>& queue,
                  DistanceMatrix& out) {
  const int n = g.num_nodes();
  std::vector<int> level(n, -1);
  level[source] = 0;
  queue.clear();
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (level[v] >= 0) out.set(source, v, level[v]);
  }
}

}  // namespace

DistanceMatrix AllPairsDistances(const Graph& g, int threads) {
  const int n = g.num_nodes();
  DistanceMatrix out(n);
  // Each source writes only its own row, so workers never share a cell.
  std::atomic<int> next{0};
  auto worker = [&] {
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = next++; s < n; s = next++) BreadthFirst(g, s, queue, out);
  };
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

EccentricityProfile Eccentricities(const DistanceMatrix& d) {
  const int n = d.size();
  EccentricityProfile profile;
  profile.ecc.assign(n, kUnreachable);
  bool connected = true;
  for (int i = 0; i < n && connected; ++i) {
    int worst = 0;
    for (int j = 0; j < n; ++j) {
      const Distance dij = d.at(i, j);
      if (!dij) {
        connected = false;
        break;
      }
      worst = std::max(worst, *dij);
    }
    profile.ecc[i] = worst;
  }
  if (!connected) {
    profile.ecc.assign(n, kUnreachable);
    profile.diameter = kUnreachable;
    return profile;
  }
  int diameter = 0;
  for (const Distance& e : profile.ecc) diameter = std::max(diameter, *e);
  profile.diameter = diameter;
  return profile;
}

int CountWithinEccentricity(const EccentricityProfile& profile, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  return static_cast<int>(
      std::count_if(profile.ecc.begin(), profile.ecc.end(),
                    [ell](const Distance& e) { return e && *e <= ell; }));
}

Graph PowerGraph(const Graph& g, const DistanceMatrix& d, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  const int n = g.num_nodes();
  if (d.size() != n) {
    throw std::invalid_argument("distance matrix does not match the graph");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Distance dij = d.at(i, j);
      if (dij && *dij >= 1 && *dij <= ell) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

int CountDominatingNodes(const Graph& g) {
  const int n = g.num_nodes();
  int count = 0;
  for (int v = 0; v < n; ++v) count += g.degree(v) == n - 1 ? 1 : 0;
  return count;
}

}  // namespace algconn
