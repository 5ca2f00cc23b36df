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

#include "algconn/generators.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "algconn/random.hpp"

namespace algconn {
namespace {

void RequireNodes(int n, int minimum, std::string_view family) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(family) + " needs n >= " +
                                std::to_string(minimum) + ", got " +
                                std::to_string(n));
  }
}

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames = {{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kStar, "star"},
    {Family::kErdosRenyi, "erdos_renyi"},
    {Family::kRandomTree, "random_tree"},
}};

}  // namespace

Graph PathGraph(int n) {
  RequireNodes(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::FromEdges(n, edges);
}

Graph CycleGraph(int n) {
  RequireNodes(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::FromEdges(n, edges);
}

Graph CompleteGraph(int n) {
  RequireNodes(n, 1, "complete");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(int n) {
  RequireNodes(n, 1, "star");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph::FromEdges(n, edges);
}

Graph ErdosRenyi(int n, double p, uint64_t seed) {
  RequireNodes(n, 1, "erdos_renyi");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("erdos_renyi needs 0 <= p <= 1");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.NextDouble() < p) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph TreeFromPruefer(int n, std::span<const int> code) {
  RequireNodes(n, 1, "tree");
  if (n == 1) return Graph(1);
  if (code.size() != static_cast<size_t>(n - 2)) {
    throw std::invalid_argument("Prüfer code must have length n - 2");
  }
  std::vector<int> degree(n, 1);
  for (int v : code) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("Prüfer code entry out of range");
    }
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : code) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph::FromEdges(n, edges);
}

Graph RandomTree(int n, uint64_t seed) {
  RequireNodes(n, 1, "random_tree");
  if (n <= 2) return PathGraph(n);
  SplitMix64 rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng.NextBelow(n));
  return TreeFromPruefer(n, code);
}

Graph Generate(const GeneratorSpec& spec, int n) {
  switch (spec.family) {
    case Family::kPath:
      return PathGraph(n);
    case Family::kCycle:
      return CycleGraph(n);
    case Family::kComplete:
      return CompleteGraph(n);
    case Family::kStar:
      return StarGraph(n);
    case Family::kErdosRenyi:
      return ErdosRenyi(n, spec.p, spec.seed);
    case Family::kRandomTree:
      return RandomTree(n, spec.seed);
  }
  throw std::invalid_argument("unknown graph family");
}

std::string_view FamilyName(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (const auto& [f, family_name] : kFamilyNames) {
    if (family_name == name) return f;
  }
  return std::nullopt;
}

}  // namespace algconn
