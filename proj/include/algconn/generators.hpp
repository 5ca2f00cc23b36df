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

#ifndef ALGCONN_GENERATORS_HPP_
#define ALGCONN_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "algconn/graph.hpp"

namespace algconn {

enum class Family { kPath, kCycle, kComplete, kStar, kErdosRenyi, kRandomTree };

// Family plus the parameters that the random families need. `p` is only read
// by kErdosRenyi and `seed` only by the two random families.
struct GeneratorSpec {
  Family family = Family::kPath;
  double p = 0.5;
  uint64_t seed = 0;
};

// Builds the n-node member of a family. Deterministic in (spec, n).
// Throws std::invalid_argument for n < 1, a cycle with n < 3, or p outside
// [0, 1].
Graph Generate(const GeneratorSpec& spec, int n);

Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
// Node 0 is the center.
Graph StarGraph(int n);
// G(n, p): each of the n(n-1)/2 pairs independently with probability p.
Graph ErdosRenyi(int n, double p, uint64_t seed);
// Uniform over the n^(n-2) labeled trees, decoded from a random Prüfer
// sequence.
Graph RandomTree(int n, uint64_t seed);

// Decodes a Prüfer sequence of length n-2 over [0, n) into a tree on n nodes.
Graph TreeFromPruefer(int n, std::span<const int> code);

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

}  // namespace algconn

#endif  // ALGCONN_GENERATORS_HPP_
