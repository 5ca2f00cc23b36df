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

#ifndef ALGCONN_GRAPH_HPP_
#define ALGCONN_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algconn {

// Undirected edge {u, v}. Graph::edges() always reports u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised by the edge-list reader. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);

  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph on nodes 0..n-1 with sorted adjacency lists.
// Immutable once built.
class Graph {
 public:
  // Empty graph on one node.
  Graph() : Graph(1) {}

  // Edgeless graph on n >= 1 nodes.
  explicit Graph(int n);

  // Builds from an edge list. Duplicates (in either orientation) collapse.
  // Throws std::invalid_argument on a self-loop or an out-of-range index.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int64_t num_edges() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;

  // All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Checks simplicity, symmetry and the edge count. Returns an empty string
  // when the graph is well formed, otherwise a description of the first
  // violation found.
  std::string Validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  int64_t num_edges_ = 0;
};

// Edge-list text format:
//
//   # comment
//   n <count>
//   <u> <v>
//   ...
//
// Indices are 0-based. Blank lines and lines starting with '#' are skipped.
Graph ParseEdgeList(std::istream& in);
Graph ParseEdgeList(std::string_view text);

// Writes `g` in the format read by ParseEdgeList, edges sorted.
void WriteEdgeList(std::ostream& out, const Graph& g);
std::string ToEdgeListString(const Graph& g);

// Graph with edge {i, j} exactly where `g` has none.
Graph Complement(const Graph& g);

}  // namespace algconn

#endif  // ALGCONN_GRAPH_HPP_
