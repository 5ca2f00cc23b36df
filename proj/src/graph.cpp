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

#include "algconn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace algconn {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph::Graph(int n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  adjacency_.resize(n);
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) +
                                  ") has an index outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  int64_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += static_cast<int64_t>(nbrs.size());
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges_));
  for (int u = 0; u < num_nodes(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::Validate() const {
  const int n = num_nodes();
  int64_t degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    const auto& nbrs = adjacency_[u];
    degree_sum += static_cast<int64_t>(nbrs.size());
    for (size_t k = 0; k < nbrs.size(); ++k) {
      const int v = nbrs[k];
      if (v < 0 || v >= n) {
        return "node " + std::to_string(u) + " has out-of-range neighbor " +
               std::to_string(v);
      }
      if (v == u) return "self-loop at node " + std::to_string(u);
      if (k > 0 && nbrs[k - 1] >= v) {
        return "adjacency of node " + std::to_string(u) +
               " is not strictly increasing";
      }
      if (!has_edge(v, u)) {
        return "edge " + std::to_string(u) + "-" + std::to_string(v) +
               " is missing its reverse";
      }
    }
  }
  if (degree_sum != 2 * num_edges_) {
    return "edge count " + std::to_string(num_edges_) +
           " disagrees with degree sum " + std::to_string(degree_sum);
  }
  return {};
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ToInt(std::string_view token, long long& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph ParseEdgeList(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = Tokens(line);
    if (n < 0) {
      long long count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !ToInt(tokens[1], count)) {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      if (count < 1 || count > (1LL << 30)) {
        throw ParseError(line_no, "node count must be positive");
      }
      n = static_cast<int>(count);
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !ToInt(tokens[0], u) || !ToInt(tokens[1], v)) {
      throw ParseError(line_no, "expected edge '<u> <v>'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "node index out of range [0, " +
                                    std::to_string(n) + ")");
    }
    if (u == v) {
      throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n <count>'");
  return Graph::FromEdges(n, edges);
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << "n " << g.num_nodes() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string ToEdgeListString(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(out, g);
  return out.str();
}

Graph Complement(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (int v = u + 1; v < n; ++v) {
      it = std::lower_bound(it, nbrs.end(), v);
      if (it == nbrs.end() || *it != v) edges.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace algconn
