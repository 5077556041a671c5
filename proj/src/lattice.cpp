// Copyright 2026 The Chunklate Authors
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

#include "chunklate/lattice.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "chunklate/error.hpp"

namespace chunklate {

Lattice::Lattice(std::size_t n, std::vector<ChunkInstance> edges)
    : n_(n), edges_(std::move(edges)), out_(n + 1) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Span& s = edges_[i].span;
    if (s.start >= s.end || s.end > n_) {
      throw std::invalid_argument("edge " + edges_[i].label() +
                                  " outside lattice of " +
                                  std::to_string(n_) + " words");
    }
    out_[s.start].push_back(i);
  }
}

Lattice Lattice::from_matrix(const CorrespondenceMatrix& matrix) {
  return Lattice(matrix.n, matrix.rows);
}

bool is_complete(const Lattice& lattice, const Path& path) {
  std::size_t node = 0;
  for (std::size_t e : path.edges) {
    if (e >= lattice.edges().size()) return false;
    const Span& s = lattice.edge(e).span;
    if (s.start != node) return false;
    node = s.end;
  }
  return node == lattice.n();
}

namespace {

template <class Follow>
void depth_first(const Lattice& lattice, std::size_t cap, Follow&& follow,
                 std::vector<Path>& out, bool& truncated) {
  Path current;
  // Explicit recursion through a lambda; depth is bounded by n.
  auto visit = [&](auto&& self, std::size_t node) -> bool {
    if (node == lattice.n()) {
      if (out.size() == cap) {
        truncated = true;
        return false;
      }
      out.push_back(current);
      return true;
    }
    for (std::size_t e : lattice.out_edges(node)) {
      if (!follow(node, e)) continue;
      current.edges.push_back(e);
      const bool keep_going = self(self, lattice.edge(e).span.end);
      current.edges.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  visit(visit, 0);
}

}  // namespace

PathEnumeration enumerate_paths(const Lattice& lattice, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("path cap must be at least 1");
  PathEnumeration result;
  depth_first(
      lattice, cap, [](std::size_t, std::size_t) { return true; },
      result.paths, result.truncated);
  return result;
}

PathCost edge_cost(const ChunkInstance& edge) {
  return edge.is_dummy() ? PathCost{1, 0} : PathCost{0, 1};
}

PathCost path_cost(const Lattice& lattice, const Path& path) {
  PathCost cost;
  for (std::size_t e : path.edges) cost = cost + edge_cost(lattice.edge(e));
  return cost;
}

std::vector<Path> select_optimal(const Lattice& lattice, std::size_t cap) {
  const std::size_t n = lattice.n();
  // Cheapest cost from each node to the final node.
  std::vector<std::optional<PathCost>> to_go(n + 1);
  to_go[n] = PathCost{};
  for (std::size_t node = n; node-- > 0;) {
    for (std::size_t e : lattice.out_edges(node)) {
      const auto& rest = to_go[lattice.edge(e).span.end];
      if (!rest) continue;
      const PathCost via = edge_cost(lattice.edge(e)) + *rest;
      if (!to_go[node] || via < *to_go[node]) to_go[node] = via;
    }
  }
  if (!to_go[0]) {
    throw NoPathError("no complete path through the lattice");
  }

  std::vector<Path> out;
  bool truncated = false;
  depth_first(
      lattice, cap,
      [&](std::size_t node, std::size_t e) {
        const auto& rest = to_go[lattice.edge(e).span.end];
        return rest && edge_cost(lattice.edge(e)) + *rest == *to_go[node];
      },
      out, truncated);
  return out;
}

std::string describe(const Lattice& lattice, const Path& path) {
  std::string out;
  for (std::size_t e : path.edges) {
    if (!out.empty()) out += " + ";
    const ChunkInstance& c = lattice.edge(e);
    out += c.is_dummy() ? c.label() : "chunk" + c.label();
  }
  return out;
}

std::string to_dot(const Lattice& lattice) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=LR;\n";
  for (std::size_t node = 0; node < lattice.node_count(); ++node) {
    os << "  " << node << ";\n";
  }
  for (const ChunkInstance& e : lattice.edges()) {
    os << "  " << e.span.start << " -> " << e.span.end << " [label=\""
       << (e.is_dummy() ? e.label() : "Ch" + e.label()) << "\"";
    if (e.is_dummy()) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace chunklate
