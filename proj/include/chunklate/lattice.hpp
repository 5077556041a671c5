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

#ifndef CHUNKLATE_LATTICE_HPP
#define CHUNKLATE_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "chunklate/matcher.hpp"

namespace chunklate {

inline constexpr std::size_t kDefaultMaxPaths = 10000;

// DAG over boundary nodes 0..n. Edges keep their matrix row order; the
// out-edge list of each node preserves that order.
class Lattice {
 public:
  Lattice() = default;
  // Throws std::invalid_argument for an edge outside [0, n] or an empty span.
  Lattice(std::size_t n, std::vector<ChunkInstance> edges);

  static Lattice from_matrix(const CorrespondenceMatrix& matrix);

  std::size_t n() const { return n_; }
  std::size_t node_count() const { return n_ + 1; }
  const std::vector<ChunkInstance>& edges() const { return edges_; }
  const ChunkInstance& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<std::size_t>& out_edges(std::size_t node) const {
    return out_.at(node);
  }

 private:
  std::size_t n_ = 0;
  std::vector<ChunkInstance> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

// Edge indices into the lattice, in sentence order.
struct Path {
  std::vector<std::size_t> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

// Compared lexicographically: fewer dummies first, then fewer chunks.
struct PathCost {
  std::size_t dummies = 0;
  std::size_t chunks = 0;

  PathCost operator+(const PathCost& o) const {
    return {dummies + o.dummies, chunks + o.chunks};
  }
  friend auto operator<=>(const PathCost&, const PathCost&) = default;
};

struct PathEnumeration {
  std::vector<Path> paths;
  bool truncated = false;
};

// Contiguous, starts at node 0, ends at node n.
bool is_complete(const Lattice& lattice, const Path& path);

// Depth-first over out-edges in order. Stops after `cap` paths and sets
// `truncated` if more exist. Throws std::invalid_argument when cap is 0.
PathEnumeration enumerate_paths(const Lattice& lattice,
                                std::size_t cap = kDefaultMaxPaths);

PathCost edge_cost(const ChunkInstance& edge);
PathCost path_cost(const Lattice& lattice, const Path& path);

// Every path of minimum cost, in the order enumerate_paths would yield
// them. At most `cap` paths are returned. Throws NoPathError.
std::vector<Path> select_optimal(const Lattice& lattice,
                                 std::size_t cap = kDefaultMaxPaths);

// "Ch5 + d1 + Ch8" style description using row labels.
std::string describe(const Lattice& lattice, const Path& path);

// Graphviz rendering; dummy edges are dashed.
std::string to_dot(const Lattice& lattice);

}  // namespace chunklate

#endif  // CHUNKLATE_LATTICE_HPP
