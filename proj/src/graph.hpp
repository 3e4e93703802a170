#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arbordom {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected simple graph over dense node IDs 0..n-1. Immutable after
// construction; adjacency lists are sorted, so neighbor-port numbering is
// stable everywhere in the simulator.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity and ID range; edges may arrive in any order or
  // orientation. Throws Errc::invalid_argument on violations.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int u) const { return adjacency_[u]; }
  int degree(int u) const { return static_cast<int>(adjacency_[u].size()); }
  int max_degree() const;

  bool has_edge(int u, int v) const;

  // Edges in canonical order: (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // FNV-1a over the canonical edge list; used as the oracle cache key.
  std::uint64_t content_hash() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Canonical unordered edge: (min, max).
inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace arbordom
