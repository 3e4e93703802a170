#include "graph.hpp"

#include <algorithm>

#include "errors.hpp"

namespace arbordom {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) fail(Errc::invalid_argument, "node count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) fail(Errc::invalid_argument, "self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(Errc::invalid_argument, "edge endpoint out of range: (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    fail(Errc::invalid_argument, "duplicate edge");
  }

  Graph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edges_ = std::move(edges);
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::uint64_t Graph::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xFFu;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& [u, v] : edges_) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

}  // namespace arbordom
