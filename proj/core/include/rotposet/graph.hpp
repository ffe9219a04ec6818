#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rotposet {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on 0..n-1 with a dense adjacency matrix.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph.
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  /// Throws IndexError on out-of-range endpoints and InvalidGraph on loops.
  /// Repeated edges are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t size() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

}  // namespace rotposet
