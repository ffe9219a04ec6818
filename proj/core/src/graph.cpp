#include "rotposet/graph.hpp"

#include <string>

#include "rotposet/errors.hpp"

namespace rotposet {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw IndexError("edge " + std::to_string(u) + " -- " + std::to_string(v) + " is out of range");
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    g.adj_[u * n + v] = 1;
    g.adj_[v * n + u] = 1;
  }
  return g;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex w = 0; w < n_; ++w) d += adj_[v * n_ + w];
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (Vertex v = 0; v < n_; ++v) m += degree(v);
  return m / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace rotposet
