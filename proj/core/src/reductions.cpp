#include "rotposet/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "rotposet/equivalence.hpp"
#include "rotposet/errors.hpp"
#include "rotposet/rotation.hpp"

namespace rotposet {

bool roteq_to_iso(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different sizes");
  if (p.empty()) return true;
  const Poset anchored = rotate_to_unique_max(p, 0);
  for (Element top = 0; top < q.size(); ++top) {
    if (isomorphic(anchored, rotate_to_unique_max(q, top))) return true;
  }
  return false;
}

std::pair<Poset, Poset> iso_to_roteq(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different sizes");
  const Poset padding = Poset::antichain(p.size());
  return {disjoint_union(p, padding), disjoint_union(q, padding)};
}

Poset graph_to_poset(const Graph& g) {
  const std::size_t n = g.size();
  const std::size_t pairs_end = n + n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t total = pairs_end + n;
  if (total > Poset::kMaxElements) {
    throw SizeError("graph on " + std::to_string(n) + " vertices gives a poset with " + std::to_string(total) +
                    " elements");
  }
  // A vertex with both an edge and a non-edge sits between two pair
  // elements, so the incidence relation needs closing. Without the pendants
  // complementary graphs such as K3 and its complement give isomorphic
  // posets; a pendant is the only minimal element with a single cover.
  std::vector<Relation> rel;
  Element pair = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++pair) {
      if (g.adjacent(u, v)) {
        rel.emplace_back(u, pair);
        rel.emplace_back(v, pair);
      } else {
        rel.emplace_back(pair, u);
        rel.emplace_back(pair, v);
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) rel.emplace_back(pairs_end + u, u);
  return Poset::from_pairs(total, rel);
}

Graph poset_to_graph(const Poset& p) {
  const std::size_t n = p.size();
  const auto level = heights(p);
  const std::size_t levels = n == 0 ? 0 : *std::max_element(level.begin(), level.end());

  // Every comparable pair is joined. Restricting to adjacent levels would
  // lose x < z when z gets its height from a chain avoiding x. Heights fix
  // the direction of each joined pair.
  std::vector<Edge> edges;
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up(x)) edges.emplace_back(x, y);
  }
  Vertex next = n;
  for (std::size_t i = 1; i <= levels; ++i) {
    const Vertex first = next;
    next += n + i;
    for (Vertex u = first; u < next; ++u) {
      for (Vertex v = u + 1; v < next; ++v) edges.emplace_back(u, v);
      for (Element x = 0; x < n; ++x) {
        if (level[x] == i) edges.emplace_back(x, u);
      }
    }
  }
  return Graph::from_edges(next, edges);
}

namespace {

// Colour refinement over the disjoint union of g and h; vertex v of h has
// index g.size() + v.
std::vector<std::size_t> refine_graph_colors(const Graph& g, const Graph& h) {
  const std::size_t total = g.size() + h.size();
  const auto adjacent = [&](std::size_t u, std::size_t v) {
    if (u < g.size()) return v < g.size() && g.adjacent(u, v);
    return v >= g.size() && h.adjacent(u - g.size(), v - g.size());
  };
  std::vector<std::size_t> color(total, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(total);
    for (std::size_t u = 0; u < total; ++u) {
      sig[u].first = color[u];
      const std::size_t lo = u < g.size() ? 0 : g.size();
      const std::size_t hi = u < g.size() ? g.size() : total;
      for (std::size_t v = lo; v < hi; ++v) {
        if (v != u && adjacent(u, v)) sig[u].second.push_back(color[v]);
      }
      std::sort(sig[u].second.begin(), sig[u].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t u = 0; u < total; ++u) {
      color[u] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[u]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return color;
}

bool graph_twins(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w = 0; w < g.size(); ++w) {
    if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

class GraphIsoSearch {
 public:
  GraphIsoSearch(const Graph& g, const Graph& h, std::vector<std::size_t> color)
      : g_(g), h_(h), color_(std::move(color)), map_(g.size()), used_(h.size(), false) {
    // Small cells first; within a cell prefer vertices attached to the part
    // already ordered so that adjacency checks prune early.
    std::vector<std::size_t> cell_size(color_.size() + 1, 0);
    for (Vertex v = 0; v < g.size(); ++v) ++cell_size[color_[v]];
    std::vector<bool> taken(g.size(), false);
    for (std::size_t k = 0; k < g.size(); ++k) {
      Vertex pick = g.size();
      std::tuple<std::size_t, std::size_t, std::size_t> best{};
      for (Vertex v = 0; v < g.size(); ++v) {
        if (taken[v]) continue;
        std::size_t links = 0;
        for (Vertex u : order_) links += g.adjacent(u, v) ? 1 : 0;
        const std::tuple<std::size_t, std::size_t, std::size_t> key{links == 0 ? 1 : 0, cell_size[color_[v]],
                                                                   color_[v]};
        if (pick == g.size() || key < best) {
          pick = v;
          best = key;
        }
      }
      taken[pick] = true;
      order_.push_back(pick);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t depth, Vertex x, Vertex y) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex u = order_[k];
      if (g_.adjacent(u, x) != h_.adjacent(map_[u], y)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    std::vector<Vertex> failed;
    for (Vertex y = 0; y < h_.size(); ++y) {
      if (used_[y] || color_[g_.size() + y] != color_[x]) continue;
      if (std::any_of(failed.begin(), failed.end(), [&](Vertex f) { return graph_twins(h_, f, y); })) continue;
      if (consistent(depth, x, y)) {
        map_[x] = y;
        used_[y] = true;
        if (search(depth + 1)) return true;
        used_[y] = false;
      }
      failed.push_back(y);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> color_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto color = refine_graph_colors(g, h);
  std::vector<std::size_t> hist_g(color.size() + 1, 0), hist_h(color.size() + 1, 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    ++hist_g[color[v]];
    ++hist_h[color[g.size() + v]];
  }
  if (hist_g != hist_h) return std::nullopt;
  return GraphIsoSearch(g, h, color).run();
}

}  // namespace rotposet
