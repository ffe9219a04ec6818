#pragma once

// Brute-force reference implementations used only by the tests. Nothing in
// here calls the library algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rotposet/graph.hpp"
#include "rotposet/poset.hpp"
#include "rotposet/rotation.hpp"

namespace oracle {

using rotposet::Element;
using rotposet::ElementSet;
using rotposet::Graph;
using rotposet::Poset;

/// Dense boolean strict-order matrix.
using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size(), false));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) m[x][y] = p.less(x, y);
  return m;
}

inline bool is_strict_order(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (m[x][x]) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (m[x][y] && m[y][x]) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (m[x][y] && m[y][z] && !m[x][z]) return false;
    }
  }
  return true;
}

/// Every strict order on n labels, by filtering all 2^(n(n-1)) relations.
inline std::vector<Matrix> all_strict_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::vector<Matrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1U) m[slots[i].first][slots[i].second] = true;
    if (is_strict_order(m)) out.push_back(std::move(m));
  }
  return out;
}

inline Poset from_matrix(const Matrix& m) {
  std::vector<ElementSet> up(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      if (m[x][y]) up[x].insert(y);
  return Poset::from_up_sets(std::move(up));
}

/// Isomorphism by trying every permutation.
inline bool naive_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x)
      for (Element y = 0; y < p.size() && ok; ++y) ok = p.less(x, y) == q.less(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool naive_graph_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) return false;
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.size() && ok; ++u)
      for (std::size_t v = 0; v < g.size() && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All labeled simple graphs on n vertices.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<rotposet::Edge> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<rotposet::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1U) edges.push_back(slots[i]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

/// The rotation conditions checked straight from the matrix.
inline bool spec_conditions_hold(const Poset& p, ElementSet lower, ElementSet upper) {
  const auto m = to_matrix(p);
  const std::size_t n = p.size();
  if (lower.intersects(upper)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (m[y][x] && lower.contains(x) && !lower.contains(y)) return false;
      if (m[x][y] && upper.contains(x) && !upper.contains(y)) return false;
      if (lower.contains(x) && upper.contains(y) && !m[x][y]) return false;
    }
  return true;
}

/// Every valid (lower, upper) pair on p.
inline std::vector<rotposet::RotationSpec> all_valid_specs(const Poset& p) {
  std::vector<rotposet::RotationSpec> out;
  const std::uint64_t subsets = std::uint64_t{1} << p.size();
  for (std::uint64_t a = 0; a < subsets; ++a)
    for (std::uint64_t c = 0; c < subsets; ++c)
      if (spec_conditions_hold(p, ElementSet(a), ElementSet(c))) out.push_back({ElementSet(a), ElementSet(c)});
  return out;
}

/// Random valid spec: close a random subset downward, then close a random
/// subset of the elements above all of it upward.
template <typename Rng>
rotposet::RotationSpec random_valid_spec(const Poset& p, Rng& rng) {
  std::bernoulli_distribution coin(0.3);
  ElementSet seed_low;
  for (Element x = 0; x < p.size(); ++x)
    if (coin(rng)) seed_low.insert(x);
  ElementSet lower = seed_low;
  for (Element x : seed_low) lower |= p.down(x);
  ElementSet candidates = p.domain() - lower;
  for (Element x : lower) candidates &= p.up(x);
  ElementSet upper;
  for (Element x : candidates)
    if (coin(rng)) upper |= p.up(x) | ElementSet::singleton(x);
  return {lower, upper};
}

/// Rotation written out pair by pair from the four-case definition.
inline Poset rotate_by_cases(const Poset& p, ElementSet lower, ElementSet upper) {
  const auto m = to_matrix(p);
  const std::size_t n = p.size();
  const auto block = [&](std::size_t x) { return lower.contains(x) ? 0 : (upper.contains(x) ? 2 : 1); };
  Matrix r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool inc = !m[x][y] && !m[y][x];
      const int bx = block(x), by = block(y);
      if (bx == by) r[x][y] = m[x][y];
      else if (bx == 1 && by == 0) r[x][y] = inc;
      else if (bx == 2 && by == 0) r[x][y] = true;
      else if (bx == 2 && by == 1) r[x][y] = inc;
    }
  return from_matrix(r);
}

}  // namespace oracle
