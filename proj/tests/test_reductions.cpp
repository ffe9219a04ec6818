#include <random>

#include "doctest.h"
#include "rotposet/class_explorer.hpp"
#include "rotposet/equivalence.hpp"
#include "rotposet/errors.hpp"
#include "rotposet/random_ext.hpp"
#include "rotposet/reductions.hpp"
#include "support/oracles.hpp"

using namespace rotposet;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.size(), edges);
}

Poset shuffled(const Poset& p, std::mt19937_64& rng) {
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(p, perm);
}

}  // namespace

TEST_CASE("graph_to_poset gadgets") {
  const Poset k3 = graph_to_poset(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  REQUIRE(k3.size() == 9);
  // Pair elements 3={0,1}, 4={0,2}, 5={1,2}; pendants 6, 7, 8.
  CHECK(k3.up(0) == ElementSet{3, 4});
  CHECK(k3.up(1) == ElementSet{3, 5});
  CHECK(k3.up(2) == ElementSet{4, 5});
  CHECK(k3.up(6) == ElementSet{0, 3, 4});
  CHECK(k3.relation_count() == 15);
  // The complement of K3 without pendants would be the same crown.
  CHECK_FALSE(isomorphic(k3, graph_to_poset(Graph(3))).has_value());

  // Path 0-1-2: the non-edge pair {0,2} lies below both edge pairs.
  const Poset path = graph_to_poset(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(path.up(4) == ElementSet{0, 2, 3, 5});
  CHECK(path.up(1) == ElementSet{3, 5});
  CHECK(path.relation_count() == 15);

  const Poset empty2 = graph_to_poset(Graph(2));
  REQUIRE(empty2.size() == 5);
  CHECK(empty2.up(2) == ElementSet{0, 1});
  CHECK(empty2.relation_count() == 4);

  CHECK(graph_to_poset(Graph()).empty());
  CHECK(graph_to_poset(Graph(1)) == Poset::from_pairs(2, {{1, 0}}));
  CHECK_NOTHROW(graph_to_poset(Graph(9)));
  CHECK_THROWS_AS(graph_to_poset(Graph(10)), SizeError);
}

TEST_CASE("poset_to_graph gadgets") {
  const Graph c2 = poset_to_graph(Poset::chain(2));
  REQUIRE(c2.size() == 9);
  CHECK(c2.adjacent(0, 1));
  // Level-1 clique on 2..4 attached to 0; level-2 clique on 5..8 attached to 1.
  for (Vertex u = 2; u <= 4; ++u) {
    CHECK(c2.adjacent(0, u));
    CHECK_FALSE(c2.adjacent(1, u));
    for (Vertex v = 5; v <= 8; ++v) CHECK_FALSE(c2.adjacent(u, v));
  }
  for (Vertex u = 5; u <= 8; ++u) {
    CHECK(c2.adjacent(1, u));
    CHECK(c2.degree(u) == 4);
  }
  CHECK(c2.edge_count() == 1 + 3 + 3 + 4 + 6);

  const Graph ac2 = poset_to_graph(Poset::antichain(2));
  REQUIRE(ac2.size() == 5);
  CHECK_FALSE(ac2.adjacent(0, 1));
  CHECK(ac2.edge_count() == 3 + 2 * 3);

  const Graph c3 = poset_to_graph(Poset::chain(3));
  CHECK(c3.adjacent(0, 2));
  CHECK(c3.size() == 3 + 4 + 5 + 6);

  // Joining only adjacent levels would make these two graphs isomorphic.
  const Poset skip = Poset::from_pairs(4, {{0, 1}, {1, 2}, {3, 2}});
  const Poset loose = Poset::from_pairs(4, {{0, 1}, {1, 2}});
  CHECK(poset_to_graph(skip).adjacent(3, 2));
  CHECK_FALSE(graph_isomorphic(poset_to_graph(skip), poset_to_graph(loose)).has_value());
}

TEST_CASE("graph_isomorphic examples") {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const Graph cycle3 = Graph::from_edges(3, {{1, 2}, {2, 0}, {0, 1}});
  const Graph path3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(graph_isomorphic(k3, cycle3).has_value());
  CHECK_FALSE(graph_isomorphic(k3, path3).has_value());
  const auto id = graph_isomorphic(path3, path3);
  REQUIRE(id.has_value());
  for (const auto& [u, v] : path3.edges()) CHECK(path3.adjacent((*id)[u], (*id)[v]));
}

TEST_CASE("graph_isomorphic matches the permutation oracle on <= 5 vertices") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = oracle::all_graphs(n);
    for (const Graph& g : all)
      for (const Graph& h : all) {
        const auto f = graph_isomorphic(g, h);
        REQUIRE(f.has_value() == oracle::naive_graph_isomorphic(g, h));
        if (f) {
          for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == h.adjacent((*f)[u], (*f)[v]));
        }
      }
  }
}

TEST_CASE("graph_to_poset preserves isomorphism verdicts, exhaustive on <= 4 vertices") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto all = oracle::all_graphs(n);
    std::vector<Poset> images;
    for (const Graph& g : all) {
      images.push_back(graph_to_poset(g));
      const auto h = heights(images.back());
      CHECK(std::all_of(h.begin(), h.end(), [](std::size_t x) { return x <= 3; }));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        CHECK(isomorphic(images[i], images[j]).has_value() == oracle::naive_graph_isomorphic(all[i], all[j]));
  }
}

TEST_CASE("poset_to_graph preserves isomorphism verdicts, exhaustive on <= 4 elements") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto all = enumerate_all_posets(n);
    std::vector<Graph> images;
    for (const Poset& p : all) images.push_back(poset_to_graph(p));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        CHECK(graph_isomorphic(images[i], images[j]).has_value() == oracle::naive_isomorphic(all[i], all[j]));
  }
}

TEST_CASE("iso_to_roteq preserves isomorphism verdicts, exhaustive on <= 4 elements") {
  const auto [a, b] = iso_to_roteq(Poset::chain(2), Poset::from_pairs(2, {{1, 0}}));
  CHECK(a.size() == 4);
  CHECK(equivalent_upto_iso(a, b));
  const auto [c, d] = iso_to_roteq(Poset::chain(2), Poset::antichain(2));
  CHECK_FALSE(equivalent_upto_iso(c, d));
  CHECK_THROWS_AS(iso_to_roteq(Poset::chain(2), Poset::chain(3)), SizeMismatch);

  for (std::size_t n = 0; n <= 4; ++n) {
    const auto all = enumerate_all_posets(n);
    for (const Poset& p : all)
      for (const Poset& q : all) {
        const auto [pp, qq] = iso_to_roteq(p, q);
        CHECK(equivalent_upto_iso(pp, qq) == oracle::naive_isomorphic(p, q));
      }
  }
}

TEST_CASE("roteq_to_iso matches class search plus isomorphism, exhaustive on <= 4 elements") {
  CHECK(roteq_to_iso(Poset::chain(4), disjoint_union(Poset::chain(2), Poset::chain(2))));
  CHECK_FALSE(roteq_to_iso(Poset::chain(3), Poset::antichain(3)));
  CHECK(roteq_to_iso(Poset::chain(3), Poset::chain(3)));
  CHECK_THROWS_AS(roteq_to_iso(Poset::chain(2), Poset::chain(3)), SizeMismatch);

  for (std::size_t n = 0; n <= 4; ++n) {
    const auto all = enumerate_all_posets(n);
    for (const Poset& p : all) {
      const ClassReport report = enumerate_class(p);
      for (const Poset& q : all) {
        bool expected = false;
        for (const Poset& m : report.labeled_members) expected = expected || oracle::naive_isomorphic(m, q);
        CHECK(roteq_to_iso(p, q) == expected);
        CHECK(equivalent_upto_iso(p, q) == expected);
      }
    }
  }
}

TEST_CASE("gadget verdicts on random instances one size up") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(5, 0.5, rng);
    const Graph h = trial % 2 == 0 ? shuffled(g, rng) : random_graph(5, 0.5, rng);
    CHECK(isomorphic(graph_to_poset(g), graph_to_poset(h)).has_value() == oracle::naive_graph_isomorphic(g, h));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = random_poset(5, 0.4, 3000 + trial);
    const Poset q = trial % 2 == 0 ? shuffled(p, rng) : random_poset(5, 0.4, 4000 + trial);
    const bool expected = oracle::naive_isomorphic(p, q);
    CHECK(graph_isomorphic(poset_to_graph(p), poset_to_graph(q)).has_value() == expected);
    const auto [pp, qq] = iso_to_roteq(p, q);
    CHECK(equivalent_upto_iso(pp, qq) == expected);
  }
}
