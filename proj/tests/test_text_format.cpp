#include <random>

#include "doctest.h"
#include "rotposet/errors.hpp"
#include "rotposet/random_ext.hpp"
#include "rotposet/text_format.hpp"

using namespace rotposet;

TEST_CASE("poset text is closed and sorted on output") {
  const Poset p = parse_poset("# a chain\nposet 3\n\n1 < 2   # tail comment\n0 < 1\n");
  CHECK(p == Poset::chain(3));
  CHECK(format_poset(p) == "poset 3\n0 < 1\n0 < 2\n1 < 2\n");
  CHECK(format_poset(Poset()) == "poset 0\n");
  CHECK(parse_poset("poset 2\n0 < 1\n0 < 1\n") == Poset::chain(2));
}

TEST_CASE("poset parse errors name the line") {
  CHECK_THROWS_AS(parse_poset(""), ParseError);
  CHECK_THROWS_AS(parse_poset("graph 3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset -1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset 3\n0 -- 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset 3\n0 < x\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset 3\n0 < 1 < 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset 2\n0 < 1\n1 < 0\n"), CycleError);
  try {
    parse_poset("poset 3\n\n# note\n0 < 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("graph text") {
  const Graph g = parse_graph("graph 3\n1 -- 0\n2 -- 1\n");
  CHECK(g == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(format_graph(g) == "graph 3\n0 -- 1\n1 -- 2\n");
  CHECK_THROWS_AS(parse_graph("graph 2\n0 -- 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\n0 -- 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\n0 < 1\n"), ParseError);
}

TEST_CASE("round trips") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Poset p = random_poset(1 + seed % 30, 0.3, seed);
    const std::string text = format_poset(p);
    CHECK(parse_poset(text) == p);
    CHECK(format_poset(parse_poset(text)) == text);
  }
  std::mt19937_64 rng(4);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = u + 1; v < 12; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g = Graph::from_edges(12, edges);
    CHECK(parse_graph(format_graph(g)) == g);
  }
}
