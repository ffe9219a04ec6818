#pragma once

#include <istream>
#include <string>

#include "rotposet/graph.hpp"
#include "rotposet/poset.hpp"

namespace rotposet {

// Poset files:
//   poset <n>
//   <x> < <y>        (any generating relation; closed on read)
// Graph files:
//   graph <n>
//   <u> -- <v>
// Blank lines and anything after '#' are ignored. Writers emit the full
// strict relation (or edge list) in lexicographic order.

Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace rotposet
