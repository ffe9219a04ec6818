#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rotposet/graph.hpp"
#include "rotposet/poset.hpp"

namespace rotposet {

/// Decides "p is rotation-equivalent to a copy of q" with isomorphism calls
/// only: compare the single-maximum representative of p at element 0 with
/// every single-maximum representative of q. Throws SizeMismatch.
bool roteq_to_iso(const Poset& p, const Poset& q);

/// Pads both posets with a disjoint antichain of n fresh elements. The
/// padded posets are equivalent up to isomorphism iff p and q are isomorphic.
/// Throws SizeMismatch.
std::pair<Poset, Poset> iso_to_roteq(const Poset& p, const Poset& q);

/// Poset on the 1- and 2-element vertex subsets: singletons are labels
/// 0..n-1, then pairs {u,v} (u < v) in lexicographic order. A pair sits above
/// both its singletons when uv is an edge and below them otherwise. Last come
/// n pendants, pendant u sitting just below singleton u. The relation is
/// transitively closed. Throws SizeError past 64 elements (10 or more vertices).
Poset graph_to_poset(const Graph& g);

/// Graph encoding of a poset. Levels are heights (minimal elements are level
/// 1). Vertices are the poset elements first, then for each level i a clique
/// of n + i gadget vertices joined to every element of level i. Two elements
/// are adjacent iff they are comparable.
Graph poset_to_graph(const Poset& p);

/// Returns f with uv an edge of g iff f[u]f[v] an edge of h, or nullopt.
std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& g, const Graph& h);

}  // namespace rotposet
