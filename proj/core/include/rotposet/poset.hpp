#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rotposet/element_set.hpp"

namespace rotposet {

using Relation = std::pair<Element, Element>;

/// A finite strict partial order on the labels 0..n-1.
///
/// Stored as one up-set word per element: `up(x)` is {y | x < y}. Values are
/// immutable once built; every factory checks the order axioms, so a Poset
/// in hand is always irreflexive, antisymmetric and transitive.
class Poset {
 public:
  static constexpr std::size_t kMaxElements = ElementSet::kCapacity;

  /// The empty poset.
  Poset() = default;

  static Poset antichain(std::size_t n);
  /// 0 < 1 < ... < n-1
  static Poset chain(std::size_t n);

  /// Transitive closure of the given strict relations.
  /// Throws IndexError on labels outside 0..n-1 and CycleError when the
  /// relation contains a directed cycle (including x < x).
  static Poset from_pairs(std::size_t n, std::span<const Relation> pairs);
  static Poset from_pairs(std::size_t n, std::initializer_list<Relation> pairs) {
    return from_pairs(n, std::span<const Relation>(pairs.begin(), pairs.size()));
  }

  /// Adopts `up` verbatim as the strict order. Throws InvalidPoset naming the
  /// first violated axiom.
  static Poset from_up_sets(std::vector<ElementSet> up);

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }
  ElementSet domain() const { return ElementSet::full(size()); }

  bool less(Element x, Element y) const { return up_[x].contains(y); }
  bool comparable(Element x, Element y) const { return less(x, y) || less(y, x); }
  /// x ⊥ y: distinct and neither below the other.
  bool incomparable(Element x, Element y) const { return x != y && !comparable(x, y); }

  /// {y | x < y}
  ElementSet up(Element x) const { return up_[x]; }
  /// {y | y < x}
  ElementSet down(Element x) const { return down_[x]; }

  /// Number of strict relations.
  std::size_t relation_count() const;
  /// All strict relations (x, y) in lexicographic order.
  std::vector<Relation> relations() const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }
  /// Orders by size, then row by row on the up-set words.
  std::strong_ordering operator<=>(const Poset& other) const;

  std::size_t hash() const;

 private:
  explicit Poset(std::vector<ElementSet> up);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

// Set-level order primitives. Every element set must lie inside the domain.

bool is_downset(const Poset& p, ElementSet x);
bool is_upset(const Poset& p, ElementSet x);

/// X < Y: every x in X is below every y in Y. Vacuously true if either is empty.
bool all_below(const Poset& p, ElementSet x, ElementSet y);

/// Smallest downset / up-set containing `x`.
ElementSet downset_closure(const Poset& p, ElementSet x);
ElementSet upset_closure(const Poset& p, ElementSet x);

ElementSet max_elements(const Poset& p);
ElementSet min_elements(const Poset& p);

/// height(x) = 1 + length of the longest chain strictly below x; minimal
/// elements have height 1.
std::vector<std::size_t> heights(const Poset& p);
/// Dual of heights: maximal elements have depth 1.
std::vector<std::size_t> depths(const Poset& p);

/// Poset on |order| elements where position i < position j iff
/// order[i] < order[j] in `p`.
Poset induced(const Poset& p, std::span<const Element> order);
/// Induced poset on the members of `s`, relabeled densely in increasing order.
Poset induced(const Poset& p, ElementSet s);

/// `p` with element `x` removed; labels above x shift down by one.
Poset remove_element(const Poset& p, Element x);

/// p keeps labels 0..|p|-1; q is shifted up by |p|.
Poset disjoint_union(const Poset& p, const Poset& q);
/// disjoint_union plus every p-element below every q-element.
Poset linear_sum(const Poset& p, const Poset& q);

/// The dual order.
Poset reverse(const Poset& p);

/// Applies a relabeling: element x of `p` becomes `perm[x]`.
Poset relabel(const Poset& p, std::span<const Element> perm);

/// Returns f with x < y in p iff f[x] < f[y] in q, or nullopt.
std::optional<std::vector<Element>> isomorphic(const Poset& p, const Poset& q);

/// Iso-invariant canonical relabeling of `p`: two posets are isomorphic iff
/// their canonical labelings are equal.
Poset iso_canonical(const Poset& p);

inline constexpr std::size_t kDefaultEnumerationGuard = 5;

/// Calls `visit` once for every labeled poset on n elements. Posets are
/// produced by one-point extensions of the posets on n-1 elements.
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit,
                    std::size_t guard = kDefaultEnumerationGuard);
std::vector<Poset> enumerate_all_posets(std::size_t n, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace rotposet

template <>
struct std::hash<rotposet::Poset> {
  std::size_t operator()(const rotposet::Poset& p) const noexcept { return p.hash(); }
};
