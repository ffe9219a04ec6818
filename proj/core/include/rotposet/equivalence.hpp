#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "rotposet/poset.hpp"
#include "rotposet/rotation.hpp"

namespace rotposet {

/// The three rotation classes of a labeled 3-element poset on (a, b, c):
/// o1 holds the antichain and the four V shapes, o2 the chain a<b<c and its
/// cyclic shifts together with the single relations a<b, b<c, c<a, and o3
/// is the dual of o2.
enum class TripleClass { o1, o2, o3 };

const char* to_string(TripleClass c);

/// Class of the induced poset on the ordered triple (a, b, c).
/// The three elements must be distinct.
TripleClass classify_triple(const Poset& p, Element a, Element b, Element c);

/// Same domain, same class on every 3-subset (taken in increasing label
/// order). Posets on fewer than three elements are decided by cut search.
/// Throws SizeMismatch.
bool are_equivalent(const Poset& p, const Poset& q);

/// A single rotation taking p exactly to q, or nullopt when the two are not
/// rotation-equivalent. The empty poset yields the empty rotation.
std::optional<RotationSpec> find_rotation(const Poset& p, const Poset& q);

/// The rotation whose image has `top` as its only maximal element: lower is
/// everything at or below `top`, upper everything above it.
RotationSpec rotation_to_unique_max(const Poset& p, Element top);
Poset rotate_to_unique_max(const Poset& p, Element top);

inline constexpr std::size_t kDefaultCanonicalGuard = 10;

/// Invariant of the class up to isomorphism: the least iso-canonical form
/// over all single-maximum representatives. Throws SizeError above `guard`.
Poset canonical_form(const Poset& p, std::size_t guard = kDefaultCanonicalGuard);

/// Whether p is rotation-equivalent to some poset isomorphic to q.
bool equivalent_upto_iso(const Poset& p, const Poset& q, std::size_t guard = kDefaultCanonicalGuard);

}  // namespace rotposet
