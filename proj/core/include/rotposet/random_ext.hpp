#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rotposet/poset.hpp"
#include "rotposet/rotation.hpp"

namespace rotposet {

/// A requested one-point extension over the subset lower ∪ middle ∪ upper:
/// a new point above `lower`, below `upper` and incomparable to `middle`.
struct ExtensionType {
  ElementSet lower;
  ElementSet middle;
  ElementSet upper;

  ElementSet support() const { return lower | middle | upper; }
};

/// Throws InvalidTriple unless the blocks are disjoint and form an
/// extendible triple of the poset induced on their union.
void validate_extension_type(const Poset& p, const ExtensionType& type);

/// Samples a uniformly random linear order, keeps each of its pairs with
/// probability `edge_probability`, and closes transitively. Deterministic
/// per seed within one build. Throws std::invalid_argument on a probability
/// outside [0, 1].
Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed);

/// Least element outside the support of `type` that realizes it in `p`.
std::optional<Element> ext_witness(const Poset& p, const ExtensionType& type);

/// Removes `pivot` and rotates the rest with lower = elements below the
/// pivot and upper = elements above it. Labels above the pivot shift down.
Poset pivot_rotation(const Poset& p, Element pivot);

/// For `rest` with blocks (A, B, C) given by `spec`, its image `rotated`, and
/// an extension type (A', B', C') of `rotated`, checks in the order of `rest`:
///   C∩C'          > (A∩C') ∪ (B∩B') ∪ (C∩A')
///   (B∩C')∪(C∩B') > (A∩B') ∪ (B∩A')
///   (A∩C') ∪ (B∩B') ∪ (C∩A') > A∩A'
/// Throws InvalidTriple if `type` is not an extension type of `rotated`.
bool pivot_block_inequalities_hold(const Poset& rest, const RotationSpec& spec, const Poset& rotated,
                                   const ExtensionType& type);

/// Given embeddings `into` of x and `rotated_into` of rotate(x, spec) into
/// `host`, checks that the pivot the rotation needs can be adjoined to
/// `host`: a new point above the image of the lower block, below the image
/// of the upper block and incomparable to the rest of the image.
/// Throws NotAnEmbedding.
bool restriction_check(const Poset& x, const RotationSpec& spec, const Poset& host, std::span<const Element> into,
                       std::span<const Element> rotated_into);

}  // namespace rotposet
