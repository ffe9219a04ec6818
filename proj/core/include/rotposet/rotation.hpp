#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rotposet/errors.hpp"
#include "rotposet/poset.hpp"

namespace rotposet {

/// The two blocks that define a rotation: `lower` is a downset that ends up
/// on top, `upper` is an up-set that ends up at the bottom. The middle block
/// is whatever is left and is never stored.
struct RotationSpec {
  ElementSet lower;
  ElementSet upper;

  bool operator==(const RotationSpec&) const = default;
};

/// A partition (lower, middle, upper) of the whole domain where lower is a
/// downset, upper an up-set and lower < upper.
struct ExtendibleTriple {
  ElementSet lower;
  ElementSet middle;
  ElementSet upper;

  bool operator==(const ExtendibleTriple&) const = default;
};

class InvalidRotation : public Error {
 public:
  enum class Violation { out_of_range, overlap, not_downset, not_upset, not_below };

  InvalidRotation(Violation violation, const std::string& detail);
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

const char* to_string(InvalidRotation::Violation v);

/// Checks the rotation preconditions against `p` and returns the full
/// partition. Throws InvalidRotation naming the first violated condition.
ExtendibleTriple validate(const Poset& p, const RotationSpec& spec);

/// Same checks, no exception.
bool is_valid(const Poset& p, const RotationSpec& spec);

/// The rotated order. Relations inside a block are kept; across blocks:
///   middle x, lower y:  x < y iff x and y were incomparable
///   upper x,  lower y:  always x < y
///   upper x,  middle y: x < y iff x and y were incomparable
/// and every other cross-block pair becomes incomparable.
Poset rotate(const Poset& p, const RotationSpec& spec);

/// Rotation with an empty upper block.
Poset cut(const Poset& p, ElementSet lower);

struct PointDeletion {
  Poset rest;
  RotationSpec spec;
};

/// Deletes `point` from `extended` and reads off the rotation it induces on
/// the remainder: lower = elements below the point, upper = elements above.
/// Labels above `point` shift down by one.
PointDeletion from_extension(const Poset& extended, Element point);

struct PointExtension {
  Poset extended;
  Element point;
};

/// Adds a new element (label p.size()) above the lower block, below the
/// upper block and incomparable to the middle block.
PointExtension to_extension(const Poset& p, const ExtendibleTriple& triple);

/// Returns (first, second) with cut(cut(p, first), second) == rotate(p, spec):
/// first is the lower block, second is lower plus middle.
std::pair<ElementSet, ElementSet> decompose_to_two_cuts(const Poset& p, const RotationSpec& spec);

/// Orders `lower` so that no later element lies below an earlier one, taking
/// the lexicographically least such order. Cutting at each singleton in turn
/// reproduces cut(p, lower). Throws NotDownset.
std::vector<Element> decompose_to_single_cuts(const Poset& p, ElementSet lower);

/// `rot A={0,2} C={5}`
std::string format_rotation(const RotationSpec& spec);
/// Inverse of format_rotation. Throws ParseError.
RotationSpec parse_rotation(const std::string& text);

}  // namespace rotposet
