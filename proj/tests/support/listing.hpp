#pragma once

#include <vector>

#include "rotposet/equivalence.hpp"
#include "rotposet/poset.hpp"

namespace listing {

using rotposet::Relation;
using rotposet::TripleClass;

// Labels a=0, b=1, c=2. "x>y" entries of the reference list are written as
// y<x here. The third and sixth V-shapes read "b ⊥ c" in print, which
// contradicts their own relations; a ⊥ b is the only consistent reading.
struct Case {
  TripleClass cls;
  std::vector<Relation> less;
};

inline const std::vector<Case>& reference() {
  static const std::vector<Case> listing = {
      {TripleClass::o1, {}},
      {TripleClass::o1, {{0, 1}, {0, 2}}},
      {TripleClass::o1, {{1, 0}, {1, 2}}},
      {TripleClass::o1, {{2, 0}, {2, 1}}},
      {TripleClass::o1, {{1, 0}, {2, 0}}},
      {TripleClass::o1, {{0, 1}, {2, 1}}},
      {TripleClass::o1, {{0, 2}, {1, 2}}},
      {TripleClass::o2, {{0, 1}, {1, 2}}},
      {TripleClass::o2, {{1, 2}, {2, 0}}},
      {TripleClass::o2, {{2, 0}, {0, 1}}},
      {TripleClass::o2, {{0, 1}}},
      {TripleClass::o2, {{1, 2}}},
      {TripleClass::o2, {{2, 0}}},
      {TripleClass::o3, {{1, 0}, {2, 1}}},
      {TripleClass::o3, {{2, 1}, {0, 2}}},
      {TripleClass::o3, {{0, 2}, {1, 0}}},
      {TripleClass::o3, {{1, 0}}},
      {TripleClass::o3, {{2, 1}}},
      {TripleClass::o3, {{0, 2}}},
  };
  return listing;
}

}  // namespace listing
