#include "rotposet/equivalence.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "rotposet/class_explorer.hpp"
#include "rotposet/errors.hpp"

namespace rotposet {

const char* to_string(TripleClass c) {
  switch (c) {
    case TripleClass::o1:
      return "O1";
    case TripleClass::o2:
      return "O2";
    case TripleClass::o3:
      return "O3";
  }
  return "?";
}

namespace {

// Ordered-pair pattern of a labeled triple, one bit per strict relation
// between positions 0=a, 1=b, 2=c.
constexpr unsigned pair_bit(unsigned x, unsigned y) {
  constexpr std::array<std::array<unsigned, 3>, 3> bit = {{{99, 0, 4}, {1, 99, 2}, {5, 3, 99}}};
  return bit[x][y];
}

struct Listed {
  TripleClass cls;
  // Full strict relation as space-separated "x<y" terms over a, b, c.
  const char* less;
};

// The 19 labeled posets on {a, b, c}.
constexpr Listed kListing[] = {
    {TripleClass::o1, ""},
    {TripleClass::o1, "a<b a<c"},
    {TripleClass::o1, "b<a b<c"},
    {TripleClass::o1, "c<a c<b"},
    {TripleClass::o1, "b<a c<a"},
    {TripleClass::o1, "a<b c<b"},
    {TripleClass::o1, "a<c b<c"},

    {TripleClass::o2, "a<b b<c a<c"},
    {TripleClass::o2, "b<c c<a b<a"},
    {TripleClass::o2, "c<a a<b c<b"},
    {TripleClass::o2, "a<b"},
    {TripleClass::o2, "b<c"},
    {TripleClass::o2, "c<a"},

    {TripleClass::o3, "b<a c<b c<a"},
    {TripleClass::o3, "c<b a<c a<b"},
    {TripleClass::o3, "a<c b<a b<c"},
    {TripleClass::o3, "b<a"},
    {TripleClass::o3, "c<b"},
    {TripleClass::o3, "a<c"},
};

constexpr unsigned parse_pattern(const char* text) {
  unsigned pattern = 0;
  for (const char* s = text; *s != '\0'; ++s) {
    if (*s == '<') pattern |= 1U << pair_bit(static_cast<unsigned>(s[-1] - 'a'), static_cast<unsigned>(s[1] - 'a'));
  }
  return pattern;
}

constexpr int kUnlisted = -1;

constexpr std::array<int, 64> build_table() {
  std::array<int, 64> table{};
  for (int& t : table) t = kUnlisted;
  for (const Listed& entry : kListing) {
    table[parse_pattern(entry.less)] = static_cast<int>(entry.cls);
  }
  return table;
}

constexpr std::array<int, 64> kTripleTable = build_table();

}  // namespace

TripleClass classify_triple(const Poset& p, Element x, Element y, Element z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("classify_triple needs three distinct elements");
  if (x >= p.size() || y >= p.size() || z >= p.size()) throw IndexError("triple element out of range");
  const std::array<Element, 3> t = {x, y, z};
  unsigned pattern = 0;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i != j && p.less(t[i], t[j])) pattern |= 1U << pair_bit(i, j);
    }
  }
  const int cls = kTripleTable[pattern];
  if (cls == kUnlisted) throw std::logic_error("relation pattern is not a partial order");
  return static_cast<TripleClass>(cls);
}

bool are_equivalent(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different sizes");
  const std::size_t n = p.size();
  if (n < 3) return oracle_equivalent(p, q);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      for (Element z = y + 1; z < n; ++z) {
        if (classify_triple(p, x, y, z) != classify_triple(q, x, y, z)) return false;
      }
    }
  }
  return true;
}

std::optional<RotationSpec> find_rotation(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different sizes");
  if (p.empty()) return RotationSpec{};
  if (!are_equivalent(p, q)) return std::nullopt;

  // The target maxima form at most two stacked antichains lower < upper in p.
  const ElementSet target_max = max_elements(q);
  ElementSet lower_max = target_max;
  ElementSet upper_max;
  for (Element x : target_max) {
    bool split = false;
    for (Element y : target_max) {
      if (x < y && p.comparable(x, y)) {
        const Element bottom = p.less(x, y) ? x : y;
        upper_max = target_max & p.up(bottom);
        lower_max = target_max - upper_max;
        split = true;
        break;
      }
    }
    if (split) break;
  }

  RotationSpec spec;
  spec.lower = downset_closure(p, lower_max);
  for (Element x = 0; x < p.size(); ++x) {
    const bool above_lower = lower_max.subset_of(p.down(x));
    const bool under_upper = upper_max.contains(x) || p.up(x).intersects(upper_max);
    if (above_lower && !under_upper) spec.upper.insert(x);
  }
  if (!is_valid(p, spec) || rotate(p, spec) != q) {
    throw std::logic_error("rotation construction failed on an equivalent pair");
  }
  return spec;
}

RotationSpec rotation_to_unique_max(const Poset& p, Element top) {
  if (top >= p.size()) throw IndexError("element " + std::to_string(top) + " out of range");
  return {p.down(top) | ElementSet::singleton(top), p.up(top)};
}

Poset rotate_to_unique_max(const Poset& p, Element top) { return rotate(p, rotation_to_unique_max(p, top)); }

Poset canonical_form(const Poset& p, std::size_t guard) {
  if (p.size() > guard) {
    throw SizeError("canonical form limited to n <= " + std::to_string(guard) + ", got " + std::to_string(p.size()));
  }
  if (p.empty()) return p;
  std::optional<Poset> best;
  for (Element top = 0; top < p.size(); ++top) {
    Poset form = iso_canonical(rotate_to_unique_max(p, top));
    if (!best || form < *best) best = std::move(form);
  }
  return *best;
}

bool equivalent_upto_iso(const Poset& p, const Poset& q, std::size_t guard) {
  if (p.size() != q.size()) return false;
  return canonical_form(p, guard) == canonical_form(q, guard);
}

}  // namespace rotposet
