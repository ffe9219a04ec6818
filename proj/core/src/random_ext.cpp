#include "rotposet/random_ext.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "rotposet/errors.hpp"

namespace rotposet {

void validate_extension_type(const Poset& p, const ExtensionType& t) {
  const auto fail = [](const std::string& why) { throw InvalidTriple("invalid extension type: " + why); };
  if (!t.support().subset_of(p.domain())) fail("blocks leave the domain");
  if (t.lower.intersects(t.middle) || t.lower.intersects(t.upper) || t.middle.intersects(t.upper)) {
    fail("blocks overlap");
  }
  const ElementSet support = t.support();
  for (Element x : t.lower) {
    if (!(p.down(x) & support).subset_of(t.lower)) fail("lower block is not a downset of the support");
  }
  for (Element x : t.upper) {
    if (!(p.up(x) & support).subset_of(t.upper)) fail("upper block is not an up-set of the support");
  }
  if (!all_below(p, t.lower, t.upper)) fail("lower block is not below the upper block");
}

Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(edge_probability);
  std::vector<Relation> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) pairs.emplace_back(order[i], order[j]);
    }
  }
  return Poset::from_pairs(n, pairs);
}

std::optional<Element> ext_witness(const Poset& p, const ExtensionType& t) {
  validate_extension_type(p, t);
  for (Element a : p.domain() - t.support()) {
    if (t.lower.subset_of(p.down(a)) && t.upper.subset_of(p.up(a)) && !t.middle.intersects(p.up(a) | p.down(a))) {
      return a;
    }
  }
  return std::nullopt;
}

Poset pivot_rotation(const Poset& p, Element pivot) {
  if (pivot >= p.size()) throw IndexError("element " + std::to_string(pivot) + " out of range");
  enum class Side { below, beside, above };
  const auto side = [&](Element x) {
    return p.less(x, pivot) ? Side::below : (p.less(pivot, x) ? Side::above : Side::beside);
  };
  const auto label = [pivot](Element x) { return x < pivot ? x : x - 1; };

  std::vector<ElementSet> up(p.size() - 1);
  for (Element x = 0; x < p.size(); ++x) {
    if (x == pivot) continue;
    for (Element y = 0; y < p.size(); ++y) {
      if (y == pivot || y == x) continue;
      const Side sx = side(x), sy = side(y);
      bool related = false;
      if (sx == sy) {
        related = p.less(x, y);
      } else if (sx == Side::above && sy == Side::below) {
        // Everything above the pivot drops under everything below it.
        related = true;
      } else if ((sx == Side::beside && sy == Side::below) || (sx == Side::above && sy == Side::beside)) {
        related = p.incomparable(x, y);
      }
      if (related) up[label(x)].insert(label(y));
    }
  }
  return Poset::from_up_sets(std::move(up));
}

bool pivot_block_inequalities_hold(const Poset& rest, const RotationSpec& spec, const Poset& rotated,
                                   const ExtensionType& type) {
  if (rest.size() != rotated.size()) throw SizeMismatch("rotated poset has a different size");
  validate_extension_type(rotated, type);
  const auto [a, b, c] = validate(rest, spec);
  const ElementSet a2 = type.lower, b2 = type.middle, c2 = type.upper;
  const auto above = [&](ElementSet high, ElementSet low) { return all_below(rest, low, high); };
  const ElementSet mixed = (a & c2) | (b & b2) | (c & a2);
  return above(c & c2, mixed) && above((b & c2) | (c & b2), (a & b2) | (b & a2)) && above(mixed, a & a2);
}

namespace {

void check_embedding(const Poset& from, const Poset& into, std::span<const Element> map, const char* name) {
  const auto fail = [name](const std::string& why) {
    throw NotAnEmbedding(std::string(name) + " is not an embedding: " + why);
  };
  if (map.size() != from.size()) fail("wrong length");
  ElementSet image;
  for (Element x : map) {
    if (x >= into.size()) fail("image out of range");
    if (image.contains(x)) fail("not injective");
    image.insert(x);
  }
  for (Element x = 0; x < from.size(); ++x) {
    for (Element y = 0; y < from.size(); ++y) {
      if (from.less(x, y) != into.less(map[x], map[y])) {
        fail("relation between " + std::to_string(x) + " and " + std::to_string(y) + " not preserved");
      }
    }
  }
}

ElementSet image_of(ElementSet s, std::span<const Element> map) {
  ElementSet out;
  for (Element x : s) out.insert(map[x]);
  return out;
}

}  // namespace

bool restriction_check(const Poset& x, const RotationSpec& spec, const Poset& host, std::span<const Element> into,
                       std::span<const Element> rotated_into) {
  check_embedding(x, host, into, "first embedding");
  const auto [lower, middle, upper] = validate(x, spec);
  check_embedding(rotate(x, spec), host, rotated_into, "second embedding");

  const ElementSet lower_img = image_of(lower, into);
  const ElementSet middle_img = image_of(middle, into);
  const ElementSet upper_img = image_of(upper, into);

  // Push the triple out to all of host by closing the outer blocks.
  ExtendibleTriple triple;
  triple.lower = downset_closure(host, lower_img);
  triple.upper = upset_closure(host, upper_img);
  if (triple.lower.intersects(triple.upper) || middle_img.intersects(triple.lower | triple.upper)) return false;
  triple.middle = host.domain() - triple.lower - triple.upper;
  if (!is_valid(host, {triple.lower, triple.upper})) return false;

  const auto [extended, pivot] = to_extension(host, triple);
  return lower_img.subset_of(extended.down(pivot)) && upper_img.subset_of(extended.up(pivot)) &&
         !middle_img.intersects(extended.up(pivot) | extended.down(pivot));
}

}  // namespace rotposet
