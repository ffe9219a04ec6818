#include "rotposet/rotation.hpp"

#include <cctype>
#include <sstream>

namespace rotposet {

InvalidRotation::InvalidRotation(Violation violation, const std::string& detail)
    : Error(std::string("invalid rotation (") + rotposet::to_string(violation) + "): " + detail),
      violation_(violation) {}

const char* to_string(InvalidRotation::Violation v) {
  switch (v) {
    case InvalidRotation::Violation::out_of_range:
      return "out-of-range";
    case InvalidRotation::Violation::overlap:
      return "overlap";
    case InvalidRotation::Violation::not_downset:
      return "not-downset";
    case InvalidRotation::Violation::not_upset:
      return "not-upset";
    case InvalidRotation::Violation::not_below:
      return "not-below";
  }
  return "unknown";
}

namespace {

std::optional<InvalidRotation> check(const Poset& p, const RotationSpec& spec) {
  using V = InvalidRotation::Violation;
  const ElementSet dom = p.domain();
  if (!spec.lower.subset_of(dom) || !spec.upper.subset_of(dom)) {
    return InvalidRotation(V::out_of_range, "sets must lie in 0.." + std::to_string(p.size()) + "-1");
  }
  if (spec.lower.intersects(spec.upper)) {
    return InvalidRotation(V::overlap, "A and C share " + to_string(spec.lower & spec.upper));
  }
  if (!is_downset(p, spec.lower)) return InvalidRotation(V::not_downset, "A=" + to_string(spec.lower));
  if (!is_upset(p, spec.upper)) return InvalidRotation(V::not_upset, "C=" + to_string(spec.upper));
  if (!all_below(p, spec.lower, spec.upper)) {
    return InvalidRotation(V::not_below, "A=" + to_string(spec.lower) + " is not below C=" + to_string(spec.upper));
  }
  return std::nullopt;
}

}  // namespace

ExtendibleTriple validate(const Poset& p, const RotationSpec& spec) {
  if (auto err = check(p, spec)) throw *err;
  return {spec.lower, p.domain() - spec.lower - spec.upper, spec.upper};
}

bool is_valid(const Poset& p, const RotationSpec& spec) { return !check(p, spec).has_value(); }

Poset rotate(const Poset& p, const RotationSpec& spec) {
  const auto [lower, middle, upper] = validate(p, spec);
  std::vector<ElementSet> up(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    const ElementSet incomparable = p.domain() - p.up(x) - p.down(x) - ElementSet::singleton(x);
    if (lower.contains(x)) {
      up[x] = p.up(x) & lower;
    } else if (middle.contains(x)) {
      up[x] = (p.up(x) & middle) | (incomparable & lower);
    } else {
      up[x] = (p.up(x) & upper) | lower | (incomparable & middle);
    }
  }
  return Poset::from_up_sets(std::move(up));
}

Poset cut(const Poset& p, ElementSet lower) { return rotate(p, {lower, {}}); }

PointDeletion from_extension(const Poset& extended, Element point) {
  if (point >= extended.size()) throw IndexError("element " + std::to_string(point) + " out of range");
  // Relabel: y > point moves to y - 1.
  const auto squeeze = [point](ElementSet s) {
    ElementSet out;
    for (Element y : s) {
      if (y != point) out.insert(y < point ? y : y - 1);
    }
    return out;
  };
  return {remove_element(extended, point), {squeeze(extended.down(point)), squeeze(extended.up(point))}};
}

PointExtension to_extension(const Poset& p, const ExtendibleTriple& triple) {
  validate(p, {triple.lower, triple.upper});
  if (triple.middle != p.domain() - triple.lower - triple.upper) {
    throw InvalidRotation(InvalidRotation::Violation::overlap, "middle block is not the complement of A and C");
  }
  const Element point = p.size();
  std::vector<ElementSet> up(p.size() + 1);
  for (Element x = 0; x < p.size(); ++x) {
    up[x] = p.up(x);
    if (triple.lower.contains(x)) up[x].insert(point);
  }
  up[point] = triple.upper;
  return {Poset::from_up_sets(std::move(up)), point};
}

std::pair<ElementSet, ElementSet> decompose_to_two_cuts(const Poset& p, const RotationSpec& spec) {
  const auto triple = validate(p, spec);
  return {triple.lower, triple.lower | triple.middle};
}

std::vector<Element> decompose_to_single_cuts(const Poset& p, ElementSet lower) {
  if (!lower.subset_of(p.domain()) || !is_downset(p, lower)) {
    throw NotDownset(to_string(lower) + " is not a downset");
  }
  std::vector<Element> order;
  ElementSet done;
  while (done != lower) {
    for (Element x : lower - done) {
      if (p.down(x).subset_of(done)) {
        order.push_back(x);
        done.insert(x);
        break;
      }
    }
  }
  return order;
}

std::string format_rotation(const RotationSpec& spec) {
  return "rot A=" + to_string(spec.lower) + " C=" + to_string(spec.upper);
}

namespace {

ElementSet parse_set(std::istream& in, const std::string& text) {
  const auto fail = [&] { throw ParseError("malformed rotation spec: " + text); };
  char c = 0;
  if (!(in >> c) || c != '{') fail();
  ElementSet out;
  in >> std::ws;
  if (in.peek() == '}') {
    in.get();
    return out;
  }
  while (true) {
    long long value = -1;
    if (!(in >> value) || value < 0 || value >= static_cast<long long>(ElementSet::kCapacity)) fail();
    out.insert(static_cast<Element>(value));
    if (!(in >> c)) fail();
    if (c == '}') return out;
    if (c != ',') fail();
  }
}

}  // namespace

RotationSpec parse_rotation(const std::string& text) {
  std::istringstream in(text);
  const auto fail = [&] { throw ParseError("malformed rotation spec: " + text); };
  std::string word;
  if (!(in >> word) || word != "rot") fail();
  RotationSpec spec;
  for (const char* key : {"A=", "C="}) {
    in >> std::ws;
    char k[2] = {};
    if (!in.read(k, 2) || k[0] != key[0] || k[1] != '=') fail();
    (key[0] == 'A' ? spec.lower : spec.upper) = parse_set(in, text);
  }
  in >> std::ws;
  if (!in.eof()) fail();
  return spec;
}

}  // namespace rotposet
