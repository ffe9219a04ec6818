#include "rotposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "rotposet/errors.hpp"

namespace rotposet {

std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

void check_size(std::size_t n) {
  if (n > Poset::kMaxElements) {
    throw SizeError("poset has " + std::to_string(n) + " elements; at most " +
                    std::to_string(Poset::kMaxElements) + " are supported");
  }
}

}  // namespace

Poset::Poset(std::vector<ElementSet> up) : up_(std::move(up)), down_(up_.size()) {
  for (Element x = 0; x < up_.size(); ++x) {
    for (Element y : up_[x]) down_[y].insert(x);
  }
}

Poset Poset::antichain(std::size_t n) {
  check_size(n);
  return Poset(std::vector<ElementSet>(n));
}

Poset Poset::chain(std::size_t n) {
  check_size(n);
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x] = ElementSet::full(n) - ElementSet::full(x + 1);
  return Poset(std::move(up));
}

Poset Poset::from_pairs(std::size_t n, std::span<const Relation> pairs) {
  check_size(n);
  std::vector<ElementSet> up(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw IndexError("relation " + std::to_string(x) + " < " + std::to_string(y) +
                       " is outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    up[x].insert(y);
  }
  // Warshall closure on bit rows.
  for (Element k = 0; k < n; ++k) {
    for (Element x = 0; x < n; ++x) {
      if (up[x].contains(k)) up[x] |= up[k];
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (up[x].contains(x)) {
      throw CycleError("relation has a directed cycle through element " + std::to_string(x));
    }
  }
  return Poset(std::move(up));
}

Poset Poset::from_up_sets(std::vector<ElementSet> up) {
  const std::size_t n = up.size();
  check_size(n);
  const ElementSet dom = ElementSet::full(n);
  for (Element x = 0; x < n; ++x) {
    if (!up[x].subset_of(dom)) throw IndexError("up-set of " + std::to_string(x) + " leaves the domain");
    if (up[x].contains(x)) throw InvalidPoset("not irreflexive at " + std::to_string(x));
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up[x]) {
      if (up[y].contains(x)) {
        throw InvalidPoset("not antisymmetric at " + std::to_string(x) + ", " + std::to_string(y));
      }
      if (!up[y].subset_of(up[x])) {
        throw InvalidPoset("not transitive at " + std::to_string(x) + " < " + std::to_string(y));
      }
    }
  }
  return Poset(std::move(up));
}

std::size_t Poset::relation_count() const {
  std::size_t count = 0;
  for (ElementSet s : up_) count += s.size();
  return count;
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (Element x = 0; x < size(); ++x) {
    for (Element y : up_[x]) out.emplace_back(x, y);
  }
  return out;
}

std::strong_ordering Poset::operator<=>(const Poset& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  for (Element x = 0; x < size(); ++x) {
    if (auto c = up_[x].bits() <=> other.up_[x].bits(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Poset::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size();
  for (ElementSet s : up_) {
    h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool is_downset(const Poset& p, ElementSet x) {
  for (Element e : x) {
    if (!p.down(e).subset_of(x)) return false;
  }
  return true;
}

bool is_upset(const Poset& p, ElementSet x) {
  for (Element e : x) {
    if (!p.up(e).subset_of(x)) return false;
  }
  return true;
}

bool all_below(const Poset& p, ElementSet x, ElementSet y) {
  for (Element e : x) {
    if (!y.subset_of(p.up(e))) return false;
  }
  return true;
}

ElementSet downset_closure(const Poset& p, ElementSet x) {
  ElementSet out = x;
  for (Element e : x) out |= p.down(e);
  return out;
}

ElementSet upset_closure(const Poset& p, ElementSet x) {
  ElementSet out = x;
  for (Element e : x) out |= p.up(e);
  return out;
}

ElementSet max_elements(const Poset& p) {
  ElementSet out;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.up(x).empty()) out.insert(x);
  }
  return out;
}

ElementSet min_elements(const Poset& p) {
  ElementSet out;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.down(x).empty()) out.insert(x);
  }
  return out;
}

namespace {

// Longest-chain rank, computed by peeling off minimal (or maximal) layers.
std::vector<std::size_t> layer_ranks(const Poset& p, bool from_bottom) {
  std::vector<std::size_t> rank(p.size(), 0);
  ElementSet rest = p.domain();
  std::size_t layer = 0;
  while (!rest.empty()) {
    ++layer;
    ElementSet peel;
    for (Element x : rest) {
      const ElementSet blockers = from_bottom ? p.down(x) : p.up(x);
      if (!blockers.intersects(rest)) peel.insert(x);
    }
    for (Element x : peel) rank[x] = layer;
    rest -= peel;
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> heights(const Poset& p) { return layer_ranks(p, true); }
std::vector<std::size_t> depths(const Poset& p) { return layer_ranks(p, false); }

Poset induced(const Poset& p, std::span<const Element> order) {
  std::vector<ElementSet> up(order.size());
  for (Element i = 0; i < order.size(); ++i) {
    if (order[i] >= p.size()) throw IndexError("element " + std::to_string(order[i]) + " out of range");
    for (Element j = 0; j < order.size(); ++j) {
      if (p.less(order[i], order[j])) up[i].insert(j);
    }
  }
  return Poset::from_up_sets(std::move(up));
}

Poset induced(const Poset& p, ElementSet s) {
  const auto members = s.to_vector();
  return induced(p, std::span<const Element>(members));
}

Poset remove_element(const Poset& p, Element x) {
  if (x >= p.size()) throw IndexError("element " + std::to_string(x) + " out of range");
  std::vector<Element> keep;
  for (Element y = 0; y < p.size(); ++y) {
    if (y != x) keep.push_back(y);
  }
  return induced(p, std::span<const Element>(keep));
}

namespace {

ElementSet shifted(ElementSet s, std::size_t by) { return ElementSet(by >= 64 ? 0 : s.bits() << by); }

Poset stack(const Poset& p, const Poset& q, bool link) {
  const std::size_t n = p.size() + q.size();
  check_size(n);
  std::vector<ElementSet> up(n);
  const ElementSet q_block = shifted(ElementSet::full(q.size()), p.size());
  for (Element x = 0; x < p.size(); ++x) up[x] = link ? (p.up(x) | q_block) : p.up(x);
  for (Element y = 0; y < q.size(); ++y) up[p.size() + y] = shifted(q.up(y), p.size());
  return Poset::from_up_sets(std::move(up));
}

}  // namespace

Poset disjoint_union(const Poset& p, const Poset& q) { return stack(p, q, false); }
Poset linear_sum(const Poset& p, const Poset& q) { return stack(p, q, true); }

Poset reverse(const Poset& p) {
  std::vector<ElementSet> up(p.size());
  for (Element x = 0; x < p.size(); ++x) up[x] = p.down(x);
  return Poset::from_up_sets(std::move(up));
}

Poset relabel(const Poset& p, std::span<const Element> perm) {
  if (perm.size() != p.size()) throw SizeMismatch("relabeling has the wrong length");
  std::vector<ElementSet> up(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) up[perm[x]].insert(perm[y]);
  }
  return Poset::from_up_sets(std::move(up));
}

// --- isomorphism ---------------------------------------------------------

namespace {

// Colour refinement: start from (height, depth, |down|, |up|) and split by
// the multisets of colours below and above until stable. Colours are ranks
// of sorted signatures, so they are iso-invariant and comparable between
// posets refined together.
std::vector<std::size_t> refine_colors(const Poset& p) {
  const std::size_t n = p.size();
  const auto h = heights(p);
  const auto d = depths(p);
  using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

  std::vector<std::size_t> color(n);
  {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> keys(n);
    for (Element x = 0; x < n; ++x) keys[x] = {h[x], d[x], p.down(x).size(), p.up(x).size()};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element x = 0; x < n; ++x) {
      color[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
    }
  }

  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> sig(n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::size_t> below, above;
      for (Element y : p.down(x)) below.push_back(color[y]);
      for (Element y : p.up(x)) above.push_back(color[y]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[x] = {color[x], std::move(below), std::move(above)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element x = 0; x < n; ++x) {
      color[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return color;
}

bool twins(const Poset& p, Element x, Element y) { return p.up(x) == p.up(y) && p.down(x) == p.down(y); }

class IsoSearch {
 public:
  IsoSearch(const Poset& p, const Poset& q, std::vector<std::size_t> color)
      : p_(p), q_(q), color_(std::move(color)), map_(p.size()), used_(q.size(), false) {
    order_.resize(p.size());
    std::iota(order_.begin(), order_.end(), Element{0});
    std::vector<std::size_t> cell_size(2 * p.size() + 1, 0);
    for (Element x = 0; x < p.size(); ++x) ++cell_size[color_[x]];
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
      return std::pair(cell_size[color_[a]], color_[a]) < std::pair(cell_size[color_[b]], color_[b]);
    });
  }

  std::optional<std::vector<Element>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t depth, Element x, Element y) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Element u = order_[k];
      const Element v = map_[u];
      if (p_.less(u, x) != q_.less(v, y) || p_.less(x, u) != q_.less(y, v)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    const std::size_t offset = p_.size();
    std::vector<Element> failed;
    for (Element y = 0; y < q_.size(); ++y) {
      if (used_[y] || color_[offset + y] != color_[x]) continue;
      // Swapping unused twins is an automorphism of q fixing the partial map.
      if (std::any_of(failed.begin(), failed.end(), [&](Element f) { return twins(q_, f, y); })) continue;
      if (!consistent(depth, x, y)) {
        failed.push_back(y);
        continue;
      }
      map_[x] = y;
      used_[y] = true;
      if (search(depth + 1)) return true;
      used_[y] = false;
      failed.push_back(y);
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<std::size_t> color_;
  std::vector<Element> order_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.relation_count() != q.relation_count()) return std::nullopt;
  if (p.empty()) return std::vector<Element>{};
  const auto color = refine_colors(disjoint_union(p, q));
  std::vector<std::size_t> hist_p(2 * p.size(), 0), hist_q(2 * p.size(), 0);
  for (Element x = 0; x < p.size(); ++x) {
    ++hist_p[color[x]];
    ++hist_q[color[p.size() + x]];
  }
  if (hist_p != hist_q) return std::nullopt;
  return IsoSearch(p, q, color).run();
}

// --- canonical labeling --------------------------------------------------

namespace {

// Finds the relabeling that respects the refined colour order and minimises
// the code sequence; position k contributes one symbol per earlier position j:
// 0 for incomparable, 1 for (j < k), 2 for (k < j).
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()), color_(refine_colors(p)) {
    cell_of_position_ = color_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    placed_.assign(n_, false);
  }

  std::vector<Element> run() {
    search(0);
    return best_;
  }

 private:
  std::vector<std::uint8_t> block(Element x) const {
    std::vector<std::uint8_t> out(current_.size());
    for (std::size_t j = 0; j < current_.size(); ++j) {
      const Element u = current_[j];
      out[j] = p_.less(u, x) ? 1 : (p_.less(x, u) ? 2 : 0);
    }
    return out;
  }

  // Compares code_ followed by `next` against the same-length prefix of the
  // best code found so far. Anything beats "no best yet".
  std::strong_ordering versus_best(const std::vector<std::uint8_t>& next) const {
    if (!have_best_) return std::strong_ordering::less;
    const auto mid = best_code_.begin() + static_cast<std::ptrdiff_t>(code_.size());
    if (auto c = std::lexicographical_compare_three_way(code_.begin(), code_.end(), best_code_.begin(), mid); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(next.begin(), next.end(), mid,
                                                  mid + static_cast<std::ptrdiff_t>(next.size()));
  }

  void search(std::size_t depth) {
    if (depth == n_) {
      if (versus_best({}) < 0) {
        best_ = current_;
        best_code_ = code_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Element> candidates;
    std::vector<std::uint8_t> min_block;
    for (Element x = 0; x < n_; ++x) {
      if (placed_[x] || color_[x] != cell_of_position_[depth]) continue;
      auto b = block(x);
      if (candidates.empty() || b < min_block) {
        candidates.assign(1, x);
        min_block = std::move(b);
      } else if (b == min_block) {
        candidates.push_back(x);
      }
    }
    std::vector<Element> tried;
    for (Element x : candidates) {
      if (versus_best(min_block) > 0) return;
      // Swapping two unplaced twins is an automorphism fixing the prefix.
      if (std::any_of(tried.begin(), tried.end(), [&](Element t) { return twins(p_, t, x); })) continue;
      tried.push_back(x);
      placed_[x] = true;
      current_.push_back(x);
      code_.insert(code_.end(), min_block.begin(), min_block.end());
      search(depth + 1);
      code_.resize(code_.size() - min_block.size());
      current_.pop_back();
      placed_[x] = false;
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> cell_of_position_;
  std::vector<bool> placed_;
  std::vector<Element> current_;
  std::vector<std::uint8_t> code_;
  bool have_best_ = false;
  std::vector<Element> best_;
  std::vector<std::uint8_t> best_code_;
};

}  // namespace

Poset iso_canonical(const Poset& p) {
  if (p.empty()) return p;
  const auto order = CanonicalSearch(p).run();
  // order[k] is the element placed at position k.
  std::vector<Element> perm(p.size());
  for (Element k = 0; k < order.size(); ++k) perm[order[k]] = k;
  return relabel(p, perm);
}

// --- enumeration ---------------------------------------------------------

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit, std::size_t guard) {
  if (n > guard) {
    throw SizeError("exhaustive enumeration limited to n <= " + std::to_string(guard) + ", got " +
                    std::to_string(n));
  }
  if (n == 0) {
    visit(Poset());
    return;
  }
  // Every labeled poset on n elements is exactly one poset on 0..n-2 plus a
  // new top label n-1 placed above a downset and below a disjoint up-set.
  const Element fresh = n - 1;
  for_each_poset(
      n - 1,
      [&](const Poset& base) {
        const std::uint64_t subsets = std::uint64_t{1} << base.size();
        std::vector<ElementSet> downsets, upsets;
        for (std::uint64_t bits = 0; bits < subsets; ++bits) {
          const ElementSet s(bits);
          if (is_downset(base, s)) downsets.push_back(s);
          if (is_upset(base, s)) upsets.push_back(s);
        }
        for (ElementSet lower : downsets) {
          for (ElementSet upper : upsets) {
            if (lower.intersects(upper) || !all_below(base, lower, upper)) continue;
            std::vector<ElementSet> up(n);
            for (Element x = 0; x < base.size(); ++x) {
              up[x] = base.up(x);
              if (lower.contains(x)) up[x].insert(fresh);
            }
            up[fresh] = upper;
            visit(Poset::from_up_sets(std::move(up)));
          }
        }
      },
      guard);
}

std::vector<Poset> enumerate_all_posets(std::size_t n, std::size_t guard) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); }, guard);
  return out;
}

}  // namespace rotposet
