#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rotposet {

using Element = std::size_t;

/// A subset of the element labels 0..63, stored as a single machine word.
/// Posets are capped at 64 elements, so every element set fits.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  static ElementSet from_elements(const std::vector<Element>& elements) {
    ElementSet s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr ElementSet singleton(Element e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element e) const { return e < kCapacity && ((bits_ >> e) & 1U) != 0; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest element; undefined on the empty set.
  constexpr Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }
  /// Largest element + 1, or 0 for the empty set.
  constexpr std::size_t bound() const { return kCapacity - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Element e : *this) out.push_back(e);
    return out;
  }

  /// Forward iteration over members in increasing order.
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// `{0,2,5}` / `{}`
std::string to_string(ElementSet s);

}  // namespace rotposet
