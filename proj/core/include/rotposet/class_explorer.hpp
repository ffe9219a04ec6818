#pragma once

#include <cstddef>
#include <vector>

#include "rotposet/poset.hpp"

namespace rotposet {

inline constexpr std::size_t kDefaultClassGuard = 7;

/// One rotation-equivalence class on a fixed labeled domain.
struct ClassReport {
  Poset representative;
  /// In breadth-first discovery order, starting with the representative.
  std::vector<Poset> labeled_members;
  /// Distinct iso_canonical forms of the members, sorted.
  std::vector<Poset> iso_types;

  std::size_t labeled_size() const { return labeled_members.size(); }
  std::size_t iso_count() const { return iso_types.size(); }
};

/// Closure of {p} under cutting at a single minimal element. Because any
/// rotation factors into such cuts and rotations compose, this is exactly the
/// rotation-equivalence class of p. Throws SizeError above `guard`.
ClassReport enumerate_class(const Poset& p, std::size_t guard = kDefaultClassGuard);

/// Brute-force equivalence test: breadth-first search from p for q.
bool oracle_equivalent(const Poset& p, const Poset& q, std::size_t guard = kDefaultClassGuard);

struct ClassSummary {
  std::size_t id = 0;
  /// canonical_form of the class; isomorphic classes share it.
  Poset canonical;
  /// Least member under Poset ordering; identifies the labeled class.
  Poset least_member;
  std::size_t labeled_size = 0;
  std::size_t iso_size = 0;
};

struct StatsReport {
  std::size_t n = 0;
  std::size_t total_posets = 0;
  /// Sorted by (canonical, least_member); ids are positions.
  std::vector<ClassSummary> classes;
  std::size_t min_labeled_size = 0;
  std::size_t max_labeled_size = 0;
};

/// Partitions every labeled poset on n elements into rotation classes.
/// Per-class summaries are computed on `jobs` threads; the report does not
/// depend on the thread count.
StatsReport class_stats(std::size_t n, std::size_t guard = kDefaultEnumerationGuard, std::size_t jobs = 1);

}  // namespace rotposet
