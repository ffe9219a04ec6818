#include "rotposet/class_explorer.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <thread>
#include <unordered_set>

#include "rotposet/equivalence.hpp"
#include "rotposet/errors.hpp"
#include "rotposet/rotation.hpp"

namespace rotposet {

namespace {

void check_guard(std::size_t n, std::size_t guard) {
  if (n > guard) {
    throw SizeError("class search limited to n <= " + std::to_string(guard) + ", got " + std::to_string(n));
  }
}

// Breadth-first closure under single minimal-element cuts. `stop` ends the
// search early when it returns true for a newly reached poset.
template <typename Stop>
std::vector<Poset> cut_closure(const Poset& start, Stop stop) {
  std::vector<Poset> reached{start};
  std::unordered_set<Poset> seen{start};
  if (stop(start)) return reached;
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const Poset current = reached[frontier.front()];
    frontier.pop_front();
    for (Element m : min_elements(current)) {
      Poset next = cut(current, ElementSet::singleton(m));
      if (!seen.insert(next).second) continue;
      reached.push_back(std::move(next));
      if (stop(reached.back())) return reached;
      frontier.push_back(reached.size() - 1);
    }
  }
  return reached;
}

}  // namespace

ClassReport enumerate_class(const Poset& p, std::size_t guard) {
  check_guard(p.size(), guard);
  ClassReport report;
  report.representative = p;
  report.labeled_members = cut_closure(p, [](const Poset&) { return false; });
  for (const Poset& member : report.labeled_members) report.iso_types.push_back(iso_canonical(member));
  std::sort(report.iso_types.begin(), report.iso_types.end());
  report.iso_types.erase(std::unique(report.iso_types.begin(), report.iso_types.end()), report.iso_types.end());
  return report;
}

bool oracle_equivalent(const Poset& p, const Poset& q, std::size_t guard) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different sizes");
  check_guard(p.size(), guard);
  bool found = false;
  cut_closure(p, [&](const Poset& r) { return found = (r == q); });
  return found;
}

StatsReport class_stats(std::size_t n, std::size_t guard, std::size_t jobs) {
  check_guard(n, guard);
  StatsReport report;
  report.n = n;

  std::vector<std::vector<Poset>> classes;
  std::unordered_set<Poset> assigned;
  for_each_poset(
      n,
      [&](const Poset& p) {
        ++report.total_posets;
        if (assigned.contains(p)) return;
        auto members = cut_closure(p, [](const Poset&) { return false; });
        assigned.insert(members.begin(), members.end());
        classes.push_back(std::move(members));
      },
      guard);

  report.classes.resize(classes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < classes.size(); i = next++) {
      const auto& members = classes[i];
      ClassSummary& s = report.classes[i];
      s.canonical = canonical_form(members.front(), std::max<std::size_t>(n, kDefaultCanonicalGuard));
      s.least_member = *std::min_element(members.begin(), members.end());
      s.labeled_size = members.size();
      std::vector<Poset> types;
      for (const Poset& m : members) types.push_back(iso_canonical(m));
      std::sort(types.begin(), types.end());
      s.iso_size = static_cast<std::size_t>(std::unique(types.begin(), types.end()) - types.begin());
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
    worker();
  }

  std::sort(report.classes.begin(), report.classes.end(), [](const ClassSummary& x, const ClassSummary& y) {
    return std::tie(x.canonical, x.least_member) < std::tie(y.canonical, y.least_member);
  });
  for (std::size_t i = 0; i < report.classes.size(); ++i) report.classes[i].id = i;
  if (!report.classes.empty()) {
    const auto [lo, hi] = std::minmax_element(
        report.classes.begin(), report.classes.end(),
        [](const ClassSummary& x, const ClassSummary& y) { return x.labeled_size < y.labeled_size; });
    report.min_labeled_size = lo->labeled_size;
    report.max_labeled_size = hi->labeled_size;
  }
  return report;
}

}  // namespace rotposet
