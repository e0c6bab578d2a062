#include "posetlab/structure.h"

#include <functional>

#include "posetlab/error.h"

namespace posetlab {

std::size_t width(const Poset& p) {
  const std::size_t n = p.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(n, kFree);
  std::vector<char> visited;
  // Kuhn's augmenting paths; left copy x links to right copy y when x < y.
  std::function<bool(std::size_t)> augment = [&](std::size_t x) {
    bool found = false;
    p.up(x).for_each([&](std::size_t y) {
      if (found || y == x || visited[y]) return;
      visited[y] = 1;
      if (match_right[y] == kFree || augment(match_right[y])) {
        match_right[y] = x;
        found = true;
      }
    });
    return found;
  };
  std::size_t matching = 0;
  for (std::size_t x = 0; x < n; ++x) {
    visited.assign(n, 0);
    if (augment(x)) ++matching;
  }
  return n - matching;
}

std::optional<PointId> articulation_point(const Poset& p) {
  for (PointId x = 0; x < p.size(); ++x)
    if (p.up(x).count() + p.down(x).count() == p.size() + 1) return x;
  return std::nullopt;
}

SymmetryReport symmetry_analysis(const Poset& p, std::span<const PointId> phi) {
  const std::size_t n = p.size();
  if (phi.size() != n) throw Error(ErrorKind::NotInvolution, "map must cover every point");
  for (PointId x = 0; x < n; ++x)
    if (phi[x] >= n || phi[phi[x]] != x)
      throw Error(ErrorKind::NotInvolution, "map is not an involution at " + p.label(x));
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (p.leq(x, y) != p.leq(phi[x], phi[y]))
        throw Error(ErrorKind::NotOrderPreserving,
                    "map does not preserve " + p.label(x) + " vs " + p.label(y));

  SymmetryReport report;
  report.fixed_set = PointSet(n);
  for (PointId x = 0; x < n; ++x)
    if (phi[x] == x) report.fixed_set.set(x);
  report.is_down_set = is_down_set(p, report.fixed_set);

  if (report.fixed_set.none()) {
    report.predicted_outcome = ImpartialOutcome::ForallWin;
  } else {
    report.fixed_set.for_each([&](std::size_t z) {
      if (!report.predicted_outcome && report.fixed_set.is_subset_of(p.up(z)))
        report.predicted_outcome = ImpartialOutcome::ExistsWin;
    });
  }
  if (report.is_down_set) report.equivalent_subposet = restrict(p, report.fixed_set);
  return report;
}

}  // namespace posetlab
