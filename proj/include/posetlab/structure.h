#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "posetlab/poset.h"

namespace posetlab {

// Size of a maximum antichain (Dilworth: n minus a maximum matching in the
// strict comparability bipartite graph).
std::size_t width(const Poset& p);

// Least-index point comparable with every other point, if any.
std::optional<PointId> articulation_point(const Poset& p);

using Involution = std::vector<PointId>;

struct SymmetryReport {
  PointSet fixed_set;
  bool is_down_set = false;
  std::optional<ImpartialOutcome> predicted_outcome;
  // Present iff the fixed set is a down set; has the same g-number as P.
  std::optional<Poset> equivalent_subposet;
};

// Throws NotInvolution or NotOrderPreserving when `phi` is not an
// order automorphism of period two.
SymmetryReport symmetry_analysis(const Poset& p, std::span<const PointId> phi);

}  // namespace posetlab
