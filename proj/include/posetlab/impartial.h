#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetlab/budget.h"
#include "posetlab/gset.h"
#include "posetlab/poset.h"

namespace posetlab {

struct SearchOptions {
  // Evaluate disconnected positions as the XOR of their components. Turning
  // this off forces a plain search over whole down sets.
  bool split_components = true;
  // A position with a least element x has g = 1 + g(position - x).
  bool strip_least = true;
};

// Exact solver for one impartial poset. Positions are down sets encoded as
// bitsets over point indices; g-numbers and win/loss flags are memoized per
// instance, so repeated queries on the same poset share work.
class ImpartialSolver {
 public:
  explicit ImpartialSolver(const Poset& p, SolveBudget budget = {}, SearchOptions options = {});
  ~ImpartialSolver();
  ImpartialSolver(ImpartialSolver&&) noexcept;
  ImpartialSolver& operator=(ImpartialSolver&&) noexcept;

  Nimber grundy();
  Nimber grundy(const PointSet& position);
  GSet gset();
  bool first_player_wins();
  bool first_player_wins(const PointSet& position);
  std::vector<PointId> winning_moves();

  std::size_t positions_explored() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Nimber grundy(const Poset& p, SolveBudget budget = {});
GSet gset(const Poset& p, SolveBudget budget = {});
std::vector<PointId> winning_moves(const Poset& p, SolveBudget budget = {});

struct OutcomeReport {
  ImpartialOutcome outcome;
  std::string method;  // "search", "articulation" or "nfree"
  std::size_t positions_explored = 0;
};

// With shortcuts, an articulation point answers ExistsWin without search and
// N-free posets go through the series-parallel g-set algorithm.
OutcomeReport outcome(const Poset& p, SolveBudget budget = {}, bool use_shortcuts = false);

struct NimMove {
  std::size_t stack;
  std::size_t new_size;
  friend bool operator==(const NimMove&, const NimMove&) = default;
};

// A move that makes the XOR of all stacks zero, at the least qualifying stack.
std::optional<NimMove> nim_best_move(std::span<const std::size_t> stacks);

using OutcomeOracle = std::function<ImpartialOutcome(const Poset&)>;

// Nonadaptive: queries P + C_i for i = 0..|P| and returns the unique i with a
// ForallWin answer. Throws OracleInconsistent otherwise.
Nimber grundy_via_outcomes(const Poset& p, const OutcomeOracle& oracle);

struct ParityUniformCertificate {
  unsigned top_parity = 0;   // p
  unsigned bottom_odd = 0;   // |B| mod 2
  unsigned top_odd = 0;      // |T| mod 2
  PointSet tops;
  PointSet part;             // one side of the bottom bipartition
  Nimber grundy = 0;
};

// Closed form for parity-uniform two-level posets. `tops` fixes the top
// level; by default the top level is the set of non-minimal points.
// Throws NotTwoLevel or NotParityUniform.
ParityUniformCertificate parity_uniform_certificate(const Poset& p,
                                                    std::optional<PointSet> tops = std::nullopt);
Nimber parity_uniform_grundy(const Poset& p, std::optional<PointSet> tops = std::nullopt);

// g of the union of levels k and k' of the Boolean lattice on n points
// (n even, 1 <= k < k' <= n, k' odd): 0 if some binary digit of k exceeds
// the corresponding digit of n, 1 otherwise.
Nimber level_sets_grundy(std::size_t n, std::size_t k, std::size_t k_odd);

}  // namespace posetlab
