#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "posetlab/budget.h"
#include "posetlab/dyadic.h"
#include "posetlab/poset.h"

namespace posetlab {

enum class OutcomeClass { P, L, R, N };
std::string_view to_string(OutcomeClass c);

using GameId = std::uint32_t;

// Arena of hash-consed partisan games plus the memo tables for the order
// relation, numeric checks and values. Structurally equal explicit games
// share one id. Sums are kept symbolic and expanded only when their options
// are enumerated. One engine belongs to one thread at a time.
class GameEngine {
 public:
  // The budget is charged once per new position game and per order query.
  explicit GameEngine(SolveBudget budget = {});

  GameId zero() const { return zero_; }
  GameId star();
  GameId integer(std::int64_t n);
  GameId make(std::vector<GameId> left, std::vector<GameId> right);

  GameId neg(GameId g);
  GameId sum(GameId g, GameId h);

  std::vector<GameId> left(GameId g);
  std::vector<GameId> right(GameId g);

  bool ge_zero(GameId g);
  bool le_zero(GameId g);
  OutcomeClass outcome_class(GameId g);
  bool leq(GameId g, GameId h);
  bool less(GameId g, GameId h) { return leq(g, h) && !leq(h, g); }
  bool equivalent(GameId g, GameId h);

  // Removes dominated options on both sides, recursively.
  GameId simplify(GameId g);
  bool is_numeric(GameId g);
  Dyadic value(GameId g);  // throws NotNumeric

  // Black moves are Left options, White moves are Right options.
  GameId from_bw_poset(const Poset& p);
  GameId from_bw_position(const Poset& p, const PointSet& position);
  // Several positions of one poset, sharing the position memo.
  std::vector<GameId> from_bw_positions(const Poset& p, const std::vector<PointSet>& positions);
  // Both players may take any point.
  GameId from_impartial_poset(const Poset& p);

  // Literal syntax: `{a,b|c}` with `0`, `*` and integers as atoms.
  GameId parse(std::string_view text);
  std::string to_string(GameId g);

  std::size_t size() const { return nodes_.size(); }
  std::size_t positions_explored() const { return meter_.explored(); }

 private:
  struct Node {
    bool is_sum = false;
    bool expanded = true;
    GameId a = 0, b = 0;  // summands when is_sum
    std::vector<GameId> left, right;
  };

  GameId intern_explicit(std::vector<GameId> left, std::vector<GameId> right);
  void expand(GameId g);
  GameId position_game(const Poset& p, const PointSet& position, bool impartial,
                       absl::flat_hash_map<std::vector<std::uint64_t>, GameId>& memo);

  std::vector<Node> nodes_;
  absl::flat_hash_map<std::pair<std::vector<GameId>, std::vector<GameId>>, GameId> explicit_ids_;
  absl::flat_hash_map<std::pair<GameId, GameId>, GameId> sum_ids_;
  absl::flat_hash_map<GameId, GameId> neg_ids_;
  absl::flat_hash_map<GameId, bool> ge_memo_, le_memo_, numeric_memo_;
  absl::flat_hash_map<GameId, Dyadic> value_memo_;
  absl::flat_hash_map<std::pair<GameId, GameId>, bool> leq_memo_;
  GameId zero_ = 0;
  BudgetMeter meter_;
};

struct BwMove {
  PointId point;
  OutcomeClass after;
};

// A point of the mover's color leaving a position >= 0 (Black) or <= 0
// (White); least index wins ties. nullopt if every move loses.
std::optional<BwMove> best_move_bw(const Poset& p, Color mover);
std::optional<BwMove> best_move_bw(GameEngine& engine, const Poset& p, Color mover);

}  // namespace posetlab
