#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetlab/budget.h"
#include "posetlab/document.h"
#include "posetlab/poset.h"
#include "posetlab/reductions.h"

namespace posetlab {

// FNV-1a 64 over the canonical (HD) document text, as 16 hex digits.
std::string digest(const Poset& p);

// "3,5,7" -> {3,5,7}. Throws BadParams.
std::vector<long> parse_params(std::string_view text);

// {"outcome","grundy","winningMoves","method","positionsExplored"}
Json impartial_report(const Poset& p, SolveBudget budget);

// {"outcomeClass","value" (string or null),"bestMoves":{"black","white"},
//  "positionsExplored"}
Json bw_report(const Poset& p, SolveBudget budget);

struct MoveChoice {
  std::optional<PointId> point;
  bool winning = false;
};

// Winning move for the player to move (least index), else the least legal
// move with winning = false, else no move. `mover` is ignored for
// uncolored posets and required for colored ones.
MoveChoice choose_move(const Poset& p, std::optional<Color> mover, SolveBudget budget);

// Whether the player who just moved wins the resulting position.
bool mover_wins_after(const Poset& result, std::optional<Color> mover, SolveBudget budget);

Json tqbf_report_json(const TqbfStructureReport& r);

Color parse_color(std::string_view text);  // throws BadParams

}  // namespace posetlab
