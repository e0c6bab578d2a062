#include "posetlab/analysis.h"

#include <charconv>
#include <cstdio>

#include "posetlab/error.h"
#include "posetlab/impartial.h"
#include "posetlab/nfree.h"
#include "posetlab/partisan.h"

namespace posetlab {

namespace {

Json labels(const Poset& p, const std::vector<PointId>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(p.label(x));
  return out;
}

}  // namespace

std::string digest(const Poset& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : poset_to_json(p).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<long> parse_params(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view part = text.substr(start, comma - start);
    long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw Error(ErrorKind::BadParams, "bad parameter list '" + std::string(text) + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

Json impartial_report(const Poset& p, SolveBudget budget) {
  if (p.is_colored()) throw Error(ErrorKind::ColoredInput, "expected an uncolored poset");
  Json r;
  if (!p.empty() && !find_n(p)) {
    // Every down set of an N-free poset is N-free.
    const Nimber g = grundy_nfree(p);
    std::vector<PointId> wins;
    if (g != 0)
      for (PointId x = 0; x < p.size(); ++x)
        if (grundy_nfree(play(p, x)) == 0) wins.push_back(x);
    r["grundy"] = g;
    r["winningMoves"] = labels(p, wins);
    r["method"] = "nfree";
    r["positionsExplored"] = 0;
  } else {
    ImpartialSolver solver(p, budget);
    const Nimber g = solver.grundy();
    r["grundy"] = g;
    r["winningMoves"] = labels(p, solver.winning_moves());
    r["method"] = "search";
    r["positionsExplored"] = solver.positions_explored();
  }
  r["outcome"] = r["grundy"].get<Nimber>() != 0 ? "exists" : "forall";
  return r;
}

Json bw_report(const Poset& p, SolveBudget budget) {
  if (!p.is_colored() && !p.empty()) throw Error(ErrorKind::UncoloredPoint, "expected a black-white poset");
  GameEngine e(budget);
  const GameId g = e.from_bw_poset(p);
  Json r;
  r["outcomeClass"] = std::string(to_string(e.outcome_class(g)));
  r["value"] = e.is_numeric(g) ? Json(e.value(g).to_string()) : Json(nullptr);
  auto b = best_move_bw(e, p, Color::Black);
  auto w = best_move_bw(e, p, Color::White);
  auto label_or_null = [&](const std::optional<BwMove>& m) { return m ? Json(p.label(m->point)) : Json(nullptr); };
  r["bestMoves"] = {{"black", label_or_null(b)}, {"white", label_or_null(w)}};
  r["positionsExplored"] = e.positions_explored();
  return r;
}

MoveChoice choose_move(const Poset& p, std::optional<Color> mover, SolveBudget budget) {
  if (p.is_colored()) {
    if (!mover) throw Error(ErrorKind::BadParams, "toMove is required for black-white posets");
    if (auto m = best_move_bw(p, *mover)) return {m->point, true};
    for (PointId x = 0; x < p.size(); ++x)
      if (p.color(x) == *mover) return {x, false};
    return {};
  }
  if (p.empty()) return {};
  ImpartialSolver solver(p, budget);
  auto wins = solver.winning_moves();
  if (!wins.empty()) return {wins.front(), true};
  return {PointId{0}, false};
}

bool mover_wins_after(const Poset& result, std::optional<Color> mover, SolveBudget budget) {
  if (result.is_colored() || (result.empty() && mover)) {
    if (!mover) throw Error(ErrorKind::BadParams, "toMove is required for black-white posets");
    GameEngine e(budget);
    // The mover is now second to play: Black wins iff the result is >= 0.
    const GameId g = e.from_bw_poset(result);
    return *mover == Color::Black ? e.ge_zero(g) : e.le_zero(g);
  }
  return !ImpartialSolver(result, budget).first_player_wins();
}

Json tqbf_report_json(const TqbfStructureReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"M", r.M},
          {"waitingCounts", r.waiting_counts},
          {"choiceNodes", r.choice_nodes},
          {"antiCheatNodes", r.anti_cheat_nodes},
          {"clauseNodes", r.clause_nodes},
          {"dummyNodes", r.dummy_nodes},
          {"interruptNodes", r.interrupt_nodes},
          {"balanceNodes", r.balance_nodes},
          {"total", r.total}};
}

Color parse_color(std::string_view text) {
  if (text == "black") return Color::Black;
  if (text == "white") return Color::White;
  throw Error(ErrorKind::BadParams, "color must be 'black' or 'white'");
}

}  // namespace posetlab
