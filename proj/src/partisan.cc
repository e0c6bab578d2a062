#include "posetlab/partisan.h"

#include <algorithm>
#include <cctype>

#include "posetlab/error.h"

namespace posetlab {

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::P: return "P";
    case OutcomeClass::L: return "L";
    case OutcomeClass::R: return "R";
    case OutcomeClass::N: return "N";
  }
  return "?";
}

GameEngine::GameEngine(SolveBudget budget) : meter_(budget) { zero_ = intern_explicit({}, {}); }

GameId GameEngine::intern_explicit(std::vector<GameId> left, std::vector<GameId> right) {
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  auto key = std::make_pair(left, right);
  if (auto it = explicit_ids_.find(key); it != explicit_ids_.end()) return it->second;
  GameId id = static_cast<GameId>(nodes_.size());
  Node node;
  node.left = std::move(left);
  node.right = std::move(right);
  nodes_.push_back(std::move(node));
  explicit_ids_.emplace(std::move(key), id);
  return id;
}

GameId GameEngine::make(std::vector<GameId> left, std::vector<GameId> right) {
  for (auto g : left)
    if (g >= nodes_.size()) throw Error(ErrorKind::BadParams, "unknown game id");
  for (auto g : right)
    if (g >= nodes_.size()) throw Error(ErrorKind::BadParams, "unknown game id");
  return intern_explicit(std::move(left), std::move(right));
}

GameId GameEngine::star() { return intern_explicit({zero_}, {zero_}); }

GameId GameEngine::integer(std::int64_t n) {
  GameId g = zero_;
  for (std::int64_t i = 0; i < n; ++i) g = intern_explicit({g}, {});
  for (std::int64_t i = 0; i > n; --i) g = intern_explicit({}, {g});
  return g;
}

GameId GameEngine::neg(GameId g) {
  if (auto it = neg_ids_.find(g); it != neg_ids_.end()) return it->second;
  GameId result;
  if (nodes_[g].is_sum) {
    GameId a = nodes_[g].a, b = nodes_[g].b;
    result = sum(neg(a), neg(b));
  } else {
    std::vector<GameId> l, r;
    for (GameId x : std::vector<GameId>(nodes_[g].right)) l.push_back(neg(x));
    for (GameId x : std::vector<GameId>(nodes_[g].left)) r.push_back(neg(x));
    result = intern_explicit(std::move(l), std::move(r));
  }
  neg_ids_[g] = result;
  neg_ids_[result] = g;
  return result;
}

GameId GameEngine::sum(GameId g, GameId h) {
  if (g == zero_) return h;
  if (h == zero_) return g;
  auto key = std::minmax(g, h);
  if (auto it = sum_ids_.find({key.first, key.second}); it != sum_ids_.end()) return it->second;
  GameId id = static_cast<GameId>(nodes_.size());
  Node node;
  node.is_sum = true;
  node.expanded = false;
  node.a = key.first;
  node.b = key.second;
  nodes_.push_back(std::move(node));
  sum_ids_.emplace(std::make_pair(key.first, key.second), id);
  return id;
}

void GameEngine::expand(GameId g) {
  if (nodes_[g].expanded) return;
  const GameId a = nodes_[g].a, b = nodes_[g].b;
  std::vector<GameId> l, r;
  for (GameId x : left(a)) l.push_back(sum(x, b));
  for (GameId x : left(b)) l.push_back(sum(a, x));
  for (GameId x : right(a)) r.push_back(sum(x, b));
  for (GameId x : right(b)) r.push_back(sum(a, x));
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  Node& node = nodes_[g];
  node.left = std::move(l);
  node.right = std::move(r);
  node.expanded = true;
}

std::vector<GameId> GameEngine::left(GameId g) {
  expand(g);
  return nodes_[g].left;
}

std::vector<GameId> GameEngine::right(GameId g) {
  expand(g);
  return nodes_[g].right;
}

// G >= 0 iff no right option is <= 0. G <= 0 is the mirror statement, which
// equals ge_zero(neg(G)) without materializing the negation.
bool GameEngine::ge_zero(GameId g) {
  if (auto it = ge_memo_.find(g); it != ge_memo_.end()) return it->second;
  bool result = true;
  for (GameId r : right(g))
    if (le_zero(r)) {
      result = false;
      break;
    }
  ge_memo_[g] = result;
  meter_.charge();
  return result;
}

bool GameEngine::le_zero(GameId g) {
  if (auto it = le_memo_.find(g); it != le_memo_.end()) return it->second;
  bool result = true;
  for (GameId l : left(g))
    if (ge_zero(l)) {
      result = false;
      break;
    }
  le_memo_[g] = result;
  meter_.charge();
  return result;
}

OutcomeClass GameEngine::outcome_class(GameId g) {
  const bool ge = ge_zero(g), le = le_zero(g);
  if (ge && le) return OutcomeClass::P;
  if (ge) return OutcomeClass::L;
  if (le) return OutcomeClass::R;
  return OutcomeClass::N;
}

bool GameEngine::leq(GameId g, GameId h) {
  if (g == h) return true;
  if (auto it = leq_memo_.find({g, h}); it != leq_memo_.end()) return it->second;
  bool result = ge_zero(sum(h, neg(g)));
  leq_memo_[{g, h}] = result;
  return result;
}

bool GameEngine::equivalent(GameId g, GameId h) {
  return outcome_class(sum(g, neg(h))) == OutcomeClass::P;
}

GameId GameEngine::simplify(GameId g) {
  std::vector<GameId> l, r;
  for (GameId x : left(g)) l.push_back(simplify(x));
  for (GameId x : right(g)) r.push_back(simplify(x));
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  // Among equivalent options the earliest survives.
  std::vector<GameId> keep_l, keep_r;
  for (std::size_t i = 0; i < l.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < l.size() && !dominated; ++j)
      if (j != i && leq(l[i], l[j]) && (j < i || !leq(l[j], l[i]))) dominated = true;
    if (!dominated) keep_l.push_back(l[i]);
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < r.size() && !dominated; ++j)
      if (j != i && leq(r[j], r[i]) && (j < i || !leq(r[i], r[j]))) dominated = true;
    if (!dominated) keep_r.push_back(r[i]);
  }
  return intern_explicit(std::move(keep_l), std::move(keep_r));
}

bool GameEngine::is_numeric(GameId g) {
  if (auto it = numeric_memo_.find(g); it != numeric_memo_.end()) return it->second;
  auto l = left(g);
  auto r = right(g);
  bool result = true;
  for (GameId x : l) result = result && is_numeric(x);
  for (GameId x : r) result = result && is_numeric(x);
  for (GameId x : l)
    for (GameId y : r)
      if (result && !less(x, y)) result = false;
  numeric_memo_[g] = result;
  return result;
}

Dyadic GameEngine::value(GameId g) {
  if (auto it = value_memo_.find(g); it != value_memo_.end()) return it->second;
  if (!is_numeric(g)) throw Error(ErrorKind::NotNumeric, "game is not numeric: " + to_string(g));
  std::optional<Dyadic> lo, hi;
  for (GameId x : left(g)) {
    Dyadic v = value(x);
    if (!lo || *lo < v) lo = v;
  }
  for (GameId x : right(g)) {
    Dyadic v = value(x);
    if (!hi || v < *hi) hi = v;
  }
  Dyadic v = simplest_between(lo, hi);
  value_memo_[g] = v;
  return v;
}

GameId GameEngine::position_game(const Poset& p, const PointSet& position, bool impartial,
                                 absl::flat_hash_map<std::vector<std::uint64_t>, GameId>& memo) {
  std::vector<std::uint64_t> key(position.words().begin(), position.words().end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<GameId> l, r;
  position.for_each([&](std::size_t x) {
    GameId child = position_game(p, position - p.up(x), impartial, memo);
    if (impartial || p.color(x) == Color::Black) l.push_back(child);
    if (impartial || p.color(x) == Color::White) r.push_back(child);
  });
  GameId g = intern_explicit(std::move(l), std::move(r));
  memo.emplace(std::move(key), g);
  meter_.charge();
  return g;
}

GameId GameEngine::from_bw_position(const Poset& p, const PointSet& position) {
  return from_bw_positions(p, {position}).front();
}

std::vector<GameId> GameEngine::from_bw_positions(const Poset& p,
                                                  const std::vector<PointSet>& positions) {
  if (!p.empty() && !p.is_colored())
    throw Error(ErrorKind::UncoloredPoint, "black-white game needs every point colored");
  absl::flat_hash_map<std::vector<std::uint64_t>, GameId> memo;
  std::vector<GameId> out;
  for (const auto& pos : positions) {
    if (pos.universe() != p.size() || !is_down_set(p, pos))
      throw Error(ErrorKind::BadParams, "position is not a down set of the poset");
    out.push_back(position_game(p, pos, false, memo));
  }
  return out;
}

GameId GameEngine::from_bw_poset(const Poset& p) { return from_bw_position(p, p.all_points()); }

GameId GameEngine::from_impartial_poset(const Poset& p) {
  absl::flat_hash_map<std::vector<std::uint64_t>, GameId> memo;
  return position_game(p, p.all_points(), true, memo);
}

namespace {

class LiteralParser {
 public:
  LiteralParser(GameEngine& engine, std::string_view text) : engine_(engine), text_(text) {}

  GameId parse_all() {
    GameId g = parse_game();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  GameId parse_game() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      auto l = parse_list('|');
      ++pos_;
      auto r = parse_list('}');
      ++pos_;
      return engine_.make(std::move(l), std::move(r));
    }
    if (c == '*') {
      ++pos_;
      return engine_.star();
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits == "-") fail("bare '-'");
      return engine_.integer(std::stoll(digits));
    }
    fail(std::string("unexpected '") + c + "'");
    return 0;
  }

  std::vector<GameId> parse_list(char terminator) {
    std::vector<GameId> out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == terminator) return out;
    while (true) {
      out.push_back(parse_game());
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated option list");
      if (text_[pos_] == terminator) return out;
      if (text_[pos_] != ',') fail("expected ',' or terminator");
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::BadParams,
                "bad game literal at offset " + std::to_string(pos_) + ": " + why);
  }

  GameEngine& engine_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GameId GameEngine::parse(std::string_view text) { return LiteralParser(*this, text).parse_all(); }

std::string GameEngine::to_string(GameId g) {
  if (g == zero_) return "0";
  if (g == star()) return "*";
  auto l = left(g);
  auto r = right(g);
  // Integers print as themselves.
  if (r.empty() && l.size() == 1) {
    std::string inner = to_string(l[0]);
    if (!inner.empty() && std::isdigit(static_cast<unsigned char>(inner[0])) &&
        inner.find_first_not_of("0123456789") == std::string::npos)
      return std::to_string(std::stoll(inner) + 1);
  }
  if (l.empty() && r.size() == 1) {
    std::string inner = to_string(r[0]);
    if (inner == "0") return "-1";
    if (inner.size() > 1 && inner[0] == '-' &&
        inner.find_first_not_of("0123456789", 1) == std::string::npos)
      return std::to_string(std::stoll(inner) - 1);
  }
  std::string out = "{";
  for (std::size_t i = 0; i < l.size(); ++i) out += (i ? "," : "") + to_string(l[i]);
  out += "|";
  for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + to_string(r[i]);
  return out + "}";
}

std::optional<BwMove> best_move_bw(const Poset& p, Color mover) {
  GameEngine engine;
  return best_move_bw(engine, p, mover);
}

std::optional<BwMove> best_move_bw(GameEngine& engine, const Poset& p, Color mover) {
  if (!p.empty() && !p.is_colored())
    throw Error(ErrorKind::UncoloredPoint, "black-white game needs every point colored");
  std::vector<PointId> candidates;
  std::vector<PointSet> positions;
  const PointSet all = p.all_points();
  for (PointId x = 0; x < p.size(); ++x)
    if (p.color(x) == mover) {
      candidates.push_back(x);
      positions.push_back(all - p.up(x));
    }
  auto games = engine.from_bw_positions(p, positions);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    // The opponent moves next, so the mover needs a result that is weakly
    // in their favour: >= 0 for Black, <= 0 for White.
    const bool good = mover == Color::Black ? engine.ge_zero(games[i]) : engine.le_zero(games[i]);
    if (good) return BwMove{candidates[i], engine.outcome_class(games[i])};
  }
  return std::nullopt;
}

}  // namespace posetlab
