#include "posetlab/impartial.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <variant>

#include "absl/container/flat_hash_map.h"
#include "posetlab/error.h"
#include "posetlab/families.h"
#include "posetlab/nfree.h"
#include "posetlab/structure.h"

namespace posetlab {

namespace {

template <std::size_t W>
using Key = std::array<std::uint64_t, W>;

template <std::size_t W>
Key<W> to_key(const PointSet& s) {
  Key<W> k{};
  auto words = s.words();
  std::copy(words.begin(), words.end(), k.begin());
  return k;
}

template <std::size_t W>
bool is_zero(const Key<W>& k) {
  for (auto w : k)
    if (w) return false;
  return true;
}

template <std::size_t W>
std::size_t popcount(const Key<W>& k) {
  std::size_t c = 0;
  for (auto w : k) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

template <std::size_t W>
bool test(const Key<W>& k, std::size_t i) {
  return (k[i >> 6] >> (i & 63)) & 1u;
}

template <std::size_t W>
Key<W> and_not(const Key<W>& a, const Key<W>& b) {
  Key<W> r;
  for (std::size_t i = 0; i < W; ++i) r[i] = a[i] & ~b[i];
  return r;
}

template <std::size_t W, typename F>
void for_each_bit(const Key<W>& k, F&& f) {
  for (std::size_t w = 0; w < W; ++w) {
    std::uint64_t bits = k[w];
    while (bits) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

template <std::size_t W>
class Engine {
 public:
  Engine(const Poset& p, SolveBudget budget, SearchOptions options)
      : options_(options), meter_(budget) {
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
      up_.push_back(to_key<W>(p.up(x)));
      comparable_.push_back(to_key<W>(p.up(x) | p.down(x)));
      order_.push_back(x);
    }
    // Largest up-sets first: those moves shrink the position the most.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return p.up(a).count() > p.up(b).count();
    });
    full_ = to_key<W>(p.all_points());
  }

  const Key<W>& full() const { return full_; }
  const Key<W>& up(std::size_t x) const { return up_[x]; }
  std::size_t explored() const { return meter_.explored(); }

  Nimber grundy(const Key<W>& pos) {
    const std::size_t count = popcount<W>(pos);
    if (count == 0) return 0;
    if (count == 1) return 1;
    if (auto it = grundy_memo_.find(pos); it != grundy_memo_.end()) return it->second;

    Nimber g = 0;
    auto comps = options_.split_components ? components(pos) : std::vector<Key<W>>{};
    const auto least = options_.strip_least && comps.size() <= 1 ? least_element(pos) : std::nullopt;
    if (least) {
      Key<W> rest = pos;
      rest[*least >> 6] &= ~(std::uint64_t{1} << (*least & 63));
      g = 1 + grundy(rest);
    } else if (comps.size() > 1) {
      for (const auto& c : comps) g ^= grundy(c);
    } else {
      // Options of a position of size c have g-numbers at most c - 1.
      std::vector<char> seen(count + 1, 0);
      for (std::size_t x : order_) {
        if (!test<W>(pos, x)) continue;
        seen[grundy(and_not<W>(pos, up_[x]))] = 1;
      }
      while (seen[g]) ++g;
    }
    grundy_memo_.emplace(pos, static_cast<std::uint32_t>(g));
    meter_.charge();
    return g;
  }

  bool wins(const Key<W>& pos) {
    const std::size_t count = popcount<W>(pos);
    if (count == 0) return false;
    if (count == 1) return true;
    if (auto it = grundy_memo_.find(pos); it != grundy_memo_.end()) return it->second != 0;
    if (auto it = win_memo_.find(pos); it != win_memo_.end()) return it->second;

    bool result = false;
    auto comps = options_.split_components ? components(pos) : std::vector<Key<W>>{};
    if (options_.strip_least && comps.size() <= 1 && least_element(pos)) {
      result = true;
    } else if (comps.size() > 1) {
      Nimber g = 0;
      for (const auto& c : comps) g ^= grundy(c);
      result = g != 0;
    } else {
      for (std::size_t x : order_) {
        if (!test<W>(pos, x)) continue;
        if (!wins(and_not<W>(pos, up_[x]))) {
          result = true;
          break;
        }
      }
    }
    win_memo_.emplace(pos, result);
    meter_.charge();
    return result;
  }

 private:
  std::optional<std::size_t> least_element(const Key<W>& pos) const {
    std::optional<std::size_t> found;
    for_each_bit<W>(pos, [&](std::size_t x) {
      if (!found && is_zero<W>(and_not<W>(pos, up_[x]))) found = x;
    });
    return found;
  }

  std::vector<Key<W>> components(const Key<W>& pos) const {
    std::vector<Key<W>> out;
    Key<W> rest = pos;
    while (!is_zero<W>(rest)) {
      Key<W> comp{};
      for (std::size_t w = 0; w < W; ++w)
        if (rest[w]) {
          comp[w] = rest[w] & (~rest[w] + 1);
          break;
        }
      Key<W> frontier = comp;
      while (!is_zero<W>(frontier)) {
        Key<W> reach{};
        for_each_bit<W>(frontier, [&](std::size_t x) {
          for (std::size_t w = 0; w < W; ++w) reach[w] |= comparable_[x][w];
        });
        for (std::size_t w = 0; w < W; ++w) {
          frontier[w] = reach[w] & rest[w] & ~comp[w];
          comp[w] |= frontier[w];
        }
      }
      out.push_back(comp);
      rest = and_not<W>(rest, comp);
    }
    return out;
  }

  SearchOptions options_;
  BudgetMeter meter_;
  std::vector<Key<W>> up_;
  std::vector<Key<W>> comparable_;
  std::vector<std::size_t> order_;
  Key<W> full_{};
  absl::flat_hash_map<Key<W>, std::uint32_t> grundy_memo_;
  absl::flat_hash_map<Key<W>, bool> win_memo_;
};

using AnyEngine = std::variant<Engine<1>, Engine<2>, Engine<4>, Engine<8>, Engine<16>>;

AnyEngine make_engine(const Poset& p, SolveBudget budget, SearchOptions options) {
  const std::size_t n = p.size();
  if (n <= 64) return AnyEngine(std::in_place_type<Engine<1>>, p, budget, options);
  if (n <= 128) return AnyEngine(std::in_place_type<Engine<2>>, p, budget, options);
  if (n <= 256) return AnyEngine(std::in_place_type<Engine<4>>, p, budget, options);
  if (n <= 512) return AnyEngine(std::in_place_type<Engine<8>>, p, budget, options);
  if (n <= 1024) return AnyEngine(std::in_place_type<Engine<16>>, p, budget, options);
  throw Error(ErrorKind::BadParams, "impartial search supports at most 1024 points");
}

void require_impartial(const Poset& p) {
  if (p.is_colored()) throw Error(ErrorKind::ColoredInput, "impartial solver needs an uncolored poset");
}

}  // namespace

struct ImpartialSolver::Impl {
  Impl(const Poset& p, SolveBudget budget, SearchOptions options)
      : poset(p), engine(make_engine(p, budget, options)) {}
  Poset poset;
  AnyEngine engine;
};

ImpartialSolver::ImpartialSolver(const Poset& p, SolveBudget budget, SearchOptions options) {
  require_impartial(p);
  impl_ = std::make_unique<Impl>(p, budget, options);
}
ImpartialSolver::~ImpartialSolver() = default;
ImpartialSolver::ImpartialSolver(ImpartialSolver&&) noexcept = default;
ImpartialSolver& ImpartialSolver::operator=(ImpartialSolver&&) noexcept = default;

Nimber ImpartialSolver::grundy() {
  return std::visit([](auto& e) { return e.grundy(e.full()); }, impl_->engine);
}

Nimber ImpartialSolver::grundy(const PointSet& position) {
  return std::visit(
      [&](auto& e) {
        constexpr std::size_t W = std::tuple_size_v<std::decay_t<decltype(e.full())>>;
        return e.grundy(to_key<W>(position));
      },
      impl_->engine);
}

GSet ImpartialSolver::gset() {
  return std::visit(
      [&](auto& e) {
        GSet out;
        for (PointId x = 0; x < impl_->poset.size(); ++x) out.insert(e.grundy(and_not(e.full(), e.up(x))));
        return out;
      },
      impl_->engine);
}

bool ImpartialSolver::first_player_wins() {
  return std::visit([](auto& e) { return e.wins(e.full()); }, impl_->engine);
}

bool ImpartialSolver::first_player_wins(const PointSet& position) {
  return std::visit(
      [&](auto& e) {
        constexpr std::size_t W = std::tuple_size_v<std::decay_t<decltype(e.full())>>;
        return e.wins(to_key<W>(position));
      },
      impl_->engine);
}

std::vector<PointId> ImpartialSolver::winning_moves() {
  return std::visit(
      [&](auto& e) {
        std::vector<PointId> out;
        for (PointId x = 0; x < impl_->poset.size(); ++x)
          if (!e.wins(and_not(e.full(), e.up(x)))) out.push_back(x);
        return out;
      },
      impl_->engine);
}

std::size_t ImpartialSolver::positions_explored() const {
  return std::visit([](const auto& e) { return e.explored(); }, impl_->engine);
}

Nimber grundy(const Poset& p, SolveBudget budget) { return ImpartialSolver(p, budget).grundy(); }

GSet gset(const Poset& p, SolveBudget budget) { return ImpartialSolver(p, budget).gset(); }

std::vector<PointId> winning_moves(const Poset& p, SolveBudget budget) {
  return ImpartialSolver(p, budget).winning_moves();
}

OutcomeReport outcome(const Poset& p, SolveBudget budget, bool use_shortcuts) {
  require_impartial(p);
  if (use_shortcuts) {
    if (articulation_point(p)) return {ImpartialOutcome::ExistsWin, "articulation", 0};
    if (!p.empty() && !find_n(p)) {
      Nimber g = grundy_nfree(p);
      return {g ? ImpartialOutcome::ExistsWin : ImpartialOutcome::ForallWin, "nfree", 0};
    }
  }
  ImpartialSolver solver(p, budget);
  bool win = solver.first_player_wins();
  return {win ? ImpartialOutcome::ExistsWin : ImpartialOutcome::ForallWin, "search",
          solver.positions_explored()};
}

std::optional<NimMove> nim_best_move(std::span<const std::size_t> stacks) {
  std::size_t total = 0;
  for (auto s : stacks) total ^= s;
  if (total == 0) return std::nullopt;
  for (std::size_t j = 0; j < stacks.size(); ++j)
    if ((stacks[j] ^ total) < stacks[j]) return NimMove{j, stacks[j] ^ total};
  return std::nullopt;  // unreachable: the top bit of total is set in some stack
}

Nimber grundy_via_outcomes(const Poset& p, const OutcomeOracle& oracle) {
  std::optional<Nimber> answer;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    if (oracle(parallel(p, chain(i))) == ImpartialOutcome::ForallWin) {
      if (answer)
        throw Error(ErrorKind::OracleInconsistent, "oracle reported more than one ForallWin sum");
      answer = i;
    }
  }
  if (!answer) throw Error(ErrorKind::OracleInconsistent, "oracle reported no ForallWin sum");
  return *answer;
}

ParityUniformCertificate parity_uniform_certificate(const Poset& p, std::optional<PointSet> tops) {
  const std::size_t n = p.size();
  PointSet top_set(n);
  if (tops) {
    if (tops->universe() != n) throw Error(ErrorKind::BadParams, "top set has the wrong universe");
    top_set = *tops;
  } else {
    for (PointId x = 0; x < n; ++x)
      if (p.down(x).count() > 1) top_set.set(x);
  }
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (p.less(x, y) && (top_set.test(x) || !top_set.test(y)))
        throw Error(ErrorKind::NotTwoLevel, "relation " + p.label(x) + " < " + p.label(y) +
                                                " does not go from bottom to top");

  PointSet bottoms = p.all_points() - top_set;
  std::vector<PointId> bottom_ids = bottoms.to_vector();
  std::vector<PointId> top_ids = top_set.to_vector();

  ParityUniformCertificate cert;
  cert.tops = top_set;
  cert.bottom_odd = bottom_ids.size() % 2;
  cert.top_odd = top_ids.size() % 2;
  cert.part = PointSet(n);

  if (!top_ids.empty()) {
    const unsigned parity = (p.down(top_ids[0]).count() - 1) % 2;
    for (auto t : top_ids)
      if ((p.down(t).count() - 1) % 2 != parity)
        throw Error(ErrorKind::NotParityUniform, "top degrees differ in parity");
    cert.top_parity = parity;
    if (parity == 1) {
      // Every top has an odd number of neighbours among all bottoms.
      cert.part = bottoms;
    } else {
      // Solve A s = 1 over GF(2): rows are tops, columns are bottoms.
      const std::size_t cols = bottom_ids.size();
      std::vector<PointSet> rows;
      for (auto t : top_ids) {
        PointSet row(cols + 1);
        for (std::size_t c = 0; c < cols; ++c)
          if (p.less(bottom_ids[c], t)) row.set(c);
        row.set(cols);
        rows.push_back(row);
      }
      std::vector<std::size_t> pivot_col;
      std::size_t rank = 0;
      for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && !rows[r].test(c)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (i != rank && rows[i].test(c)) {
            for (std::size_t w = 0; w <= cols; ++w)
              if (rows[rank].test(w)) rows[i].test(w) ? rows[i].reset(w) : rows[i].set(w);
          }
        pivot_col.push_back(c);
        ++rank;
      }
      for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].test(cols))
          throw Error(ErrorKind::NotParityUniform,
                      "no bottom bipartition gives every top an odd side");
      for (std::size_t r = 0; r < rank; ++r)
        if (rows[r].test(cols)) cert.part.set(bottom_ids[pivot_col[r]]);
    }
  }
  cert.grundy = cert.bottom_odd ^ (cert.top_odd * (cert.top_parity ^ 2u));
  return cert;
}

Nimber parity_uniform_grundy(const Poset& p, std::optional<PointSet> tops) {
  return parity_uniform_certificate(p, std::move(tops)).grundy;
}

Nimber level_sets_grundy(std::size_t n, std::size_t k, std::size_t k_odd) {
  if (n == 0 || n % 2 != 0) throw Error(ErrorKind::BadParams, "n must be positive and even");
  if (k < 1 || k >= k_odd || k_odd > n || k_odd % 2 == 0)
    throw Error(ErrorKind::BadParams, "need 1 <= k < k' <= n with k' odd");
  // The fixed sets of the pair-swapping involution number C(n/2, k/2) for
  // even k and none for odd k; by Lucas that count is odd iff k's binary
  // digits are a subset of n's.
  return (k & ~n) == 0 ? 1 : 0;
}

}  // namespace posetlab
