// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.h"
#include "posetlab/constructions.h"
#include "posetlab/error.h"
#include "posetlab/families.h"
#include "posetlab/impartial.h"
#include "posetlab/nfree.h"
#include "posetlab/partisan.h"
#include "posetlab/random.h"
#include "posetlab/reductions.h"

using namespace posetlab;
using testing_util::naive_grundy;

namespace posetlab {
std::ostream& operator<<(std::ostream& o, const Dyadic& d) { return o << d.to_string(); }
std::ostream& operator<<(std::ostream& o, OutcomeClass c) { return o << to_string(c); }
}  // namespace posetlab

namespace {

// Collects failures; the first few are kept for the report line.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what());
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    expect(got == want, [&] {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      return s.str();
    });
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::string notes() const {
    std::string s;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

bool exists_win(const Poset& p) { return outcome(p).outcome == ImpartialOutcome::ExistsWin; }

std::string describe(const Poset& p) {
  std::string s = std::to_string(p.size()) + " points, covers";
  for (auto [lo, hi] : p.covers()) s += " " + p.label(lo) + "<" + p.label(hi);
  return s;
}

// ---- 1
void closed_forms(Check& c) {
  for (std::size_t n = 1; n <= 50; ++n) {
    c.equal(grundy(chain(n)), n, "g(C_" + std::to_string(n) + ")");
    c.equal(grundy(antichain(n)), n % 2, "g(A_" + std::to_string(n) + ")");
    c.equal(grundy(v_poset(n)), n % 2 + 1, "g(V_" + std::to_string(n) + ")");
  }
  c.equal(grundy(diamond(2)), 3u, "g(diamond_2)");
}

// ---- 2
void sprague_grundy(Check& c) {
  Rng rng(1002);
  std::uniform_int_distribution<std::size_t> size(0, 9);
  for (int i = 0; i < 200; ++i) {
    Poset p = random_poset(rng, size(rng), 0.3), q = random_poset(rng, size(rng), 0.3);
    ImpartialSolver whole(parallel(p, q), SolveBudget{}, SearchOptions{.split_components = false, .strip_least = false});
    c.equal(whole.grundy(), naive_grundy(p) ^ naive_grundy(q), "g(P+Q) vs g(P) xor g(Q), " + describe(p));
  }
}

// ---- 3
void series_chain(Check& c) {
  Rng rng(1003);
  std::uniform_int_distribution<std::size_t> size(0, 10), len(0, 8);
  for (int i = 0; i < 100; ++i) {
    Poset p = random_poset(rng, size(rng), 0.3);
    const std::size_t k = len(rng);
    ImpartialSolver plain(series(p, chain(k)), SolveBudget{}, SearchOptions{.strip_least = false});
    c.equal(plain.grundy(), naive_grundy(p) + k, "g(P/C_" + std::to_string(k) + "), " + describe(p));
  }
}

// ---- 4
template <typename F>
void for_each_natural_poset(std::size_t n, F&& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<PointSet> up(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) up[pairs[b].first].set(pairs[b].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (up[i].test(j) && !up[j].is_subset_of(up[i])) transitive = false;
    if (transitive) f(Poset::from_up_sets(labels, std::vector<std::optional<Color>>(n), up));
  }
}

// Brute-force N search straight from the definition.
bool has_n(const Poset& p) {
  const std::size_t n = p.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId cc = 0; cc < n; ++cc)
        for (PointId d = 0; d < n; ++d)
          if (p.less(a, b) && p.less(cc, d) && p.less(cc, b) && !p.comparable(a, cc) && !p.comparable(a, d) &&
              !p.comparable(b, d))
            return true;
  return false;
}

void nfree(Check& c) {
  Rng rng(1004);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int i = 0; i < 100; ++i) {
    Poset p = shuffled(rng, evaluate(random_sp_tree(rng, size(rng))));
    ImpartialSolver brute(p, SolveBudget{200'000'000, 600'000});
    c.equal(grundy_nfree(p), brute.grundy(), "grundy_nfree vs search, " + describe(p));
  }
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_natural_poset(n, [&](const Poset& p) {
      ++count;
      const bool n_free = !has_n(p);
      c.expect(find_n(p).has_value() != n_free, [&] { return "find_n wrong on " + describe(p); });
      bool decomposed = true;
      try {
        SPTree t = decompose(p);
        Poset back = evaluate(t, &p.labels());
        for (PointId x = 0; x < p.size(); ++x)
          for (PointId y = 0; y < p.size(); ++y)
            c.expect(back.leq(back.index_of(p.label(x)), back.index_of(p.label(y))) == p.leq(x, y),
                     [&] { return "decompose changed the order of " + describe(p); });
        c.equal(grundy_nfree(p), naive_grundy(p), "grundy_nfree, " + describe(p));
      } catch (const NotNFree&) {
        decomposed = false;
      }
      c.expect(decomposed == n_free, [&] { return "decompose disagrees with N search on " + describe(p); });
    });
  c.expect(count == 1 + 2 + 7 + 40 + 357 + 4824, [&] { return "enumerated " + std::to_string(count) + " posets"; });
}

// ---- 5
void parity_uniform(Check& c) {
  Rng rng(1005);
  std::size_t uniform = 0;
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<std::size_t> bsize(1, 8);
    const std::size_t nb = bsize(rng);
    std::uniform_int_distribution<std::size_t> tsize(1, 10 - nb);
    const std::size_t nt = tsize(rng);
    const std::size_t n = nb + nt;
    // Every other graph has its top degrees pushed to one parity.
    const bool force = i % 2 == 0;
    const unsigned forced = static_cast<unsigned>(rng() & 1);
    std::vector<std::uint32_t> nbr(nt);
    std::bernoulli_distribution edge(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, nb - 1);
    for (auto& m : nbr) {
      for (std::size_t b = 0; b < nb; ++b)
        if (edge(rng)) m |= 1u << b;
      if (force && static_cast<unsigned>(std::popcount(m) & 1) != forced) m ^= 1u << pick(rng);
    }
    std::vector<std::string> labels;
    std::vector<PointSet> up(n, PointSet(n));
    for (std::size_t b = 0; b < nb; ++b) labels.push_back("b" + std::to_string(b));
    for (std::size_t t = 0; t < nt; ++t) labels.push_back("t" + std::to_string(t));
    PointSet tops(n);
    for (std::size_t x = 0; x < n; ++x) up[x].set(x);
    for (std::size_t t = 0; t < nt; ++t) {
      tops.set(nb + t);
      for (std::size_t b = 0; b < nb; ++b)
        if ((nbr[t] >> b) & 1) up[b].set(nb + t);
    }
    Poset p = Poset::from_up_sets(labels, std::vector<std::optional<Color>>(n), up);

    // Definition, checked over every bottom bipartition.
    const unsigned par = static_cast<unsigned>(std::popcount(nbr[0]) & 1);
    bool same_parity = std::all_of(nbr.begin(), nbr.end(), [&](auto m) { return (std::popcount(m) & 1) == par; });
    bool split = false;
    for (std::uint32_t s = 0; s < (1u << nb) && !split; ++s) {
      const std::uint32_t rest = ((1u << nb) - 1) & ~s;
      split = std::all_of(nbr.begin(), nbr.end(),
                          [&](auto m) { return (std::popcount(m & s) & 1) || (std::popcount(m & rest) & 1); });
    }
    const bool is_uniform = same_parity && split;
    try {
      const Nimber g = parity_uniform_grundy(p, tops);
      c.expect(is_uniform, [&] { return "formula accepted a non-parity-uniform poset: " + describe(p); });
      c.equal(g, naive_grundy(p), "parity-uniform formula, " + describe(p));
      const Nimber closed = (nb % 2) ^ ((nt % 2) * (par ^ 2));
      c.equal(g, closed, "b xor t(p xor 2), " + describe(p));
      ++uniform;
    } catch (const Error& e) {
      c.expect(!is_uniform && e.kind() == ErrorKind::NotParityUniform,
               [&] { return std::string("rejected a parity-uniform poset: ") + e.what(); });
    }
  }
  c.expect(uniform >= 100, [&] { return "only " + std::to_string(uniform) + " parity-uniform samples"; });
}

// ---- 6
void level_sets(Check& c) {
  for (std::size_t n : {4u, 6u})
    for (std::size_t kk = 1; kk <= n; kk += 2)
      for (std::size_t k = 1; k < kk; ++k) {
        std::vector<std::size_t> ks{k, kk};
        const std::string tag = "levels(" + std::to_string(n) + ";" + std::to_string(k) + "," + std::to_string(kk) + ")";
        c.equal(level_sets_grundy(n, k, kk), grundy(levels(n, ks)), tag);
      }
}

// ---- 7
void flip_threshold(Check& c) {
  Rng rng(1007);
  std::uniform_int_distribution<std::size_t> fsize(0, 12), tsize(0, 10), tdist(1, 16);
  for (int i = 0; i < 100; ++i) {
    Poset a = random_poset(rng, fsize(rng), 0.3);
    const Nimber ga = naive_grundy(a);
    const std::size_t k = threshold_k(a.size(), 1);
    Poset f = flip(a);
    c.equal(grundy(f), ga == 0 ? (std::size_t{2} << k) : 0, "g(flip A), " + describe(a));
    c.equal(exists_win(f), ga == 0, "outcome(flip A) flips, " + describe(a));
    if (!a.empty()) c.expect(f.size() <= 6 * a.size(), [&] { return "flip too large for " + describe(a); });
  }
  for (int i = 0; i < 100; ++i) {
    Poset a = random_poset(rng, tsize(rng), 0.3);
    const std::size_t t = tdist(rng);
    const std::size_t k = threshold_k(a.size(), t);
    c.equal(grundy(threshold(a, t)), naive_grundy(a) < t ? (std::size_t{2} << k) : 0,
            "g(threshold(A," + std::to_string(t) + ")), " + describe(a));
  }
}

// ---- 8
void grundy_from_outcomes(Check& c) {
  Rng rng(1008);
  std::uniform_int_distribution<std::size_t> size(0, 10);
  std::size_t queries = 0;
  OutcomeOracle oracle = [&](const Poset& q) {
    ++queries;
    return ImpartialSolver(q).first_player_wins() ? ImpartialOutcome::ExistsWin : ImpartialOutcome::ForallWin;
  };
  for (int i = 0; i < 100; ++i) {
    Poset p = random_poset(rng, size(rng), 0.3);
    const Nimber want = naive_grundy(p);
    queries = 0;
    c.equal(grundy_via_outcomes(p, oracle), want, "nonadaptive, " + describe(p));
    c.equal(queries, p.size() + 1, "nonadaptive query count");
    const std::size_t bits = std::max<std::size_t>(1, std::bit_width(p.size()));
    std::vector<std::size_t> asked;
    queries = 0;
    c.equal(grundy_via_threshold(p, oracle, bits, &asked), want, "adaptive, " + describe(p));
    c.equal(queries, bits, "adaptive query count");
    c.equal(asked.size(), bits, "adaptive query log");
  }
}

// ---- 9
void partisan_kernel(Check& c) {
  GameEngine e;
  c.equal(e.outcome_class(e.zero()), OutcomeClass::P, "o(0)");
  c.equal(e.outcome_class(e.integer(1)), OutcomeClass::L, "o(1)");
  c.equal(e.outcome_class(e.integer(-1)), OutcomeClass::R, "o(-1)");
  c.equal(e.outcome_class(e.star()), OutcomeClass::N, "o(*)");
  c.equal(e.outcome_class(e.sum(e.integer(2), e.neg(e.integer(1)))), OutcomeClass::L, "o(2-1)");
  const GameId half = e.make({e.zero()}, {e.integer(1)});
  c.equal(e.value(half), Dyadic(1, 1), "v({0|1})");
  c.expect(e.equivalent(e.sum(half, half), e.integer(1)), [] { return std::string("h+h != 1"); });

  Rng rng(1009);
  for (int i = 0; i < 100; ++i) {
    const GameId g = random_game(e, rng, 1 + i % 4);
    c.expect(e.outcome_class(e.sum(g, e.neg(g))) == OutcomeClass::P,
             [&] { return "G-G not zero for " + e.to_string(g); });
  }
  for (int i = 0; i < 100; ++i) {
    const GameId g = random_numeric_game(e, rng, 1 + i % 4), h = random_numeric_game(e, rng, 1 + (i / 4) % 4);
    const Dyadic vg = e.value(g), vh = e.value(h);
    c.equal(e.value(e.sum(g, h)), vg + vh, "v(G+H)");
    c.equal(e.leq(g, h), vg <= vh, "order vs values for " + e.to_string(g) + " and " + e.to_string(h));
    c.equal(e.equivalent(g, h), vg == vh, "equivalence vs values");
  }
}

// ---- 10
Poset colored(const Poset& p, const std::function<Color(PointId)>& color) {
  std::vector<Color> cs;
  for (PointId x = 0; x < p.size(); ++x) cs.push_back(color(x));
  return with_colors(p, cs);
}

PointSet set_of(std::size_t n, const std::vector<PointId>& xs) {
  PointSet s(n);
  for (auto x : xs) s.set(x);
  return s;
}

void bw_figures(Check& c) {
  GameEngine e;
  for (std::size_t k = 1; k <= 6; ++k) {
    Poset up = series(chain(1), antichain(k));  // k below one
    Poset bw = colored(up, [&](PointId x) { return up.down(x).count() > 1 ? Color::White : Color::Black; });
    c.equal(e.value(e.from_bw_poset(bw)), Dyadic(static_cast<std::int64_t>(2 * k - 1), 1),
            "k blacks under a white, k=" + std::to_string(k));
    Poset down = series(antichain(k), chain(1));  // one below k
    Poset wb = colored(down, [&](PointId x) { return down.up(x).count() > 1 ? Color::Black : Color::White; });
    c.equal(e.value(e.from_bw_poset(wb)), Dyadic(1, static_cast<unsigned>(k)),
            "a black under k whites, k=" + std::to_string(k));
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    Rng rng(1010 + n);
    TqbfGadget g = tqbf_to_bwposet(random_qbf(rng, n, n + 1));
    const Poset& p = g.poset;
    Poset bal = restrict(p, set_of(p.size(), g.report.balance_section));
    c.equal(e.value(e.from_bw_poset(bal)), Dyadic(15, 1), "balance section");
    for (std::size_t i = 1; i <= 2 * n + 1; ++i) {
      Poset stack = restrict(p, set_of(p.size(), g.report.stacks[i - 1]));
      const std::int64_t sign = i % 2 == 1 ? -1 : 1;
      const std::string si = std::to_string(i);
      for (std::size_t b = 0; b < 8; ++b) {
        const std::string bits{char('0' + (b >> 2)), char('0' + ((b >> 1) & 1)), char('0' + (b & 1))};
        Poset rest = play(stack, stack.index_of("z" + si + "." + bits));
        const auto anti = rest.find("alpha" + si) ? rest.find("alpha" + si) : rest.find("beta" + si);
        c.equal(rest.size(), std::size_t{7} + (anti ? 1 : 0), "stack remnant size");
        if (anti) {
          c.equal(e.value(e.from_bw_poset(rest)), Dyadic(sign * 13, 1), "stack " + si + " remnant with anti-cheat");
          c.equal(e.value(e.from_bw_poset(play(rest, *anti))), Dyadic(sign * 7), "stack " + si + " remnant without");
        } else {
          c.equal(e.value(e.from_bw_poset(rest)), Dyadic(sign * 7), "stack " + si + " remnant without");
        }
      }
    }
  }
}

// ---- 11
void kayles_reduction(Check& c) {
  auto check = [&](const SimpleGraph& g) {
    Poset p = kayles_to_poset(g);
    c.expect(height(p) <= 3, [&] { return "Kayles reduction output has a chain longer than 3"; });
    c.equal(exists_win(p), kayles_oracle(g), "Kayles reduction outcome on " + std::to_string(g.n) + "-vertex graph");
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      SimpleGraph g{n, {}};
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1) g.edges.push_back(pairs[b]);
      check(g);
    }
  }
  Rng rng(1011);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int i = 0; i < 50; ++i) check(random_graph(rng, size(rng), 0.4));
}

// ---- 12
// Reachability by DFS on the raw arcs.
bool reaches(const Digraph& g, std::size_t s, std::size_t t) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> todo{s};
  seen[s] = 1;
  while (!todo.empty()) {
    const std::size_t u = todo.back();
    todo.pop_back();
    if (u == t) return true;
    for (auto [a, b] : g.arcs)
      if (a == u && !seen[b]) {
        seen[b] = 1;
        todo.push_back(b);
      }
  }
  return false;
}

bool chains_only(const Poset& p) {
  std::vector<int> ups(p.size()), downs(p.size());
  for (auto [lo, hi] : p.covers()) {
    ++ups[lo];
    ++downs[hi];
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    if (ups[x] > 1 || downs[x] > 1) return false;
  return minimal_points(p).size() <= 4;
}

void reach_and_order(Check& c) {
  Rng rng(1012);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  for (int i = 0; i < 200; ++i) {
    Digraph g = random_digraph(rng, size(rng), 0.25);
    std::uniform_int_distribution<std::size_t> vertex(0, g.n - 1);
    const std::size_t s = vertex(rng);
    std::size_t t = vertex(rng);
    if (t == s) t = (s + 1) % g.n;
    c.equal(exists_win(to_poset(reach_to_game(g, s, t), Representation::AR)), reaches(g, s, t),
            "reachability reduction on a " + std::to_string(g.n) + "-vertex digraph");
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Digraph path{n, {}, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) path.arcs.emplace_back(order[i], order[i + 1]);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (i == j) continue;
        Poset p = to_poset(ord_to_nim4(path, order[i], order[j]), Representation::HD);
        c.expect(chains_only(p), [&] { return "path-order output is not at most 4 chains"; });
        c.equal(exists_win(p), j > i,
                "path-order n=" + std::to_string(n) + " x@" + std::to_string(i) + " y@" + std::to_string(j));
      }
  }
}

// ---- 13
void tqbf_structure(Check& c) {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{0, 1}, {1, 2}, {2, 3}};
  Rng rng(1013);
  for (auto [n, m] : shapes) {
    QbfInstance f = random_qbf(rng, n, m);
    TqbfGadget g = tqbf_to_bwposet(f);
    const auto& r = g.report;
    const Poset& p = g.poset;
    const std::string tag = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    const std::size_t M = 8 * (2 * n + 1) + 4 * n + m + 2 + 9;
    c.equal(r.M, M, "M " + tag);
    c.equal(r.M, 20 * n + m + 19, "M closed form " + tag);
    std::size_t waiting = 0;
    for (std::size_t i = 1; i <= 2 * n + 1; ++i) {
      c.equal(r.waiting_counts.at(i - 1), (2 * n + 2 - i) * M, "|W_" + std::to_string(i) + "| " + tag);
      waiting += (2 * n + 2 - i) * M;
    }
    c.equal(p.size(), M + waiting, "total points " + tag);
    c.equal(r.total, p.size(), "report total " + tag);

    // Inventory by label, counted from the poset itself.
    auto count_prefix = [&](const std::string& pre, bool digit_next) {
      std::size_t k = 0;
      for (const auto& l : p.labels())
        if (l.starts_with(pre) && (!digit_next || (l.size() > pre.size() && std::isdigit(l[pre.size()])))) ++k;
      return k;
    };
    c.equal(count_prefix("z", true), 8 * (2 * n + 1), "choice nodes " + tag);
    c.equal(count_prefix("alpha", true) + count_prefix("beta", true), 4 * n, "anti-cheat nodes " + tag);
    c.equal(count_prefix("b", true), m, "clause nodes " + tag);
    c.equal(count_prefix("dummy", false) + count_prefix("interrupt", false), 2u, "dummy and interrupt " + tag);
    c.equal(count_prefix("bal", false), 9u, "balance nodes " + tag);
    c.equal(count_prefix("w", true), waiting, "waiting nodes " + tag);
    c.equal(r.choice_nodes + r.anti_cheat_nodes + r.clause_nodes + r.dummy_nodes + r.interrupt_nodes + r.balance_nodes,
            M, "report inventory " + tag);
    c.expect(height(p) <= 3, [&] { return "gadget has a chain longer than 3 " + tag; });
    // Each waiting node sits above exactly the eight choice nodes of its stack.
    for (PointId x = 0; x < p.size(); ++x) {
      const std::string& l = p.label(x);
      if (!l.starts_with("w")) continue;
      const std::string stack = l.substr(1, l.find('.') - 1);
      std::size_t below = 0;
      bool only_own = true;
      p.down(x).for_each([&](std::size_t y) {
        if (y == x) return;
        ++below;
        if (!p.label(y).starts_with("z" + stack + ".")) only_own = false;
      });
      c.expect(below == 8 && only_own, [&] { return "waiting node " + l + " is wired wrong"; });
    }
  }
  // qbf_oracle against a truth-table expansion.
  for (int i = 0; i < 100; ++i) {
    QbfInstance f = random_qbf(rng, static_cast<std::size_t>(i % 3), 1 + static_cast<std::size_t>(i % 5));
    const std::size_t nv = f.num_vars;
    std::vector<char> value(std::size_t{1} << nv);
    for (std::size_t a = 0; a < value.size(); ++a)
      value[a] = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& cl) {
        return std::any_of(cl.begin(), cl.end(), [&](int lit) {
          const bool bit = (a >> (std::abs(lit) - 1)) & 1;
          return lit > 0 ? bit : !bit;
        });
      });
    // Fold quantifiers from the last variable down.
    for (std::size_t v = nv; v >= 1; --v) {
      const bool exists = v % 2 == 1;
      std::vector<char> next(value.size() / 2);
      for (std::size_t a = 0; a < next.size(); ++a) {
        const char lo = value[a], hi = value[a | (std::size_t{1} << (v - 1))];
        next[a] = exists ? (lo || hi) : (lo && hi);
      }
      value.swap(next);
    }
    c.equal(qbf_oracle(f), static_cast<bool>(value[0]), "qbf_oracle vs truth table");
  }
}

// ---- 14
// Play on the raw digraph: choosing v deletes every remaining vertex
// reachable from v.
bool digraph_first_player_wins(const Digraph& g) {
  const std::size_t n = g.n;
  std::vector<std::uint32_t> reach(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (reaches(g, v, u)) reach[v] |= 1u << u;
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  auto win = [&](auto&& self, std::uint32_t rest) -> bool {
    if (memo[rest] >= 0) return memo[rest];
    bool w = false;
    for (std::size_t v = 0; v < n && !w; ++v)
      if ((rest >> v) & 1) w = !self(self, rest & ~reach[v]);
    memo[rest] = w;
    return w;
  };
  return win(win, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

void ar_semantics(Check& c) {
  Rng rng(1014);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 200; ++i) {
    Digraph g = random_digraph(rng, size(rng), 0.3);
    Poset p = to_poset(g, Representation::AR);
    c.equal(exists_win(p), digraph_first_player_wins(g), "AR condensation on a " + std::to_string(g.n) + "-vertex digraph");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
  };
  const std::vector<Criterion> criteria{
      {1, "closed forms for chains, antichains, V_n and the diamond", closed_forms},
      {2, "Sprague-Grundy sums without component splitting", sprague_grundy},
      {3, "series with a chain adds its length", series_chain},
      {4, "N-free algorithm and decomposition", nfree},
      {5, "parity-uniform two-level formula", parity_uniform},
      {6, "level sets of the Boolean lattice", level_sets},
      {7, "flip and threshold constructions", flip_threshold},
      {8, "g-number from outcome queries", grundy_from_outcomes},
      {9, "partisan kernel", partisan_kernel},
      {10, "black-white figures and gadget sections", bw_figures},
      {11, "Node Kayles reduction", kayles_reduction},
      {12, "reachability and path-order reductions", reach_and_order},
      {13, "QBF gadget structure and QBF oracle", tqbf_structure},
      {14, "AR semantics against digraph play", ar_semantics},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && c.failures() == 0 && c.checks() > 0;
    failed += ok ? 0 : 1;
    std::printf("%s %2d  %-58s %6zu checks  %8.2f s", ok ? "PASS" : "FAIL", cr.id, cr.name, c.checks(), secs);
    if (!error.empty()) std::printf("  exception: %s", error.c_str());
    if (c.failures()) std::printf("  %zu failed: %s", c.failures(), c.notes().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
