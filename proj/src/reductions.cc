#include "posetlab/reductions.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>

#include "absl/container/flat_hash_map.h"
#include "posetlab/error.h"

namespace posetlab {

void validate(const SimpleGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u >= g.n || v >= g.n) throw Error(ErrorKind::BadParams, "edge end out of range");
    if (u == v) throw Error(ErrorKind::BadParams, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorKind::BadParams,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
}

std::string vertex_label(const Digraph& g, std::size_t v) {
  if (g.labels.empty()) return "v" + std::to_string(v);
  return g.labels.at(v);
}

Poset to_poset(const Digraph& g, Representation repr) {
  if (!g.labels.empty() && g.labels.size() != g.n)
    throw Error(ErrorKind::BadParams, "digraph label count differs from vertex count");
  std::vector<PointSpec> points;
  for (std::size_t v = 0; v < g.n; ++v) points.push_back({vertex_label(g, v), std::nullopt});
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs) {
    if (u >= g.n || v >= g.n) throw Error(ErrorKind::UnknownVertex, "arc end out of range");
    arcs.push_back({vertex_label(g, u), vertex_label(g, v)});
  }
  return Poset::from_edges(points, arcs, repr);
}

bool reachable(const Digraph& g, std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out(g.n);
  for (auto [u, v] : g.arcs) out.at(u).push_back(v);
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> stack{from};
  seen.at(from) = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (auto v : out[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return false;
}

void validate(const QbfInstance& f) {
  if (f.num_vars % 2 == 0)
    throw Error(ErrorKind::BadFormula, "number of variables must be odd");
  for (const auto& clause : f.clauses)
    for (int lit : clause)
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.num_vars)
        throw Error(ErrorKind::BadFormula, "literal " + std::to_string(lit) + " out of range");
}

namespace {

bool odd_and_non_incident(const SimpleGraph& g) {
  if (g.edges.size() % 2 == 0) return false;
  for (std::size_t v = 0; v < g.n; ++v) {
    bool missed = std::any_of(g.edges.begin(), g.edges.end(),
                              [&](auto e) { return e.first != v && e.second != v; });
    if (!missed) return false;
  }
  return true;
}

void add_clique(SimpleGraph& g, std::size_t k) {
  const std::size_t base = g.n;
  g.n += k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) g.edges.emplace_back(base + i, base + j);
}

}  // namespace

SimpleGraph kayles_pad(const SimpleGraph& g) {
  validate(g);
  if (odd_and_non_incident(g)) return g;
  SimpleGraph out = g;
  // Both paddings have Kayles value 1 xor 1 = 0. Two K2's keep the parity of
  // |E|, K2 + K4 adds seven edges.
  add_clique(out, 2);
  add_clique(out, g.edges.size() % 2 == 1 ? 2 : 4);
  return out;
}

Poset kayles_to_poset(const SimpleGraph& input) {
  const SimpleGraph g = kayles_pad(input);
  const std::size_t m = g.edges.size(), n = g.n, total = 2 * m + n;
  auto a = [&](std::size_t e) { return e; };
  auto b = [&](std::size_t v) { return m + v; };
  auto c = [&](std::size_t e) { return m + n + e; };
  auto on = [&](std::size_t v, std::size_t e) { return g.edges[e].first == v || g.edges[e].second == v; };

  std::vector<std::string> labels(total);
  std::vector<PointSet> up(total, PointSet(total));
  for (std::size_t e = 0; e < m; ++e) {
    labels[a(e)] = "a" + std::to_string(e);
    labels[c(e)] = "c" + std::to_string(e);
    up[c(e)].set(c(e));
  }
  for (std::size_t v = 0; v < n; ++v) {
    labels[b(v)] = "b" + std::to_string(v);
    up[b(v)].set(b(v));
    for (std::size_t e = 0; e < m; ++e)
      if (on(v, e)) up[b(v)].set(c(e));
  }
  // a_e lies below every b_v off the edge, and by transitivity below their
  // c's.
  for (std::size_t e = 0; e < m; ++e) {
    up[a(e)].set(a(e));
    for (std::size_t v = 0; v < n; ++v)
      if (!on(v, e)) up[a(e)] |= up[b(v)];
  }
  return Poset::from_up_sets(std::move(labels), std::vector<std::optional<Color>>(total), std::move(up));
}

bool kayles_oracle(const SimpleGraph& g, SolveBudget budget) {
  validate(g);
  if (g.n > 32) throw Error(ErrorKind::BadParams, "Node Kayles oracle supports at most 32 vertices");
  std::vector<std::uint64_t> closed(g.n);
  for (std::size_t v = 0; v < g.n; ++v) closed[v] = std::uint64_t{1} << v;
  for (auto [u, v] : g.edges) {
    closed[u] |= std::uint64_t{1} << v;
    closed[v] |= std::uint64_t{1} << u;
  }
  absl::flat_hash_map<std::uint64_t, bool> memo;
  BudgetMeter meter(budget);
  auto wins = [&](auto&& self, std::uint64_t rest) -> bool {
    if (rest == 0) return false;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    bool result = false;
    for (std::uint64_t bits = rest; bits && !result; bits &= bits - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(bits));
      if (!self(self, rest & ~closed[v])) result = true;
    }
    memo.emplace(rest, result);
    meter.charge();
    return result;
  };
  const std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  return wins(wins, all);
}

TqbfGadget tqbf_to_bwposet(const QbfInstance& f) {
  validate(f);
  const std::size_t n = (f.num_vars - 1) / 2, stacks = f.num_vars, m = f.clauses.size();

  TqbfStructureReport r;
  r.n = n;
  r.m = m;
  r.choice_nodes = 8 * stacks;
  r.anti_cheat_nodes = 4 * n;
  r.clause_nodes = m;
  r.dummy_nodes = 1;
  r.interrupt_nodes = 1;
  r.balance_nodes = 9;
  r.M = r.choice_nodes + r.anti_cheat_nodes + m + 2 + r.balance_nodes;
  for (std::size_t i = 1; i <= stacks; ++i) r.waiting_counts.push_back((2 * n + 2 - i) * r.M);

  std::vector<std::string> labels;
  std::vector<std::optional<Color>> colors;
  auto add = [&](std::string label, Color c) {
    labels.push_back(std::move(label));
    colors.push_back(c);
    return labels.size() - 1;
  };
  auto bits = [](std::size_t b) {
    return std::string{char('0' + ((b >> 2) & 1)), char('0' + ((b >> 1) & 1)), char('0' + (b & 1))};
  };

  // choice[i][b] for stack i (1-based) and bits b = L*4 + A*2 + R.
  std::vector<std::vector<PointId>> choice(stacks + 1);
  std::vector<PointId> alpha(stacks + 1), beta(stacks + 1);
  std::vector<std::vector<PointId>> waiting(stacks + 1);
  r.stacks.resize(stacks);
  for (std::size_t i = 1; i <= stacks; ++i) {
    const bool odd = i % 2 == 1;
    const Color mine = odd ? Color::White : Color::Black;  // choice nodes
    for (std::size_t b = 0; b < 8; ++b) choice[i].push_back(add("z" + std::to_string(i) + "." + bits(b), mine));
    if (i <= 2 * n) {
      alpha[i] = add("alpha" + std::to_string(i), opposite(mine));
      beta[i] = add("beta" + std::to_string(i), opposite(mine));
    }
    for (std::size_t j = 0; j < r.waiting_counts[i - 1]; ++j)
      waiting[i].push_back(add("w" + std::to_string(i) + "." + std::to_string(j), opposite(mine)));
  }
  std::vector<PointId> clause;
  for (std::size_t j = 1; j <= m; ++j) clause.push_back(add("b" + std::to_string(j), Color::Black));
  const PointId dummy = add("dummy", Color::Black);
  const PointId interrupt = add("interrupt", Color::White);
  std::vector<PointId> balance;
  for (std::size_t j = 0; j < 8; ++j) balance.push_back(add("bal" + std::to_string(j), Color::Black));
  const PointId baltop = add("baltop", Color::White);

  const std::size_t total = labels.size();
  std::vector<PointSet> up(total, PointSet(total));
  for (std::size_t x = 0; x < total; ++x) up[x].set(x);
  auto below = [&](PointId lo, PointId hi) { up[lo].set(hi); };

  for (std::size_t i = 1; i <= stacks; ++i) {
    for (PointId z : choice[i])
      for (PointId w : waiting[i]) below(z, w);
    if (i <= 2 * n) {
      for (std::size_t b = 0; b < 8; ++b) {
        below(choice[i][b], (b & 1) ? beta[i] : alpha[i]);
        below(choice[i + 1][b], ((b >> 2) & 1) ? beta[i] : alpha[i]);
      }
    }
  }
  for (PointId c : clause) below(interrupt, c);
  below(interrupt, dummy);
  for (std::size_t j = 0; j < m; ++j)
    for (int lit : f.clauses[j]) {
      const auto i = static_cast<std::size_t>(std::abs(lit));
      const std::size_t wanted = lit > 0 ? 1 : 0;
      for (std::size_t b = 0; b < 8; ++b)
        if (((b >> 1) & 1) == wanted) below(choice[i][b], clause[j]);
    }
  for (PointId x : balance) below(x, baltop);

  for (std::size_t i = 1; i <= stacks; ++i) {
    auto& s = r.stacks[i - 1];
    s = choice[i];
    if (i <= 2 * n) {
      s.push_back(alpha[i]);
      s.push_back(beta[i]);
    }
    s.insert(s.end(), waiting[i].begin(), waiting[i].end());
  }
  r.clause_section = clause;
  r.clause_section.push_back(dummy);
  r.clause_section.push_back(interrupt);
  r.balance_section = balance;
  r.balance_section.push_back(baltop);
  r.total = total;

  return {Poset::from_up_sets(std::move(labels), std::move(colors), std::move(up)), std::move(r)};
}

bool qbf_oracle(const QbfInstance& f, SolveBudget budget) {
  validate(f);
  std::vector<int> value(f.num_vars + 1, -1);
  BudgetMeter meter(budget);
  auto satisfied = [&] {
    for (const auto& clause : f.clauses) {
      bool ok = false;
      for (int lit : clause)
        if (value[static_cast<std::size_t>(std::abs(lit))] == (lit > 0 ? 1 : 0)) ok = true;
      if (!ok) return false;
    }
    return true;
  };
  auto eval = [&](auto&& self, std::size_t var) -> bool {
    meter.charge();
    if (var > f.num_vars) return satisfied();
    const bool exists = var % 2 == 1;
    for (int v = 0; v < 2; ++v) {
      value[var] = v;
      const bool r = self(self, var + 1);
      if (r == exists) {
        value[var] = -1;
        return r;
      }
    }
    value[var] = -1;
    return !exists;
  };
  return eval(eval, 1);
}

Digraph reach_to_game(const Digraph& g, std::size_t s, std::size_t t) {
  if (s >= g.n || t >= g.n) throw Error(ErrorKind::UnknownVertex, "s or t is not a vertex");
  if (s == t) throw Error(ErrorKind::BadVertices, "s and t must differ");
  Digraph h;
  h.n = 2 * g.n;
  for (std::size_t v = 0; v < g.n; ++v) h.labels.push_back(vertex_label(g, v));
  for (std::size_t v = 0; v < g.n; ++v) h.labels.push_back(vertex_label(g, v) + "'");
  for (auto [u, v] : g.arcs) {
    if (u >= g.n || v >= g.n) throw Error(ErrorKind::UnknownVertex, "arc end out of range");
    h.arcs.emplace_back(u, v);
    h.arcs.emplace_back(g.n + u, g.n + v);
  }
  h.arcs.emplace_back(t, g.n + s);
  h.arcs.emplace_back(g.n + t, s);
  return h;
}

Digraph ord_to_nim4(const Digraph& g, std::size_t x, std::size_t y) {
  const std::size_t n = g.n;
  // Successor along the path, or n for the last vertex.
  std::vector<std::size_t> next(n, n), in(n, 0);
  if (n < 2 || g.arcs.size() != n - 1) throw Error(ErrorKind::PromiseViolation, "input is not a single directed path");
  for (auto [u, v] : g.arcs) {
    if (u >= n || v >= n || u == v || next[u] != n)
      throw Error(ErrorKind::PromiseViolation, "input is not a single directed path");
    next[u] = v;
    ++in[v];
  }
  std::size_t first = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] > 1) throw Error(ErrorKind::PromiseViolation, "input is not a single directed path");
    if (in[v] == 0) first = v;
  }
  std::size_t visited = 0;
  for (std::size_t v = first; v < n && visited <= n; v = next[v]) ++visited;
  if (first == n || visited != n) throw Error(ErrorKind::PromiseViolation, "input is not a single directed path");
  if (x >= n || y >= n || x == y) throw Error(ErrorKind::BadVertices, "x and y must be distinct vertices");
  if (next[x] == n || next[y] == n) throw Error(ErrorKind::BadVertices, "x and y both need successors");

  const std::size_t s = next[x], t = next[y];
  const std::size_t prime = n, p0 = 2 * n, q0 = 3 * n;
  Digraph h;
  h.n = 4 * n;
  for (std::size_t v = 0; v < n; ++v) h.labels.push_back(vertex_label(g, v));
  for (std::size_t v = 0; v < n; ++v) h.labels.push_back(vertex_label(g, v) + "'");
  for (std::size_t i = 1; i <= n; ++i) h.labels.push_back("p" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) h.labels.push_back("q" + std::to_string(i));
  for (auto [u, v] : g.arcs) {
    if ((u == x && v == s) || (u == y && v == t)) continue;
    h.arcs.emplace_back(u, v);
    h.arcs.emplace_back(prime + u, prime + v);
  }
  h.arcs.emplace_back(y, prime + t);
  h.arcs.emplace_back(prime + y, t);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h.arcs.emplace_back(p0 + i, p0 + i + 1);
    h.arcs.emplace_back(q0 + i, q0 + i + 1);
  }
  h.arcs.emplace_back(p0 + n - 1, first);
  h.arcs.emplace_back(x, q0);
  return h;
}

}  // namespace posetlab
