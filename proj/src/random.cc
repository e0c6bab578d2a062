#include "posetlab/random.h"

#include <algorithm>
#include <numeric>

#include "posetlab/error.h"

namespace posetlab {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Poset random_poset(Rng& rng, std::size_t n, double density) {
  std::vector<PointSet> up(n, PointSet(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    up[i].set(i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) up[i].set(j);
  }
  // Indices only point upward, so closing from the top down is enough.
  for (std::size_t i = n; i-- > 0;) {
    PointSet closed = up[i];
    up[i].for_each([&](std::size_t j) {
      if (j != i) closed |= up[j];
    });
    up[i] = closed;
  }
  return Poset::from_up_sets(std::move(labels), std::vector<std::optional<Color>>(n), std::move(up));
}

Poset random_colored_poset(Rng& rng, std::size_t n, double density) {
  Poset p = random_poset(rng, n, density);
  std::vector<Color> colors;
  for (std::size_t i = 0; i < n; ++i) colors.push_back(coin(rng, 0.5) ? Color::Black : Color::White);
  return with_colors(p, colors);
}

Poset permuted(const Poset& p, std::span<const PointId> perm) {
  const std::size_t n = p.size();
  if (perm.size() != n) throw Error(ErrorKind::BadParams, "permutation has the wrong length");
  std::vector<std::string> labels(n);
  std::vector<std::optional<Color>> colors(n);
  std::vector<PointSet> up(n, PointSet(n));
  for (PointId x = 0; x < n; ++x) {
    labels[perm[x]] = p.label(x);
    colors[perm[x]] = p.color(x);
    p.up(x).for_each([&](std::size_t y) { up[perm[x]].set(perm[y]); });
  }
  return Poset::from_up_sets(std::move(labels), std::move(colors), std::move(up));
}

Poset shuffled(Rng& rng, const Poset& p) {
  std::vector<PointId> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(p, perm);
}

SPTree random_sp_tree(Rng& rng, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "a series-parallel tree needs a leaf");
  std::vector<PointId> leaves(n);
  std::iota(leaves.begin(), leaves.end(), 0);
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> SPTree {
    if (hi - lo == 1) return SPTree::leaf(leaves[lo]);
    const std::size_t mid = uniform(rng, lo + 1, hi - 1);
    SPTree a = self(self, lo, mid);
    SPTree b = self(self, mid, hi);
    return coin(rng, 0.5) ? SPTree::par(std::move(a), std::move(b)) : SPTree::ser(std::move(a), std::move(b));
  };
  return build(build, 0, n);
}

TwoLevel random_two_level(Rng& rng, std::size_t bottoms, std::size_t tops, double density) {
  const std::size_t n = bottoms + tops;
  std::vector<std::string> labels;
  std::vector<PointSet> up(n, PointSet(n));
  PointSet top_set(n);
  for (std::size_t i = 0; i < bottoms; ++i) labels.push_back("b" + std::to_string(i));
  for (std::size_t j = 0; j < tops; ++j) {
    labels.push_back("t" + std::to_string(j));
    top_set.set(bottoms + j);
  }
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (std::size_t i = 0; i < bottoms; ++i)
    for (std::size_t j = 0; j < tops; ++j)
      if (coin(rng, density)) up[i].set(bottoms + j);
  return {Poset::from_up_sets(std::move(labels), std::vector<std::optional<Color>>(n), std::move(up)),
          top_set};
}

GameId random_game(GameEngine& engine, Rng& rng, std::size_t depth, std::size_t max_options) {
  if (depth == 0) return engine.zero();
  std::vector<GameId> left, right;
  const std::size_t nl = uniform(rng, 0, max_options), nr = uniform(rng, 0, max_options);
  for (std::size_t i = 0; i < nl; ++i) left.push_back(random_game(engine, rng, uniform(rng, 0, depth - 1), max_options));
  for (std::size_t i = 0; i < nr; ++i) right.push_back(random_game(engine, rng, uniform(rng, 0, depth - 1), max_options));
  return engine.make(std::move(left), std::move(right));
}

GameId random_numeric_game(GameEngine& engine, Rng& rng, std::size_t depth, std::size_t max_options) {
  if (depth == 0) return engine.zero();
  std::vector<GameId> left, right;
  const std::size_t nl = uniform(rng, 0, max_options), nr = uniform(rng, 0, max_options);
  for (std::size_t i = 0; i < nl; ++i)
    left.push_back(random_numeric_game(engine, rng, uniform(rng, 0, depth - 1), max_options));
  for (std::size_t i = 0; i < nr; ++i) {
    GameId r = random_numeric_game(engine, rng, uniform(rng, 0, depth - 1), max_options);
    if (std::all_of(left.begin(), left.end(), [&](GameId l) { return engine.less(l, r); })) right.push_back(r);
  }
  return engine.make(std::move(left), std::move(right));
}

SimpleGraph random_graph(Rng& rng, std::size_t n, double density) {
  SimpleGraph g{n, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, density)) g.edges.emplace_back(u, v);
  return g;
}

Digraph random_digraph(Rng& rng, std::size_t n, double density) {
  Digraph g{n, {}, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng, density)) g.arcs.emplace_back(u, v);
  return g;
}

QbfInstance random_qbf(Rng& rng, std::size_t n, std::size_t m, std::size_t width) {
  QbfInstance f{2 * n + 1, {}};
  std::vector<int> vars(f.num_vars);
  std::iota(vars.begin(), vars.end(), 1);
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    const std::size_t k = uniform(rng, 1, std::min(width, vars.size()));
    std::vector<int> clause;
    for (std::size_t i = 0; i < k; ++i) clause.push_back(coin(rng, 0.5) ? vars[i] : -vars[i]);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace posetlab
