#pragma once

#include <cstddef>
#include <random>
#include <span>

#include "posetlab/nfree.h"
#include "posetlab/partisan.h"
#include "posetlab/poset.h"
#include "posetlab/reductions.h"

namespace posetlab {

using Rng = std::mt19937_64;

// Random order on n points: each pair i < j is related with probability
// `density` before closing transitively. Labels x0, x1, ...
Poset random_poset(Rng& rng, std::size_t n, double density);

// Like random_poset but every point gets a uniformly random color.
Poset random_colored_poset(Rng& rng, std::size_t n, double density);

// Same poset with point i moved to index perm[i].
Poset permuted(const Poset& p, std::span<const PointId> perm);
Poset shuffled(Rng& rng, const Poset& p);

// Uniformly random binary tree shape over leaves 0..n-1 (n >= 1), each
// internal node Par or Ser with equal probability.
SPTree random_sp_tree(Rng& rng, std::size_t n);

struct TwoLevel {
  Poset poset;
  PointSet tops;
};

// Bottoms b0.. and tops t0..; each bottom-top pair related with probability
// `density`.
TwoLevel random_two_level(Rng& rng, std::size_t bottoms, std::size_t tops, double density);

// Random game whose options are random games of depth - 1 (depth 0 is 0).
GameId random_game(GameEngine& engine, Rng& rng, std::size_t depth, std::size_t max_options = 3);
// Random numeric game: right options not above every left option are
// dropped.
GameId random_numeric_game(GameEngine& engine, Rng& rng, std::size_t depth,
                           std::size_t max_options = 3);

SimpleGraph random_graph(Rng& rng, std::size_t n, double density);
Digraph random_digraph(Rng& rng, std::size_t n, double density);
// num_vars = 2n+1, m clauses of up to `width` distinct variables.
QbfInstance random_qbf(Rng& rng, std::size_t n, std::size_t m, std::size_t width = 3);

}  // namespace posetlab
