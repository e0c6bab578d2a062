#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/budget.h"
#include "posetlab/poset.h"

namespace posetlab {

struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Throws BadParams on self-loops, duplicate edges or out-of-range ends.
void validate(const SimpleGraph& g);

struct Digraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::string> labels;  // empty means "v<i>"
};

std::string vertex_label(const Digraph& g, std::size_t v);
// Arcs read as lo -> hi.
Poset to_poset(const Digraph& g, Representation repr);
bool reachable(const Digraph& g, std::size_t from, std::size_t to);

// num_vars = 2n+1 under the prefix ∃x1 ∀x2 ... ∃x_{2n+1}; literal +i / -i
// is x_i / not x_i.
struct QbfInstance {
  std::size_t num_vars = 1;
  std::vector<std::vector<int>> clauses;
};

void validate(const QbfInstance& f);  // throws BadFormula

// Adds two K2's or a K2 plus a K4 so that |E| is odd and every vertex misses
// some edge; unchanged when both already hold.
SimpleGraph kayles_pad(const SimpleGraph& g);

// Three-level poset on the padded graph: a<e> below b<v> when v is not on e,
// b<v> below c<e> when v is on e.
Poset kayles_to_poset(const SimpleGraph& g);

// Node Kayles by memoized search over remaining vertex sets (at most 32
// vertices).
bool kayles_oracle(const SimpleGraph& g, SolveBudget budget = {});

struct TqbfStructureReport {
  std::size_t n = 0;  // num_vars = 2n+1
  std::size_t m = 0;  // clauses
  std::size_t M = 0;  // non-waiting nodes
  std::vector<std::size_t> waiting_counts;
  std::size_t choice_nodes = 0;
  std::size_t anti_cheat_nodes = 0;
  std::size_t clause_nodes = 0;
  std::size_t dummy_nodes = 0;
  std::size_t interrupt_nodes = 0;
  std::size_t balance_nodes = 0;
  std::size_t total = 0;
  // Point indices per section: one entry per stack (choice, anti-cheat and
  // waiting nodes), then the clause and balance sections.
  std::vector<std::vector<PointId>> stacks;
  std::vector<PointId> clause_section;
  std::vector<PointId> balance_section;
};

struct TqbfGadget {
  Poset poset;
  TqbfStructureReport report;
};

// Black-white game that White wins moving first iff the formula is true.
// Labels: z<i>.<LAR bits>, w<i>.<j>, alpha<i>, beta<i>, b<j>, dummy,
// interrupt, bal<j>, baltop.
TqbfGadget tqbf_to_bwposet(const QbfInstance& f);

bool qbf_oracle(const QbfInstance& f, SolveBudget budget = {});

// Two copies of g (second copy primed) plus arcs t -> s' and t' -> s. The
// AR game on the result is an ∃-game iff t is reachable from s.
Digraph reach_to_game(const Digraph& g, std::size_t s, std::size_t t);

// g must be one directed path; x and y distinct and neither the last
// vertex. The result is at most four disjoint paths and is an ∃-game (HD)
// iff y comes after x.
Digraph ord_to_nim4(const Digraph& g, std::size_t x, std::size_t y);

}  // namespace posetlab
