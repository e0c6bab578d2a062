#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posetlab/poset.h"
#include "posetlab/reductions.h"

namespace posetlab {

using Json = nlohmann::json;

// Throws BadDocument on malformed JSON text.
Json parse_json(std::string_view text);

// {"format":"posetlab-v1","repr":"PO"|"HD"|"AR","points":[{"id":..,"color":..}],
//  "edges":[[lo,hi],...]}. Point order is index order; duplicate edges are
// rejected. Structural errors are BadDocument; order errors come from
// Poset::from_edges.
Poset poset_from_json(const Json& doc);

// Emits the cover relation under repr "HD".
Json poset_to_json(const Poset& p);

// The digraph's arcs verbatim as a poset document with the given repr.
Json digraph_to_poset_json(const Digraph& g, Representation repr);

// {"format":"posetlab-graph-v1","directed":bool,"n":int,"edges":[[u,v],...],
//  "s":int?,"t":int?}
struct GraphDocument {
  bool directed = false;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> s, t;

  SimpleGraph simple() const;  // throws BadDocument if directed
  Digraph digraph() const;     // throws BadDocument if undirected
};

GraphDocument graph_from_json(const Json& doc);
Json graph_to_json(const GraphDocument& g);

// {"format":"posetlab-qbf-v1","num_vars":odd int,"clauses":[[±int,...],...]}
QbfInstance qbf_from_json(const Json& doc);
Json qbf_to_json(const QbfInstance& f);

}  // namespace posetlab
