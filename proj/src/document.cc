#include "posetlab/document.h"

#include <set>

#include "posetlab/error.h"

namespace posetlab {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::BadDocument, why); }

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

void expect_format(const Json& doc, std::string_view format) {
  if (!doc.is_object()) bad("document must be a JSON object");
  const Json& f = field(doc, "format");
  if (!f.is_string() || f.get<std::string>() != format)
    bad("format must be \"" + std::string(format) + "\"");
}

std::size_t natural(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(what) + " must be a natural number");
  return v.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Poset poset_from_json(const Json& doc) {
  expect_format(doc, "posetlab-v1");
  const Json& repr_field = field(doc, "repr");
  if (!repr_field.is_string()) bad("repr must be a string");
  const std::string repr_name = repr_field.get<std::string>();
  Representation repr;
  if (repr_name == "PO")
    repr = Representation::PO;
  else if (repr_name == "HD")
    repr = Representation::HD;
  else if (repr_name == "AR")
    repr = Representation::AR;
  else
    bad("repr must be PO, HD or AR");

  const Json& pts = field(doc, "points");
  if (!pts.is_array()) bad("points must be an array");
  std::vector<PointSpec> points;
  for (const Json& pt : pts) {
    if (!pt.is_object()) bad("each point must be an object");
    const Json& id = field(pt, "id");
    if (!id.is_string()) bad("point id must be a string");
    PointSpec spec{id.get<std::string>(), std::nullopt};
    if (auto c = pt.find("color"); c != pt.end() && !c->is_null()) {
      if (*c == "black")
        spec.color = Color::Black;
      else if (*c == "white")
        spec.color = Color::White;
      else
        bad("color must be \"black\" or \"white\"");
    }
    points.push_back(std::move(spec));
  }

  std::vector<Arc> arcs;
  std::set<std::pair<std::string, std::string>> seen;
  if (auto e = doc.find("edges"); e != doc.end()) {
    if (!e->is_array()) bad("edges must be an array");
    for (const Json& edge : *e) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
        bad("each edge must be a pair of point ids");
      Arc arc{edge[0].get<std::string>(), edge[1].get<std::string>()};
      if (!seen.emplace(arc.lo, arc.hi).second) bad("duplicate edge [" + arc.lo + "," + arc.hi + "]");
      arcs.push_back(std::move(arc));
    }
  }
  return Poset::from_edges(points, arcs, repr);
}

Json poset_to_json(const Poset& p) {
  Json points = Json::array();
  for (PointId x = 0; x < p.size(); ++x) {
    Json pt{{"id", p.label(x)}};
    if (auto c = p.color(x)) pt["color"] = std::string(to_string(*c));
    points.push_back(std::move(pt));
  }
  Json edges = Json::array();
  for (auto [lo, hi] : p.covers()) edges.push_back({p.label(lo), p.label(hi)});
  return Json{{"format", "posetlab-v1"}, {"repr", "HD"}, {"points", points}, {"edges", edges}};
}

Json digraph_to_poset_json(const Digraph& g, Representation repr) {
  Json points = Json::array();
  for (std::size_t v = 0; v < g.n; ++v) points.push_back(Json{{"id", vertex_label(g, v)}});
  Json edges = Json::array();
  for (auto [u, v] : g.arcs) edges.push_back({vertex_label(g, u), vertex_label(g, v)});
  return Json{{"format", "posetlab-v1"}, {"repr", std::string(to_string(repr))},
              {"points", points}, {"edges", edges}};
}

SimpleGraph GraphDocument::simple() const {
  if (directed) bad("expected an undirected graph");
  return SimpleGraph{n, edges};
}

Digraph GraphDocument::digraph() const {
  if (!directed) bad("expected a directed graph");
  return Digraph{n, edges, {}};
}

GraphDocument graph_from_json(const Json& doc) {
  expect_format(doc, "posetlab-graph-v1");
  GraphDocument g;
  const Json& directed = field(doc, "directed");
  if (!directed.is_boolean()) bad("directed must be a boolean");
  g.directed = directed.get<bool>();
  g.n = natural(field(doc, "n"), "n");
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair of vertices");
    std::size_t u = natural(e[0], "vertex"), v = natural(e[1], "vertex");
    if (u >= g.n || v >= g.n) bad("edge end out of range");
    g.edges.emplace_back(u, v);
  }
  if (auto s = doc.find("s"); s != doc.end() && !s->is_null()) g.s = natural(*s, "s");
  if (auto t = doc.find("t"); t != doc.end() && !t->is_null()) g.t = natural(*t, "t");
  return g;
}

Json graph_to_json(const GraphDocument& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  Json doc{{"format", "posetlab-graph-v1"}, {"directed", g.directed}, {"n", g.n}, {"edges", edges}};
  if (g.s) doc["s"] = *g.s;
  if (g.t) doc["t"] = *g.t;
  return doc;
}

QbfInstance qbf_from_json(const Json& doc) {
  expect_format(doc, "posetlab-qbf-v1");
  QbfInstance f;
  f.num_vars = natural(field(doc, "num_vars"), "num_vars");
  const Json& clauses = field(doc, "clauses");
  if (!clauses.is_array()) bad("clauses must be an array");
  for (const Json& c : clauses) {
    if (!c.is_array()) bad("each clause must be an array of literals");
    std::vector<int> clause;
    for (const Json& lit : c) {
      if (!lit.is_number_integer()) bad("literals must be integers");
      clause.push_back(lit.get<int>());
    }
    f.clauses.push_back(std::move(clause));
  }
  validate(f);
  return f;
}

Json qbf_to_json(const QbfInstance& f) {
  return Json{{"format", "posetlab-qbf-v1"}, {"num_vars", f.num_vars}, {"clauses", f.clauses}};
}

}  // namespace posetlab
