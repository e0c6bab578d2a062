#include "posetlab/poset.h"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "posetlab/error.h"

namespace posetlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PromiseViolation: return "PromiseViolation";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::ColorMixing: return "ColorMixing";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ColoredInput: return "ColoredInput";
    case ErrorKind::UncoloredPoint: return "UncoloredPoint";
    case ErrorKind::NotTwoLevel: return "NotTwoLevel";
    case ErrorKind::NotParityUniform: return "NotParityUniform";
    case ErrorKind::OracleInconsistent: return "OracleInconsistent";
    case ErrorKind::NotNFree: return "NotNFree";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::NotNumeric: return "NotNumeric";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::BadFormula: return "BadFormula";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::BadVertices: return "BadVertices";
    case ErrorKind::BadDocument: return "BadDocument";
    case ErrorKind::BindFailure: return "BindFailure";
  }
  return "Unknown";
}

std::string_view to_string(Color c) { return c == Color::Black ? "black" : "white"; }

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::PO: return "PO";
    case Representation::HD: return "HD";
    case Representation::AR: return "AR";
  }
  return "?";
}

std::string_view to_string(ImpartialOutcome o) {
  return o == ImpartialOutcome::ExistsWin ? "exists" : "forall";
}

Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

namespace {

void check_colors(const std::vector<std::optional<Color>>& colors) {
  if (colors.empty()) return;
  const bool first = colors.front().has_value();
  for (const auto& c : colors)
    if (c.has_value() != first)
      throw Error(ErrorKind::ColorMixing, "points must be all colored or all uncolored");
}

// Strongly connected components, numbered in order of their least member.
std::vector<std::size_t> strong_components(const std::vector<std::vector<std::size_t>>& adj,
                                           std::size_t& count) {
  const std::size_t n = adj.size();
  // Kosaraju: finish order on G, then sweep the reverse graph.
  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[v].size()) {
        std::size_t w = adj[v][i++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : adj[v]) radj[w].push_back(v);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kNone);
  std::size_t c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (raw[*it] != kNone) continue;
    std::vector<std::size_t> stack{*it};
    raw[*it] = c;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : radj[v])
        if (raw[w] == kNone) {
          raw[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  // Renumber by least member.
  std::vector<std::size_t> remap(c, kNone);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (remap[raw[v]] == kNone) remap[raw[v]] = next++;
  for (auto& r : raw) r = remap[r];
  count = c;
  return raw;
}

// Reflexive-transitive closure of a DAG given by adjacency lists. Returns
// nullopt if the graph has a cycle.
std::optional<std::vector<PointSet>> dag_closure(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& out : adj)
    for (auto w : out) ++indeg[w];
  std::vector<std::size_t> topo;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (!indeg[v]) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (auto w : adj[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) return std::nullopt;
  std::vector<PointSet> up(n, PointSet(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    up[*it].set(*it);
    for (auto w : adj[*it]) up[*it] |= up[w];
  }
  return up;
}

}  // namespace

Poset Poset::from_up_sets(std::vector<std::string> labels,
                          std::vector<std::optional<Color>> colors,
                          std::vector<PointSet> up) {
  const std::size_t n = labels.size();
  if (colors.size() != n || up.size() != n)
    throw Error(ErrorKind::BadParams, "label/color/relation sizes differ");
  check_colors(colors);
  Poset p;
  p.labels_ = std::move(labels);
  p.colors_ = std::move(colors);
  p.up_ = std::move(up);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = p.index_.emplace(p.labels_[i], i);
    if (!inserted) throw Error(ErrorKind::BadParams, "duplicate label '" + p.labels_[i] + "'");
  }
  p.down_.assign(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x)
    p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });
  for (std::size_t x = 0; x < n; ++x) {
    PointSet strict_up = p.up_[x];
    strict_up.reset(x);
    strict_up.for_each([&](std::size_t y) {
      PointSet between = strict_up & p.down_[y];
      between.reset(y);
      if (between.none()) p.covers_.emplace_back(x, y);
    });
  }
  return p;
}

Poset Poset::from_edges(std::span<const PointSpec> points, std::span<const Arc> arcs,
                        Representation repr) {
  const std::size_t n = points.size();
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::optional<Color>> colors;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(points[i].label, i).second)
      throw Error(ErrorKind::BadParams, "duplicate label '" + points[i].label + "'");
    colors.push_back(points[i].color);
  }
  check_colors(colors);
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown label '" + l + "'");
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& a : arcs) pairs.emplace_back(lookup(a.lo), lookup(a.hi));

  std::vector<std::string> labels;
  for (const auto& pt : points) labels.push_back(pt.label);

  switch (repr) {
    case Representation::PO: {
      std::set<std::pair<std::size_t, std::size_t>> rel;
      for (auto [a, b] : pairs)
        if (a != b) rel.emplace(a, b);
      for (auto [a, b] : rel) {
        if (rel.count({b, a}))
          throw Error(ErrorKind::PromiseViolation,
                      "PO relation not antisymmetric at (" + labels[a] + "," + labels[b] + ")");
      }
      for (auto [a, b] : rel)
        for (auto it = rel.lower_bound({b, 0}); it != rel.end() && it->first == b; ++it)
          if (it->second != a && !rel.count({a, it->second}))
            throw Error(ErrorKind::PromiseViolation, "PO relation not transitive: missing (" +
                                                         labels[a] + "," + labels[it->second] +
                                                         ")");
      std::vector<PointSet> up(n, PointSet(n));
      for (std::size_t x = 0; x < n; ++x) up[x].set(x);
      for (auto [a, b] : rel) up[a].set(b);
      return from_up_sets(std::move(labels), std::move(colors), std::move(up));
    }
    case Representation::HD: {
      std::vector<std::vector<std::size_t>> adj(n);
      for (auto [a, b] : pairs) adj[a].push_back(b);
      auto up = dag_closure(adj);
      if (!up) throw Error(ErrorKind::PromiseViolation, "HD input contains a cycle");
      return from_up_sets(std::move(labels), std::move(colors), std::move(*up));
    }
    case Representation::AR: {
      std::vector<std::vector<std::size_t>> adj(n);
      for (auto [a, b] : pairs) adj[a].push_back(b);
      std::size_t count = 0;
      auto comp = strong_components(adj, count);
      std::vector<std::vector<std::size_t>> members(count);
      for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
      std::vector<std::string> clabels;
      std::vector<std::optional<Color>> ccolors;
      for (const auto& m : members) {
        if (m.size() == 1) {
          clabels.push_back(labels[m[0]]);
        } else {
          std::string l = "{";
          for (std::size_t i = 0; i < m.size(); ++i) l += (i ? "," : "") + labels[m[i]];
          clabels.push_back(l + "}");
        }
        auto c = colors[m[0]];
        for (auto v : m)
          if (colors[v] != c)
            throw Error(ErrorKind::ColorMixing, "strongly connected component mixes colors");
        ccolors.push_back(c);
      }
      std::vector<std::vector<std::size_t>> cadj(count);
      for (auto [a, b] : pairs)
        if (comp[a] != comp[b]) cadj[comp[a]].push_back(comp[b]);
      auto up = dag_closure(cadj);
      return from_up_sets(std::move(clabels), std::move(ccolors), std::move(*up));
    }
  }
  throw Error(ErrorKind::BadParams, "unknown representation");
}

std::optional<PointId> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId Poset::index_of(std::string_view label) const {
  auto id = find(label);
  if (!id) throw Error(ErrorKind::UnknownLabel, "unknown label '" + std::string(label) + "'");
  return *id;
}

Poset restrict(const Poset& p, const PointSet& keep) {
  std::vector<std::size_t> kept = keep.to_vector();
  const std::size_t m = kept.size();
  std::vector<std::size_t> remap(p.size(), 0);
  for (std::size_t i = 0; i < m; ++i) remap[kept[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::optional<Color>> colors;
  std::vector<PointSet> up(m, PointSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(p.label(kept[i]));
    colors.push_back(p.color(kept[i]));
    (p.up(kept[i]) & keep).for_each([&](std::size_t y) { up[i].set(remap[y]); });
  }
  return Poset::from_up_sets(std::move(labels), std::move(colors), std::move(up));
}

Poset play(const Poset& p, PointId x) {
  if (x >= p.size())
    throw Error(ErrorKind::UnknownPoint, "point " + std::to_string(x) + " not in poset");
  return restrict(p, p.all_points() - p.up(x));
}

namespace {

void check_mixing(const Poset& p, const Poset& q) {
  if (!p.empty() && !q.empty() && p.is_colored() != q.is_colored())
    throw Error(ErrorKind::ColorMixing, "cannot combine a colored and an uncolored poset");
}

// Disjoint union; when `below` is set every point of q lies below every
// point of p.
Poset combine(const Poset& p, const Poset& q, bool q_below) {
  check_mixing(p, q);
  const std::size_t np = p.size(), nq = q.size(), n = np + nq;
  std::vector<std::string> labels = p.labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : q.labels()) {
    std::string fresh = l;
    while (used.count(fresh)) fresh += '\'';
    used.insert(fresh);
    labels.push_back(fresh);
  }
  std::vector<std::optional<Color>> colors = p.colors();
  colors.insert(colors.end(), q.colors().begin(), q.colors().end());
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t x = 0; x < np; ++x) p.up(x).for_each([&](std::size_t y) { up[x].set(y); });
  for (std::size_t x = 0; x < nq; ++x) {
    q.up(x).for_each([&](std::size_t y) { up[np + x].set(np + y); });
    if (q_below)
      for (std::size_t y = 0; y < np; ++y) up[np + x].set(y);
  }
  return Poset::from_up_sets(std::move(labels), std::move(colors), std::move(up));
}

}  // namespace

Poset parallel(const Poset& p, const Poset& q) { return combine(p, q, false); }

Poset series(const Poset& upper, const Poset& lower) { return combine(upper, lower, true); }

Poset with_prefix(const Poset& p, std::string_view prefix) {
  std::vector<std::string> labels;
  for (const auto& l : p.labels()) labels.push_back(std::string(prefix) + l);
  std::vector<PointSet> up;
  for (std::size_t x = 0; x < p.size(); ++x) up.push_back(p.up(x));
  return Poset::from_up_sets(std::move(labels), p.colors(), std::move(up));
}

namespace {
Poset recolor(const Poset& p, std::vector<std::optional<Color>> colors) {
  std::vector<PointSet> up;
  for (std::size_t x = 0; x < p.size(); ++x) up.push_back(p.up(x));
  return Poset::from_up_sets(p.labels(), std::move(colors), std::move(up));
}
}  // namespace

Poset with_colors(const Poset& p, std::span<const Color> colors) {
  if (colors.size() != p.size()) throw Error(ErrorKind::BadParams, "one color per point required");
  return recolor(p, std::vector<std::optional<Color>>(colors.begin(), colors.end()));
}

Poset without_colors(const Poset& p) {
  return recolor(p, std::vector<std::optional<Color>>(p.size()));
}

Poset swap_colors(const Poset& p) {
  auto colors = p.colors();
  for (auto& c : colors)
    if (c) c = opposite(*c);
  return recolor(p, std::move(colors));
}

bool is_down_set(const Poset& p, const PointSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!p.down(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

std::vector<PointId> minimal_points(const Poset& p) {
  std::vector<PointId> out;
  for (PointId x = 0; x < p.size(); ++x)
    if (p.down(x).count() == 1) out.push_back(x);
  return out;
}

std::vector<PointId> maximal_points(const Poset& p) {
  std::vector<PointId> out;
  for (PointId x = 0; x < p.size(); ++x)
    if (p.up(x).count() == 1) out.push_back(x);
  return out;
}

std::size_t height(const Poset& p) {
  // Longest chain ending at x, computed in order of increasing down-set size.
  std::vector<PointId> order(p.size());
  for (PointId x = 0; x < p.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(),
            [&](PointId a, PointId b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<std::size_t> len(p.size(), 1);
  std::size_t best = 0;
  for (PointId x : order) {
    p.down(x).for_each([&](std::size_t y) {
      if (y != x) len[x] = std::max(len[x], len[y] + 1);
    });
    best = std::max(best, len[x]);
  }
  return best;
}

}  // namespace posetlab
