#include "posetlab/nfree.h"

#include <algorithm>

namespace posetlab {

std::optional<NWitness> find_n(const Poset& p) {
  const std::size_t n = p.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      for (PointId c = 0; c < n; ++c) {
        if (!p.less(c, b) || p.comparable(a, c)) continue;
        for (PointId d = 0; d < n; ++d)
          if (p.less(c, d) && !p.comparable(a, d) && !p.comparable(b, d))
            return NWitness{a, b, c, d};
      }
    }
  return std::nullopt;
}

SPTree SPTree::leaf(PointId point) {
  SPTree t;
  t.point_ = point;
  return t;
}

SPTree SPTree::par(SPTree left, SPTree right) {
  SPTree t;
  t.kind_ = Kind::Par;
  t.leaves_ = left.leaves_ + right.leaves_;
  t.first_ = std::make_shared<const SPTree>(std::move(left));
  t.second_ = std::make_shared<const SPTree>(std::move(right));
  return t;
}

SPTree SPTree::ser(SPTree upper, SPTree lower) {
  SPTree t;
  t.kind_ = Kind::Ser;
  t.leaves_ = upper.leaves_ + lower.leaves_;
  t.first_ = std::make_shared<const SPTree>(std::move(upper));
  t.second_ = std::make_shared<const SPTree>(std::move(lower));
  return t;
}

std::string to_string(const SPTree& t) {
  switch (t.kind()) {
    case SPTree::Kind::Leaf: return "leaf";
    case SPTree::Kind::Par: return "par(" + to_string(t.first()) + "," + to_string(t.second()) + ")";
    case SPTree::Kind::Ser: return "ser(" + to_string(t.first()) + "," + to_string(t.second()) + ")";
  }
  return "";
}

Poset evaluate(const SPTree& t, const std::vector<std::string>* labels) {
  switch (t.kind()) {
    case SPTree::Kind::Leaf: {
      std::string l = labels ? labels->at(t.point()) : "x" + std::to_string(t.point());
      std::vector<PointSet> up(1, PointSet(1));
      up[0].set(0);
      return Poset::from_up_sets({l}, {std::nullopt}, std::move(up));
    }
    case SPTree::Kind::Par: return parallel(evaluate(t.first(), labels), evaluate(t.second(), labels));
    case SPTree::Kind::Ser: return series(evaluate(t.first(), labels), evaluate(t.second(), labels));
  }
  return Poset();
}

namespace {

// Connected components of `s` in the graph whose neighbourhood of x is
// row(x) & s.
template <typename Row>
std::vector<PointSet> components_by(const PointSet& s, Row&& row) {
  std::vector<PointSet> out;
  PointSet rest = s;
  while (auto seed = rest.first()) {
    PointSet comp(s.universe());
    comp.set(*seed);
    PointSet frontier = comp;
    while (frontier.any()) {
      PointSet reach(s.universe());
      frontier.for_each([&](std::size_t x) { reach |= row(x); });
      frontier = (reach & rest) - comp;
      comp |= frontier;
    }
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

SPTree decompose_set(const Poset& p, const PointSet& s) {
  if (s.count() == 1) return SPTree::leaf(*s.first());

  auto comps = components_by(s, [&](std::size_t x) { return p.up(x) | p.down(x); });
  if (comps.size() > 1) {
    SPTree t = decompose_set(p, comps[0]);
    for (std::size_t i = 1; i < comps.size(); ++i) t = SPTree::par(std::move(t), decompose_set(p, comps[i]));
    return t;
  }

  const PointSet all = p.all_points();
  auto icomps = components_by(s, [&](std::size_t x) { return all - p.up(x) - p.down(x); });
  if (icomps.size() > 1) {
    // Order the pieces bottom to top; each pair must be fully comparable in a
    // single direction.
    auto below = [&](const PointSet& lo, const PointSet& hi) {
      bool ok = true;
      lo.for_each([&](std::size_t x) {
        if (!hi.is_subset_of(p.up(x))) ok = false;
      });
      return ok;
    };
    std::vector<std::size_t> order(icomps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      PointSet da = p.down(*icomps[a].first());
      PointSet db = p.down(*icomps[b].first());
      return (da & s).count() < (db & s).count();
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (!below(icomps[order[i]], icomps[order[i + 1]])) {
        auto w = find_n(p);
        throw NotNFree(w.value_or(NWitness{0, 0, 0, 0}));
      }
    SPTree t = decompose_set(p, icomps[order[0]]);
    for (std::size_t i = 1; i < order.size(); ++i)
      t = SPTree::ser(decompose_set(p, icomps[order[i]]), std::move(t));
    return t;
  }

  auto w = find_n(p);
  throw NotNFree(w.value_or(NWitness{0, 0, 0, 0}));
}

}  // namespace

SPTree decompose(const Poset& p) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "cannot decompose the empty poset");
  return decompose_set(p, p.all_points());
}

GSet gset_par(const GSet& p, const GSet& q) {
  const Nimber gp = mex(p), gq = mex(q);
  std::vector<Nimber> out;
  for (Nimber x : q) out.push_back(gp ^ x);
  for (Nimber x : p) out.push_back(x ^ gq);
  return GSet(std::move(out));
}

GSet gset_ser(const GSet& upper, const GSet& lower) {
  GSet out = lower;
  for (Nimber i : upper) out.insert(mex(lower, i));
  return out;
}

GSet gset_of(const SPTree& t) {
  switch (t.kind()) {
    case SPTree::Kind::Leaf: return GSet{0};
    case SPTree::Kind::Par: return gset_par(gset_of(t.first()), gset_of(t.second()));
    case SPTree::Kind::Ser: return gset_ser(gset_of(t.first()), gset_of(t.second()));
  }
  return {};
}

Nimber grundy_nfree(const Poset& p) {
  if (p.empty()) return 0;
  return mex(gset_of(decompose(p)));
}

}  // namespace posetlab
