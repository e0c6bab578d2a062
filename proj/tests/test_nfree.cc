#include <chrono>

#include "doctest.h"
#include "helpers.h"
#include "posetlab/families.h"
#include "posetlab/impartial.h"
#include "posetlab/nfree.h"
#include "posetlab/random.h"

using namespace posetlab;
using testing_util::n_poset;

namespace {

// All orders on n points whose index order is a linear extension; every
// poset is isomorphic to one of them.
template <typename F>
void for_each_natural_poset(std::size_t n, F&& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<PointSet> up(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) up[pairs[b].first].set(pairs[b].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      up[i].for_each([&](std::size_t j) {
        if (!up[j].is_subset_of(up[i])) transitive = false;
      });
    if (!transitive) continue;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    f(Poset::from_up_sets(labels, std::vector<std::optional<Color>>(n), up));
  }
}

bool is_witness(const Poset& p, const NWitness& w) {
  return p.less(w.a, w.b) && p.less(w.c, w.d) && p.less(w.c, w.b) && !p.comparable(w.a, w.c) &&
         !p.comparable(w.a, w.d) && !p.comparable(w.b, w.d);
}

}  // namespace

TEST_CASE("find_n") {
  Poset n = n_poset();
  auto w = find_n(n);
  REQUIRE(w);
  CHECK(is_witness(n, *w));
  CHECK(n.label(w->a) == "a");
  CHECK(n.label(w->b) == "b");
  CHECK(n.label(w->c) == "c");
  CHECK(n.label(w->d) == "d");
  CHECK(!find_n(chain(3)));
  CHECK(!find_n(diamond(2)));
}

TEST_CASE("decompose") {
  CHECK(to_string(decompose(chain(2))) == "ser(leaf,leaf)");
  SPTree d = decompose(diamond(2));
  CHECK(d.leaf_count() == 4);
  Poset back = evaluate(d, &diamond(2).labels());
  CHECK(grundy(back) == 3);
  CHECK(to_string(decompose(antichain(2))) == "par(leaf,leaf)");
  try {
    decompose(n_poset());
    FAIL("expected NotNFree");
  } catch (const NotNFree& e) {
    CHECK(is_witness(n_poset(), e.witness()));
  }
  try {
    decompose(Poset());
    FAIL("expected EmptyPoset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyPoset);
  }
}

TEST_CASE("decompose reproduces the poset") {
  Poset d = diamond(3);
  SPTree t = decompose(d);
  Poset e = evaluate(t, &d.labels());
  REQUIRE(e.size() == d.size());
  for (PointId x = 0; x < d.size(); ++x)
    for (PointId y = 0; y < d.size(); ++y)
      CHECK(e.leq(e.index_of(d.label(x)), e.index_of(d.label(y))) == d.leq(x, y));
}

TEST_CASE("g-set combinators") {
  CHECK(gset_par(GSet{0}, GSet{0}) == GSet{1});
  CHECK(mex(gset_par(GSet{0}, GSet{0})) == 0);
  CHECK(gset_par(GSet{0, 1}, GSet{}) == GSet{0, 1});
  CHECK(gset_par(GSet{}, GSet{0, 1}) == GSet{0, 1});
  GSet par = gset_par(GSet{0}, GSet{0, 1});
  CHECK(par == GSet{0, 1, 2});
  CHECK(mex(par) == 3);

  CHECK(gset_ser(GSet{0}, GSet{0}) == GSet{0, 1});
  CHECK(mex(gset_ser(GSet{0}, GSet{0})) == 2);
  // A_2 over A_2.
  CHECK(gset_ser(GSet{1}, GSet{1}) == GSet{1, 2});
  CHECK(mex(gset_ser(GSet{1}, GSet{1})) == 0);
  CHECK(grundy(series(antichain(2), antichain(2))) == 0);
  for (std::size_t k = 0; k <= 6; ++k) {
    GSet chain_set;
    for (std::size_t i = 0; i < k; ++i) chain_set.insert(i);
    GSet upper = gset(diamond(2));
    CHECK(mex(gset_ser(upper, chain_set)) == mex(upper) + k);
  }
}

TEST_CASE("grundy_nfree") {
  CHECK(grundy_nfree(diamond(2)) == 3);
  std::vector<std::size_t> stacks{3, 5, 7};
  CHECK(grundy_nfree(nim(stacks)) == 1);
  CHECK(grundy_nfree(Poset()) == 0);
  CHECK_THROWS_AS(grundy_nfree(n_poset()), NotNFree);
}

TEST_CASE("exhaustive: find_n agrees with decompose on all posets up to 6 points") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_natural_poset(n, [&](const Poset& p) {
      ++count;
      auto w = find_n(p);
      bool decomposed = true;
      try {
        SPTree t = decompose(p);
        CHECK(t.leaf_count() == p.size());
        CHECK(grundy_nfree(p) == grundy(p));
      } catch (const NotNFree& e) {
        decomposed = false;
        CHECK(is_witness(p, e.witness()));
      }
      CHECK(decomposed == !w.has_value());
    });
  CHECK(count > 1000);
}

TEST_CASE("random series-parallel posets match brute force") {
  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 25;
    SPTree t = random_sp_tree(rng, n);
    Poset p = evaluate(t);
    CHECK(!find_n(p));
    CHECK(grundy_nfree(p) == grundy(p));
    // Intermediate g-sets never exceed their subposet size.
    auto check = [&](auto&& self, const SPTree& node) -> void {
      GSet g = gset_of(node);
      CHECK(g.max() <= node.leaf_count());
      if (node.kind() != SPTree::Kind::Leaf) {
        self(self, node.first());
        self(self, node.second());
      }
    };
    check(check, t);
    // decompose then evaluate gives the same order up to labels.
    Poset back = evaluate(decompose(p), &p.labels());
    for (PointId x = 0; x < p.size(); ++x)
      for (PointId y = 0; y < p.size(); ++y)
        CHECK(back.leq(back.index_of(p.label(x)), back.index_of(p.label(y))) == p.leq(x, y));
  }
}

TEST_CASE("grundy_nfree on 200 points is fast") {
  Rng rng(29);
  Poset p = evaluate(random_sp_tree(rng, 200));
  auto start = std::chrono::steady_clock::now();
  grundy_nfree(p);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  CHECK(ms < 1000);
}
