#include "doctest.h"
#include "helpers.h"
#include "posetlab/constructions.h"
#include "posetlab/error.h"
#include "posetlab/families.h"
#include "posetlab/nfree.h"
#include "posetlab/random.h"

using namespace posetlab;
using testing_util::naive_grundy;

TEST_CASE("threshold_k") {
  CHECK(threshold_k(0, 1) == 0);
  CHECK(threshold_k(1, 1) == 0);
  CHECK(threshold_k(2, 1) == 1);
  CHECK(threshold_k(5, 1) == 3);
  CHECK(threshold_k(8, 1) == 3);
  CHECK(threshold_k(1, 2) == 1);
  CHECK(threshold_k(3, 2) == 1);
  CHECK(threshold_k(10, 16) == 4);
}

TEST_CASE("flip examples") {
  Poset e = flip(Poset());
  CHECK(e.size() == 2);
  CHECK(grundy(e) == 2);

  Poset f1 = flip(chain(1));
  CHECK(f1.size() == 4);
  CHECK(grundy(f1) == 0);
  CHECK(naive_grundy(f1) == 0);

  Poset f2 = flip(antichain(2));
  CHECK(grundy(f2) == 4);
  CHECK(naive_grundy(f2) == 4);
  CHECK_THROWS_AS(flip(with_colors(chain(1), std::vector<Color>{Color::Black})), Error);
}

TEST_CASE("threshold examples") {
  CHECK(grundy(threshold(chain(3), 2)) == 0);
  Poset t = threshold(chain(1), 2);
  CHECK(t.size() == 6);  // C_1/C_0 + C_2, then /C_2, then + C_1
  CHECK(grundy(t) == 4);
  CHECK(naive_grundy(t) == 4);
  CHECK_THROWS_AS(threshold(chain(1), 0), Error);
}

TEST_CASE("threshold(A, 1) has the shape of flip(A)") {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    Poset a = random_poset(rng, i % 9, 0.3);
    Poset f = flip(a), t = threshold(a, 1);
    REQUIRE(f.size() == t.size());
    for (PointId x = 0; x < f.size(); ++x)
      for (PointId y = 0; y < f.size(); ++y) CHECK(f.leq(x, y) == t.leq(t.index_of(f.label(x)), t.index_of(f.label(y))));
  }
}

TEST_CASE("flip on random posets") {
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    Poset a = random_poset(rng, 1 + i % 10, 0.3);
    const auto ga = grundy(a);
    const std::size_t k = threshold_k(a.size(), 1);
    Poset f = flip(a);
    CHECK(f.size() <= 6 * a.size());
    CHECK(grundy(f) == (ga == 0 ? (std::size_t{2} << k) : 0));
  }
}

TEST_CASE("flip keeps N-freeness") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    Poset a = evaluate(random_sp_tree(rng, 1 + i % 10));
    Poset f = flip(a);
    CHECK(!find_n(f));
    CHECK(grundy_nfree(f) == grundy(f));
  }
}

TEST_CASE("threshold on random posets") {
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    Poset a = random_poset(rng, 1 + i % 8, 0.3);
    const std::size_t t = 1 + (i * 5) % 16;
    const std::size_t k = threshold_k(a.size(), t);
    CHECK(grundy(threshold(a, t)) == (grundy(a) < t ? (std::size_t{2} << k) : 0));
  }
}

TEST_CASE("grundy_via_threshold") {
  OutcomeOracle direct = [](const Poset& q) { return outcome(q).outcome; };
  std::vector<std::size_t> queries;
  CHECK(grundy_via_threshold(chain(5), direct, 3, &queries) == 5);
  CHECK(queries == std::vector<std::size_t>{4, 6, 5});
  CHECK(grundy_via_threshold(Poset(), direct, 1) == 0);
  CHECK_THROWS_AS(grundy_via_threshold(chain(8), direct, 3), Error);

  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    Poset p = random_poset(rng, 1 + i % 10, 0.3);
    std::size_t bits = std::bit_width(p.size());
    std::vector<std::size_t> q;
    CHECK(grundy_via_threshold(p, direct, bits, &q) == grundy(p));
    CHECK(q.size() == bits);
  }

  OutcomeOracle liar = [](const Poset&) { return ImpartialOutcome::ForallWin; };
  CHECK_THROWS_AS(grundy_via_threshold(chain(2), liar, 3), Error);
}
