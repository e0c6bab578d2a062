#include "posetlab/families.h"

#include <bit>
#include <string>

#include "posetlab/error.h"

namespace posetlab {

namespace {

Poset build(std::vector<std::string> labels, std::vector<PointSet> up) {
  std::vector<std::optional<Color>> colors(labels.size());
  return Poset::from_up_sets(std::move(labels), std::move(colors), std::move(up));
}

std::vector<PointSet> reflexive(std::size_t n) {
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  return up;
}

}  // namespace

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return build(std::move(labels), std::move(up));
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return build(std::move(labels), reflexive(n));
}

Poset v_poset(std::size_t n) { return series(antichain(n), with_prefix(chain(1), "bot_")); }

Poset lambda_poset(std::size_t n) { return series(with_prefix(chain(1), "top_"), antichain(n)); }

Poset diamond(std::size_t n) {
  return series(with_prefix(chain(1), "top_"), series(antichain(n), with_prefix(chain(1), "bot_")));
}

Poset nim(std::span<const std::size_t> stacks) {
  Poset out;
  for (std::size_t j = 0; j < stacks.size(); ++j)
    out = parallel(out, with_prefix(chain(stacks[j]), "s" + std::to_string(j) + "_"));
  return out;
}

Poset chomp(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::BadParams, "chomp needs positive dimensions");
  std::vector<std::pair<std::size_t, std::size_t>> squares;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (r == 0 && c == 0) continue;
      squares.emplace_back(r, c);
      labels.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
    }
  const std::size_t n = squares.size();
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (squares[i].first <= squares[j].first && squares[i].second <= squares[j].second)
        up[i].set(j);
  return build(std::move(labels), std::move(up));
}

Poset divisors(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "divisors needs a positive integer");
  std::vector<std::size_t> ds;
  for (std::size_t d = 2; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  std::vector<std::string> labels;
  std::vector<PointSet> up(ds.size(), PointSet(ds.size()));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    labels.push_back(std::to_string(ds[i]));
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (ds[j] % ds[i] == 0) up[i].set(j);
  }
  return build(std::move(labels), std::move(up));
}

Poset forest(std::span<const long> parents) {
  const std::size_t n = parents.size();
  std::vector<std::string> labels;
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("h" + std::to_string(i));
    std::size_t v = i, steps = 0;
    up[i].set(i);
    while (parents[v] >= 0) {
      if (static_cast<std::size_t>(parents[v]) >= n || ++steps > n)
        throw Error(ErrorKind::BadParams, "forest parent array is not a forest");
      v = static_cast<std::size_t>(parents[v]);
      up[i].set(v);
    }
  }
  return build(std::move(labels), std::move(up));
}

Poset levels(std::size_t n, std::span<const std::size_t> sizes) {
  if (n == 0 || n > 20) throw Error(ErrorKind::BadParams, "levels needs 1 <= n <= 20");
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
    for (auto k : sizes)
      if (static_cast<std::size_t>(std::popcount(s)) == k) {
        sets.push_back(s);
        break;
      }
  std::vector<std::string> labels;
  std::vector<PointSet> up(sets.size(), PointSet(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string l = "{";
    bool first = true;
    for (std::size_t b = 0; b < n; ++b)
      if (sets[i] >> b & 1) {
        l += (first ? "" : ",") + std::to_string(b + 1);
        first = false;
      }
    labels.push_back(l + "}");
    for (std::size_t j = 0; j < sets.size(); ++j)
      if ((sets[i] & ~sets[j]) == 0) up[i].set(j);
  }
  return build(std::move(labels), std::move(up));
}

namespace {

std::size_t positive(long v, std::string_view what) {
  if (v <= 0) throw Error(ErrorKind::BadParams, std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

void expect_count(std::span<const long> params, std::size_t n, std::string_view family) {
  if (params.size() != n)
    throw Error(ErrorKind::BadParams, std::string(family) + " expects " + std::to_string(n) +
                                          " parameter(s)");
}

}  // namespace

Poset generate(std::string_view family, std::span<const long> params) {
  if (family == "chain") {
    expect_count(params, 1, family);
    return chain(positive(params[0], "n"));
  }
  if (family == "antichain") {
    expect_count(params, 1, family);
    return antichain(positive(params[0], "n"));
  }
  if (family == "v") {
    expect_count(params, 1, family);
    return v_poset(positive(params[0], "n"));
  }
  if (family == "lambda") {
    expect_count(params, 1, family);
    return lambda_poset(positive(params[0], "n"));
  }
  if (family == "diamond") {
    expect_count(params, 1, family);
    return diamond(positive(params[0], "n"));
  }
  if (family == "nim") {
    if (params.empty()) throw Error(ErrorKind::BadParams, "nim expects stack sizes");
    std::vector<std::size_t> stacks;
    for (auto v : params) stacks.push_back(positive(v, "stack size"));
    return nim(stacks);
  }
  if (family == "chomp") {
    expect_count(params, 2, family);
    return chomp(positive(params[0], "rows"), positive(params[1], "cols"));
  }
  if (family == "divisors") {
    expect_count(params, 1, family);
    return divisors(positive(params[0], "n"));
  }
  if (family == "forest") {
    if (params.empty()) throw Error(ErrorKind::BadParams, "forest expects a parent array");
    return forest(params);
  }
  if (family == "levels") {
    if (params.size() < 2) throw Error(ErrorKind::BadParams, "levels expects n and level sizes");
    std::size_t n = positive(params[0], "n");
    std::vector<std::size_t> ks;
    for (std::size_t i = 1; i < params.size(); ++i) {
      if (params[i] < 0 || static_cast<std::size_t>(params[i]) > n)
        throw Error(ErrorKind::BadParams, "level size out of range");
      ks.push_back(static_cast<std::size_t>(params[i]));
    }
    return levels(n, ks);
  }
  throw Error(ErrorKind::BadParams, "unknown family '" + std::string(family) + "'");
}

}  // namespace posetlab
