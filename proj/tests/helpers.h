#pragma once

#include <map>
#include <string>
#include <vector>

#include "posetlab/families.h"
#include "posetlab/poset.h"

namespace testing_util {

using namespace posetlab;

inline Poset make(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> arcs,
                  Representation repr = Representation::HD, std::vector<std::optional<Color>> colors = {}) {
  std::vector<PointSpec> points;
  for (std::size_t i = 0; i < labels.size(); ++i)
    points.push_back({labels[i], colors.empty() ? std::nullopt : colors[i]});
  std::vector<Arc> as;
  for (auto& [lo, hi] : arcs) as.push_back({lo, hi});
  return Poset::from_edges(points, as, repr);
}

// The four-point N: a < b, c < d, c < b.
inline Poset n_poset() { return make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"c", "b"}}); }

// Plain Grundy recursion over remaining point sets, straight from the
// definition: no component splitting, no move ordering, std::map memo.
class NaiveGrundy {
 public:
  explicit NaiveGrundy(const Poset& p) : p_(p) {}

  std::size_t operator()() { return at(std::vector<bool>(p_.size(), true)); }

  std::size_t at(const std::vector<bool>& rest) {
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    std::vector<bool> seen(p_.size() + 2, false);
    for (std::size_t x = 0; x < p_.size(); ++x) {
      if (!rest[x]) continue;
      std::vector<bool> next = rest;
      for (std::size_t y = 0; y < p_.size(); ++y)
        if (p_.leq(x, y)) next[y] = false;
      seen[at(next)] = true;
    }
    std::size_t g = 0;
    while (seen[g]) ++g;
    memo_[rest] = g;
    return g;
  }

 private:
  const Poset& p_;
  std::map<std::vector<bool>, std::size_t> memo_;
};

inline std::size_t naive_grundy(const Poset& p) { return NaiveGrundy(p)(); }

inline std::vector<std::string> labels_of(const Poset& p, const std::vector<PointId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(p.label(x));
  return out;
}

}  // namespace testing_util
