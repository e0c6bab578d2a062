#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetlab/point_set.h"

namespace posetlab {

using PointId = std::size_t;

enum class Color { Black, White };
enum class Representation { PO, HD, AR };
enum class ImpartialOutcome { ExistsWin, ForallWin };

std::string_view to_string(Color c);
std::string_view to_string(Representation r);
std::string_view to_string(ImpartialOutcome o);
Color opposite(Color c);

struct PointSpec {
  std::string label;
  std::optional<Color> color;
};

// An arc lo -> hi asserts lo is below hi. In the AR representation the
// points reachable from a vertex are exactly the points above it.
struct Arc {
  std::string lo;
  std::string hi;
};

// Immutable finite poset. The order is stored as reflexive up-set and
// down-set rows (bit matrices) plus the cover relation (transitive
// reduction). Points are either all colored or all uncolored.
class Poset {
 public:
  Poset() = default;

  static Poset from_edges(std::span<const PointSpec> points,
                          std::span<const Arc> arcs, Representation repr);

  // `up[x]` must be the reflexive up-set of x under a partial order.
  static Poset from_up_sets(std::vector<std::string> labels,
                            std::vector<std::optional<Color>> colors,
                            std::vector<PointSet> up);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool is_colored() const { return !colors_.empty() && colors_.front().has_value(); }

  const std::string& label(PointId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Color> color(PointId x) const { return colors_.at(x); }
  const std::vector<std::optional<Color>>& colors() const { return colors_; }

  std::optional<PointId> find(std::string_view label) const;
  PointId index_of(std::string_view label) const;  // throws UnknownLabel

  bool leq(PointId x, PointId y) const { return up_[x].test(y); }
  bool less(PointId x, PointId y) const { return x != y && up_[x].test(y); }
  bool comparable(PointId x, PointId y) const { return leq(x, y) || leq(y, x); }

  const PointSet& up(PointId x) const { return up_[x]; }
  const PointSet& down(PointId x) const { return down_[x]; }
  const std::vector<std::pair<PointId, PointId>>& covers() const { return covers_; }
  PointSet all_points() const { return PointSet::full(size()); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<Color>> colors_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::vector<std::pair<PointId, PointId>> covers_;
  std::unordered_map<std::string, PointId> index_;
};

// P_x: the poset with every y >= x removed. Errors: UnknownPoint, and
// playing on the empty poset is rejected as UnknownPoint too.
Poset play(const Poset& p, PointId x);

// Induced subposet on `keep`, preserving index order.
Poset restrict(const Poset& p, const PointSet& keep);

// Disjoint union. Labels of `q` that collide with labels of `p` are primed
// (a trailing ' is appended until unique).
Poset parallel(const Poset& p, const Poset& q);

// Disjoint union with every point of `lower` below every point of `upper`
// ("upper over lower").
Poset series(const Poset& upper, const Poset& lower);

Poset with_prefix(const Poset& p, std::string_view prefix);
Poset with_colors(const Poset& p, std::span<const Color> colors);
Poset without_colors(const Poset& p);
Poset swap_colors(const Poset& p);

bool is_down_set(const Poset& p, const PointSet& s);
std::vector<PointId> minimal_points(const Poset& p);
std::vector<PointId> maximal_points(const Poset& p);

// Length (number of points) of the longest chain.
std::size_t height(const Poset& p);

}  // namespace posetlab
