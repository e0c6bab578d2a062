#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace posetlab {

using Nimber = std::size_t;

// Finite set of naturals kept sorted and duplicate free.
class GSet {
 public:
  GSet() = default;
  GSet(std::initializer_list<Nimber> xs) : elems_(xs) { normalize(); }
  explicit GSet(std::vector<Nimber> xs) : elems_(std::move(xs)) { normalize(); }

  void insert(Nimber x) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) elems_.insert(it, x);
  }
  bool contains(Nimber x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Nimber>& elements() const { return elems_; }
  Nimber max() const { return elems_.empty() ? 0 : elems_.back(); }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const GSet&, const GSet&) = default;

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }
  std::vector<Nimber> elems_;
};

// The i-th (0-based) least natural number not in `a`.
inline Nimber mex(const GSet& a, std::size_t i = 0) {
  Nimber candidate = 0;
  std::size_t skipped = 0;
  for (Nimber x : a) {
    // Gap [candidate, x) holds x - candidate excluded numbers.
    if (x >= candidate) {
      if (skipped + (x - candidate) > i) return candidate + (i - skipped);
      skipped += x - candidate;
      candidate = x + 1;
    }
  }
  return candidate + (i - skipped);
}

inline Nimber nim_xor(Nimber m, Nimber n) { return m ^ n; }

}  // namespace posetlab
