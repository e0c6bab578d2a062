#include "posetlab/constructions.h"

#include <algorithm>

#include "posetlab/error.h"
#include "posetlab/families.h"

namespace posetlab {

std::size_t threshold_k(std::size_t size, std::size_t t) {
  const std::size_t over = size > t ? size - t : 0;
  const std::size_t bound = std::max(over, t == 0 ? 0 : t - 1);
  std::size_t k = 0;
  while ((std::size_t{1} << k) <= bound) ++k;
  return k;
}

Poset threshold(const Poset& a, std::size_t t) {
  if (a.is_colored()) throw Error(ErrorKind::ColoredInput, "threshold needs an uncolored poset");
  if (t == 0) throw Error(ErrorKind::BadParams, "threshold needs t >= 1");
  const std::size_t k = threshold_k(a.size(), t);
  const std::size_t big = std::size_t{1} << k;
  Poset b = series(with_prefix(a, "in."), with_prefix(chain(big - t), "low."));
  Poset c = parallel(b, with_prefix(chain(big), "side."));
  Poset d = series(c, with_prefix(chain(t), "base."));
  return parallel(d, with_prefix(a, "out."));
}

Poset flip(const Poset& a) { return threshold(a, 1); }

Nimber grundy_via_threshold(const Poset& p, const OutcomeOracle& oracle, std::size_t bound_bits,
                            std::vector<std::size_t>* queries) {
  if (bound_bits >= 32 || (std::size_t{1} << bound_bits) <= p.size())
    throw Error(ErrorKind::BadParams, "need |P| < 2^bound_bits");
  // Invariant: lo <= g(P) < hi.
  std::size_t lo = 0, hi = std::size_t{1} << bound_bits;
  for (std::size_t step = 0; step < bound_bits; ++step) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (queries) queries->push_back(mid);
    if (oracle(threshold(p, mid)) == ImpartialOutcome::ExistsWin)
      hi = mid;
    else
      lo = mid;
  }
  if (lo > p.size())
    throw Error(ErrorKind::OracleInconsistent, "search ended above |P|, which no g-number can reach");
  return lo;
}

}  // namespace posetlab
