#pragma once

#include <cstddef>
#include <vector>

#include "posetlab/impartial.h"
#include "posetlab/poset.h"

namespace posetlab {

// Least k with 2^k > max(|A| - t, t - 1). For t = 1 this is the least k
// with 2^k >= |A|.
std::size_t threshold_k(std::size_t size, std::size_t t);

// ((A / C_{2^k-t}) + C_{2^k}) / C_t + A with k = threshold_k(|A|, t).
// g is 2^(k+1) when g(A) < t and 0 otherwise. Throws ColoredInput, and
// BadParams for t = 0.
Poset threshold(const Poset& a, std::size_t t);

// threshold(A, 1): flips the outcome of A.
Poset flip(const Poset& a);

// Binary search for g(P) using one outcome query on threshold(P, mid) per
// step; exactly `bound_bits` queries. Needs |P| < 2^bound_bits. The queried
// thresholds are appended to `queries` when given.
Nimber grundy_via_threshold(const Poset& p, const OutcomeOracle& oracle, std::size_t bound_bits,
                            std::vector<std::size_t>* queries = nullptr);

}  // namespace posetlab
