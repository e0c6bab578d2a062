#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "posetlab/poset.h"

namespace posetlab {

Poset chain(std::size_t n);      // C_n, labels c0 < c1 < ...
Poset antichain(std::size_t n);  // A_n
Poset v_poset(std::size_t n);    // V_n = A_n / C_1
Poset lambda_poset(std::size_t n);  // Λ_n = C_1 / A_n
Poset diamond(std::size_t n);    // ◇_n = C_1 / A_n / C_1
Poset nim(std::span<const std::size_t> stacks);

// rows x cols grid ordered componentwise with the bottom-left square
// removed; the top-right square is the maximum.
Poset chomp(std::size_t rows, std::size_t cols);

// Divisors of n other than 1, ordered by divisibility.
Poset divisors(std::size_t n);

// Hackendot forest from a parent array; roots (parent < 0) are maxima and
// every node lies below its parent.
Poset forest(std::span<const long> parents);

// Subsets of {1..n} whose size is in `sizes`, ordered by inclusion.
Poset levels(std::size_t n, std::span<const std::size_t> sizes);

// Dispatch by family name: chain, antichain, v, lambda, diamond, nim, chomp,
// divisors, forest, levels. Throws BadParams on unknown names or bad
// parameters.
Poset generate(std::string_view family, std::span<const long> params);

}  // namespace posetlab
