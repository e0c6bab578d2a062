#pragma once

#include <chrono>
#include <cstddef>

#include "posetlab/error.h"

namespace posetlab {

struct SolveBudget {
  std::size_t max_positions = 10'000'000;
  std::size_t max_millis = 30'000;
};

// Counts charged positions against a SolveBudget. The clock is read once
// every 1024 charges.
class BudgetMeter {
 public:
  explicit BudgetMeter(SolveBudget budget = {})
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void charge() {
    ++explored_;
    if (explored_ > budget_.max_positions) throw BudgetExceeded(explored_, elapsed_millis());
    if ((explored_ & 1023) == 0 && elapsed_millis() > budget_.max_millis)
      throw BudgetExceeded(explored_, elapsed_millis());
  }

  std::size_t explored() const { return explored_; }
  std::size_t elapsed_millis() const {
    return static_cast<std::size_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start_)
                                        .count());
  }

 private:
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t explored_ = 0;
};

}  // namespace posetlab
