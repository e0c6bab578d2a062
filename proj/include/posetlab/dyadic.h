#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace posetlab {

// Exact value numerator / 2^exponent, kept with exponent == 0 or an odd
// numerator.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)
  Dyadic(std::int64_t numerator, unsigned exponent);

  std::int64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "7", "-1/2", "13/4".
  std::string to_string() const;
  // Inverse of to_string; throws BadParams.
  static Dyadic parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

// The simplest dyadic strictly between lo and hi, where a missing bound is
// infinite: an integer of least magnitude if one fits, otherwise a/2^k with
// k minimal. Requires lo < hi.
Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi);

}  // namespace posetlab
