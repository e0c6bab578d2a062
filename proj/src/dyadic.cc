#include "posetlab/dyadic.h"

#include <bit>

#include "posetlab/error.h"

namespace posetlab {

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent) : num_(numerator), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2) == 0) {
    num_ /= 2;
    --exp_;
  }
}

namespace {

// Numerators of a and b over the common denominator 2^max(exp).
std::pair<std::int64_t, std::int64_t> aligned(const Dyadic& a, const Dyadic& b, unsigned& exp) {
  exp = std::max(a.exponent(), b.exponent());
  if (exp > 62) throw Error(ErrorKind::BadParams, "dyadic exponent overflow");
  return {a.numerator() * (std::int64_t{1} << (exp - a.exponent())),
          b.numerator() * (std::int64_t{1} << (exp - b.exponent()))};
}

std::int64_t floor_div_pow2(std::int64_t num, unsigned exp) {
  // Arithmetic shift floors for negative numbers too.
  return num >> exp;
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned exp = 0;
  auto [x, y] = aligned(a, b, exp);
  return Dyadic(x + y, exp);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned exp = 0;
  auto [x, y] = aligned(a, b, exp);
  return x <=> y;
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Dyadic(std::stoll(text));
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(den)))
      throw Error(ErrorKind::BadParams, "denominator must be a power of two");
    return Dyadic(num, static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(den))));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadParams, "not a dyadic rational: '" + text + "'");
  }
}

Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi) {
  if (lo && hi && !(*lo < *hi)) throw Error(ErrorKind::BadParams, "empty interval");
  if ((!lo || *lo < Dyadic(0)) && (!hi || Dyadic(0) < *hi)) return Dyadic(0);
  if (!hi) return Dyadic(floor_div_pow2(lo->numerator(), lo->exponent()) + 1);
  if (!lo) return -Dyadic(floor_div_pow2(-hi->numerator(), hi->exponent()) + 1);
  // Both bounds on the same side of zero: search the least exponent k with a
  // multiple of 2^-k strictly inside, taking the one nearest zero.
  const bool positive = Dyadic(0) <= *lo;
  for (unsigned k = 0; k <= 62; ++k) {
    if (positive) {
      unsigned e = 0;
      auto [l, unused] = aligned(*lo, Dyadic(0), e);
      static_cast<void>(unused);
      // Least a with a/2^k > lo.
      std::int64_t a = (k >= e ? l * (std::int64_t{1} << (k - e)) : floor_div_pow2(l, e - k)) + 1;
      Dyadic cand(a, k);
      if (cand < *hi) return cand;
    } else {
      unsigned e = 0;
      auto [h, unused] = aligned(*hi, Dyadic(0), e);
      static_cast<void>(unused);
      std::int64_t neg_h = -h;
      std::int64_t a = (k >= e ? neg_h * (std::int64_t{1} << (k - e)) : floor_div_pow2(neg_h, e - k)) + 1;
      Dyadic cand(-a, k);
      if (*lo < cand) return cand;
    }
  }
  throw Error(ErrorKind::BadParams, "interval too narrow for 62-bit dyadics");
}

}  // namespace posetlab
