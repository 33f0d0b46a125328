#pragma once

#include <cstdint>

#include "treesigma/rational.hpp"

namespace treesigma {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

// Exact slack value F(i, j) kept as an unreduced fraction with the positive
// denominator delta * i * j. Every numerator term is an integer polynomial in
// (delta, i, j) of total degree <= 5, so delta <= 10^6 stays far inside int128.
struct ScaledSlack {
  int128 num;
  int128 den;

  int sign() const { return (num > 0) - (num < 0); }
  Rational to_rational() const;
};

inline constexpr std::int64_t kScaledSlackMaxDelta = 1'000'000;

inline ScaledSlack scaled_slack(std::int64_t delta, std::int64_t i, std::int64_t j) {
  const int128 d = delta;
  const int128 a = 4 * d - 6;
  const int128 ij = int128{i} * j;
  const int128 diff = int128{i} - j;
  // d*i*j * [a (1/i + 1/j) + (d^2 - 6d + 3) + 6/d - (i-j)^2]
  const int128 num = a * d * (int128{i} + j) + (d * d - 6 * d + 3) * d * ij + 6 * ij - d * ij * diff * diff;
  return {num, d * ij};
}

/// Sign of (lhs_weight * lhs) - (rhs_weight * rhs), computed exactly. Falls back
/// to Rational arithmetic if an int128 cross product would overflow.
int compare_scaled(const ScaledSlack& lhs, std::int64_t lhs_weight, const ScaledSlack& rhs, std::int64_t rhs_weight);

}  // namespace treesigma
