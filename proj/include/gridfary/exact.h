#ifndef GRIDFARY_EXACT_H
#define GRIDFARY_EXACT_H

#include <cstdint>
#include <string>
#include <vector>

// Float-free integer arithmetic helpers. Everything that decides a
// pass/fail anywhere in the library goes through these.

namespace gridfary {

using int128 = __int128;
using uint128 = unsigned __int128;

inline int sign_of(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Floor of the square root, exact for the full 128-bit range we use.
uint64_t isqrt(uint128 s);

/// True iff s is a perfect square; optionally reports the root.
bool is_perfect_square(uint128 s, uint64_t* root = nullptr);

std::string to_string_128(int128 v);
std::string to_string_128(uint128 v);

int bit_width_128(uint128 v);

// Rational over-approximation of pi^2: pi^2 <= kPi2Num / kPi2Den.
// Upper-bound checks built on it can only be looser than the true
// bound, never tighter, so a reported pass is a true pass.
inline constexpr long long kPi2Num = 98696044011LL;
inline constexpr long long kPi2Den = 10000000000LL;

/// Minimal little-endian unsigned bignum. Only what the exact bound
/// comparisons need: construction, multiplication, comparison.
struct BigUint {
  std::vector<uint64_t> limbs;  // little-endian, normalized (no trailing zeros)

  static BigUint from(uint128 v);
  friend BigUint operator*(const BigUint& a, const BigUint& b);
  /// -1, 0, +1 for a < b, a == b, a > b.
  static int cmp(const BigUint& a, const BigUint& b);
  double approx() const;
};

/// Nonnegative rational with 128-bit numerator/denominator.
struct BigRatio {
  uint128 num = 0;
  uint128 den = 1;

  double approx() const;
  uint128 ceil_value() const;
  std::string str() const;  // "num/den"
};

}  // namespace gridfary

#endif
