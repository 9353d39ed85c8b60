#include "gridfary/exact.h"

#include <cmath>

namespace gridfary {

uint64_t isqrt(uint128 s) {
  if (s == 0) return 0;
  // Seed from long double (64-bit mantissa), then correct exactly.
  long double approx = sqrtl(static_cast<long double>(s));
  uint64_t r = approx < 1.0L ? 0 : static_cast<uint64_t>(approx);
  if (r > 0xFFFFFFFFFFFFFFFEULL) r = 0xFFFFFFFFFFFFFFFEULL;
  while (static_cast<uint128>(r) * r > s) --r;
  while (static_cast<uint128>(r + 1) * (r + 1) <= s) ++r;
  return r;
}

bool is_perfect_square(uint128 s, uint64_t* root) {
  uint64_t r = isqrt(s);
  if (root) *root = r;
  return static_cast<uint128>(r) * r == s;
}

std::string to_string_128(uint128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

std::string to_string_128(int128 v) {
  if (v < 0) return "-" + to_string_128(static_cast<uint128>(-v));
  return to_string_128(static_cast<uint128>(v));
}

int bit_width_128(uint128 v) {
  int bits = 0;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

BigUint BigUint::from(uint128 v) {
  BigUint out;
  while (v > 0) {
    out.limbs.push_back(static_cast<uint64_t>(v));
    v >>= 64;
  }
  return out;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  BigUint out;
  if (a.limbs.empty() || b.limbs.empty()) return out;
  out.limbs.assign(a.limbs.size() + b.limbs.size(), 0);
  for (size_t i = 0; i < a.limbs.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs.size(); ++j) {
      uint128 cur = static_cast<uint128>(a.limbs[i]) * b.limbs[j] +
                    out.limbs[i + j] + carry;
      out.limbs[i + j] = static_cast<uint64_t>(cur);
      carry = static_cast<uint64_t>(cur >> 64);
    }
    out.limbs[i + b.limbs.size()] += carry;
  }
  while (!out.limbs.empty() && out.limbs.back() == 0) out.limbs.pop_back();
  return out;
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
  if (a.limbs.size() != b.limbs.size())
    return a.limbs.size() < b.limbs.size() ? -1 : 1;
  for (size_t i = a.limbs.size(); i-- > 0;) {
    if (a.limbs[i] != b.limbs[i]) return a.limbs[i] < b.limbs[i] ? -1 : 1;
  }
  return 0;
}

double BigUint::approx() const {
  double out = 0;
  for (size_t i = limbs.size(); i-- > 0;) {
    out = out * 18446744073709551616.0 + static_cast<double>(limbs[i]);
  }
  return out;
}

double BigRatio::approx() const {
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

uint128 BigRatio::ceil_value() const { return (num + den - 1) / den; }

std::string BigRatio::str() const {
  return to_string_128(num) + "/" + to_string_128(den);
}

}  // namespace gridfary
