#include "relalg/bigint.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "relalg/errors.hpp"

namespace relalg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::power(u64 base, u64 exponent) {
  BigUint out(1);
  for (u64 i = 0; i < exponent; ++i) out.mul_small(base);
  return out;
}

BigUint BigUint::two_to(u64 exponent) {
  return BigUint(1).shifted_left(exponent);
}

BigUint& BigUint::mul_small(u64 m) {
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 prod = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(prod);
    carry = static_cast<u64>(prod >> 64);
  }
  if (carry) limbs_.push_back(carry);
  trim();
  return *this;
}

BigUint& BigUint::add_small(u64 v) {
  u64 carry = v;
  for (auto& limb : limbs_) {
    u128 sum = static_cast<u128>(limb) + carry;
    limb = static_cast<u64>(sum);
    carry = static_cast<u64>(sum >> 64);
    if (!carry) break;
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint BigUint::shifted_left(u64 bits) const {
  if (limbs_.size() == 1 && limbs_[0] == 0) return BigUint(0);
  BigUint out;
  u64 limb_shift = bits / 64, bit_shift = bits % 64;
  out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i + limb_shift] |= bit_shift ? (limbs_[i] << bit_shift) : limbs_[i];
    if (bit_shift)
      out.limbs_[i + limb_shift + 1] |= limbs_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

int BigUint::compare(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigUint::compare(double d) const {
  if (std::isnan(d)) throw DomainError("cannot compare big integer with NaN");
  if (d < 0) return 1;
  if (std::isinf(d)) return -1;
  // Write d exactly as m / 2^s with integers m >= 0, s >= 0, then compare
  // this * 2^s against m.  Every finite double is such a dyadic rational.
  int exp2 = 0;
  double mant = std::frexp(d, &exp2);  // d = mant * 2^exp2, mant in [0.5, 1)
  long long num = static_cast<long long>(std::ldexp(mant, 53));  // exact
  long long shift = exp2 - 53;
  BigUint m(static_cast<u64>(num));
  if (shift >= 0)
    return compare(m.shifted_left(static_cast<u64>(shift)));
  return shifted_left(static_cast<u64>(-shift)).compare(m);
}

std::size_t BigUint::bit_length() const {
  const u64 top = limbs_.back();
  if (top == 0) return 0;  // value 0
  return (limbs_.size() - 1) * 64 + (64 - std::countl_zero(top));
}

double BigUint::log2() const {
  std::size_t bl = bit_length();
  if (bl == 0) return -std::numeric_limits<double>::infinity();
  if (bl <= 64) return std::log2(static_cast<double>(limbs_.back()));
  // take the top 64 bits for the mantissa
  std::size_t drop = bl - 64;
  std::size_t limb = drop / 64, off = drop % 64;
  u64 top = limbs_[limb] >> off;
  if (off) top |= limbs_[limb + 1] << (64 - off);
  return std::log2(static_cast<double>(top)) + static_cast<double>(drop);
}

std::string BigUint::to_decimal() const {
  std::vector<u64> work = limbs_;
  std::string out;
  auto is_zero = [&] {
    for (u64 w : work)
      if (w) return false;
    return true;
  };
  if (is_zero()) return "0";
  constexpr u64 kChunk = 1'000'000'000'000'000'000ull;  // 10^18
  std::vector<u64> chunks;
  while (!is_zero()) {
    u64 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u128 cur = (static_cast<u128>(rem) << 64) | work[i];
      work[i] = static_cast<u64>(cur / kChunk);
      rem = static_cast<u64>(cur % kChunk);
    }
    chunks.push_back(rem);
    while (work.size() > 1 && work.back() == 0) work.pop_back();
  }
  out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(18 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace relalg
