#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relalg {

// Unsigned arbitrary-precision integer, just big enough for the exact
// power-of-2 versus power-of-3 comparisons the bound arithmetic needs.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v) : limbs_{v} {}

  static BigUint power(std::uint64_t base, std::uint64_t exponent);
  static BigUint two_to(std::uint64_t exponent);  // 2^exponent

  BigUint& mul_small(std::uint64_t m);
  BigUint& add_small(std::uint64_t v);
  BigUint shifted_left(std::uint64_t bits) const;

  // -1 / 0 / +1 for < / == / >.
  int compare(const BigUint& other) const;
  // Exact comparison against a finite double (no rounding of *this).
  int compare(double d) const;

  std::size_t bit_length() const;
  bool fits_u64() const { return limbs_.size() == 1; }
  std::uint64_t as_u64() const { return limbs_[0]; }

  double log2() const;       // accurate to double precision
  std::string to_decimal() const;

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const BigUint& a, const BigUint& b) {
    return a.compare(b) <= 0;
  }

 private:
  void trim();
  // little-endian 64-bit limbs, no leading zero limb except for value 0
  std::vector<std::uint64_t> limbs_;
};

}  // namespace relalg
