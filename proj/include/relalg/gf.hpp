#pragma once

#include <vector>

#include "relalg/errors.hpp"

namespace relalg {

bool is_prime(int n);
// Returns true and fills p, k when q = p^k with p prime, k >= 1.
bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

// GF(p^k) with elements encoded as integers 0..q-1: the element with
// polynomial coordinates c_0 + c_1 x + ... encodes as c_0 + c_1 p + ...
// For k > 1 the modulus is the least irreducible monic polynomial of degree
// k over GF(p) under that same encoding, found by exhaustive search, so the
// tables are reproducible.  Field axioms are verified exhaustively at
// construction.
class FiniteField {
 public:
  FiniteField() = default;  // empty field; only make() produces a usable one
  static FiniteField make(int q, int ceiling = 16);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  // Coefficients c_0..c_k of the modulus (monic, c_k = 1); {} when k == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inverse(int a) const;  // a != 0

 private:
  void build_tables();
  void verify_axioms() const;

  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

inline FiniteField make_field(int q, int ceiling = 16) {
  return FiniteField::make(q, ceiling);
}

}  // namespace relalg
