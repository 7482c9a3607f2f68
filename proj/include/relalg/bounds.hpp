#pragma once

#include <map>
#include <string>
#include <vector>

#include "relalg/bigint.hpp"

namespace relalg {

// log2(3), the constant behind every bound here
double log2_3();

// Exact order 2 * 3^(2n+1).
BigUint lyndon_order(long long n);

// Largest k with 2^(k+1) <= 2 * 3^(2n+1), by exact big-integer arithmetic
// (equivalently floor((2n+1) * log2 3), but the exact form is authoritative).
long long k_max(long long n);

long long min_vars(long long n);  // k_max(n) + 1
long long min_len(long long n);   // 2 * min_vars(n) - 2

// f(n) = 2 log2(3) (2n+1) - 2, as a function of a real argument.
double f_of(double n);

// 2 log2(3) (log3(L/2 - 1) - 2) - 2 where L = log2(m); domain L >= 8.
double beta_lower_from_log2m(double L);

// Same bound as a function of the atom count M; domain M/2 - 1 > 0.
double beta_star_lower(long long M);

// Largest n >= 1 with 2 * 3^(2n+1) + 2 <= L (exact integer comparison
// against the dyadic rational L); domain L >= 56.
long long interval_n(double L);

struct ChainCheck {
  std::string name;
  bool pass = false;
  std::map<std::string, double> values;
  std::string detail;
};

struct ChainReport {
  long long n = 0;
  std::vector<ChainCheck> checks;
  bool all_pass() const;
};

// Numeric verification of the derivation at both interval endpoints
// L = 2*3^(2n+1)+2 and L = 2*3^(2n+3)+2: the interval inequality
// (1/2)log3((1/2)L - 1) - 3/2 <= n, the weakening
// beta_lower_from_log2m(L) <= f(interval_n(L)), and the exact exponent
// identity pinning 2^(k_max+1) <= 2*3^(2n+1) < 2^(k_max+2) together with its
// floating-point shadow.  Absolute tolerance 1e-9.
ChainReport verify_chain(long long n);

struct BoundsRow {
  long long n = 0;
  BigUint order;      // 2 * 3^(2n+1)
  BigUint log2_size;  // order + 2
  long long k_max = 0;
  long long min_vars = 0;
  long long min_len = 0;
  double f_n = 0;
  double beta_lower = 0;  // beta_lower_from_log2m at the interval start
  bool interval_argument_applies = true;  // false for the n = 0 row
};

std::vector<BoundsRow> bounds_table(long long n_max);

// Header exactly: n,order,log2_size,k_max,min_vars,min_len,f_n,beta_lower
// with reals printed to 6 decimal places.
std::string bounds_csv(const std::vector<BoundsRow>& rows);

}  // namespace relalg
