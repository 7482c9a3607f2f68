#include "relalg/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "relalg/errors.hpp"

namespace relalg {

double log2_3() { return std::log2(3.0); }

BigUint lyndon_order(long long n) {
  if (n < 0) throw DomainError("order index must be nonnegative");
  BigUint v = BigUint::power(3, static_cast<std::uint64_t>(2 * n + 1));
  v.mul_small(2);
  return v;
}

long long k_max(long long n) {
  // 2^(k+1) <= B < 2^(k+2) exactly when k+1 = bit_length(B) - 1; B = 2*3^odd
  // is never a power of two, so the bit length settles the comparison.
  BigUint b = lyndon_order(n);
  return static_cast<long long>(b.bit_length()) - 2;
}

long long min_vars(long long n) { return k_max(n) + 1; }

long long min_len(long long n) { return 2 * min_vars(n) - 2; }

double f_of(double n) { return 2.0 * log2_3() * (2.0 * n + 1.0) - 2.0; }

double beta_lower_from_log2m(double L) {
  if (L < 8.0)
    throw DomainError("beta lower bound is only asserted for log2(m) >= 8");
  return 2.0 * log2_3() * (std::log(0.5 * L - 1.0) / std::log(3.0) - 2.0) - 2.0;
}

double beta_star_lower(long long M) {
  double half = static_cast<double>(M) / 2.0 - 1.0;
  if (half <= 0.0)
    throw DomainError("atom count must exceed 2");
  return 2.0 * log2_3() * (std::log(half) / std::log(3.0) - 2.0) - 2.0;
}

long long interval_n(double L) {
  BigUint floor56(56);
  if (floor56.compare(L) > 0)
    throw DomainError("interval lookup needs log2(m) >= 56");
  long long best = 0;
  for (long long n = 1;; ++n) {
    BigUint start = lyndon_order(n);
    start.add_small(2);
    if (start.compare(L) > 0) break;
    best = n;
  }
  return best;
}

bool ChainReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ChainReport verify_chain(long long n) {
  if (n < 1) throw DomainError("chain verification needs n >= 1");
  constexpr double kTol = 1e-9;
  ChainReport report;
  report.n = n;

  BigUint order = lyndon_order(n);
  const long long km = k_max(n);

  const char* endpoint_names[2] = {"interval-start", "interval-end"};
  for (int side = 0; side < 2; ++side) {
    BigUint log2m = lyndon_order(n + side);  // 2*3^(2n+1) or 2*3^(2n+3)
    log2m.add_small(2);
    const double Ld = log2m.fits_u64() ? static_cast<double>(log2m.as_u64())
                                       : std::exp2(log2m.log2());

    {
      ChainCheck c;
      c.name = std::string("star-star at ") + endpoint_names[side];
      double lhs = 0.5 * (std::log(0.5 * Ld - 1.0) / std::log(3.0)) - 1.5;
      c.values["lhs"] = lhs;
      c.values["n"] = static_cast<double>(n);
      c.pass = lhs <= static_cast<double>(n) + kTol;
      c.detail = "(1/2)log3((1/2)L - 1) - 3/2 <= n with L = " +
                 log2m.to_decimal();
      report.checks.push_back(std::move(c));
    }

    {
      ChainCheck c;
      c.name = std::string("weakening at ") + endpoint_names[side];
      double beta = beta_lower_from_log2m(Ld);
      long long ni = interval_n(Ld);
      double fv = f_of(static_cast<double>(ni));
      c.values["beta_lower"] = beta;
      c.values["interval_n"] = static_cast<double>(ni);
      c.values["f"] = fv;
      c.pass = beta <= fv + kTol;
      c.detail = "beta_lower(L) <= f(interval_n(L)) with L = " +
                 log2m.to_decimal();
      report.checks.push_back(std::move(c));
    }
  }

  {
    ChainCheck c;
    c.name = "exponent-identity";
    BigUint lo = BigUint::two_to(static_cast<std::uint64_t>(km + 1));
    BigUint hi = BigUint::two_to(static_cast<std::uint64_t>(km + 2));
    bool exact = lo <= order && order < hi;
    double symbolic = (2.0 * n + 1.0) * log2_3() + 1.0;
    double computed = order.log2();
    c.values["k_max"] = static_cast<double>(km);
    c.values["log2_order_symbolic"] = symbolic;
    c.values["log2_order_computed"] = computed;
    c.pass = exact && std::abs(symbolic - computed) <= kTol;
    c.detail = "2^(k_max+1) <= 2*3^(2n+1) < 2^(k_max+2), order = " +
               order.to_decimal();
    report.checks.push_back(std::move(c));
  }

  return report;
}

std::vector<BoundsRow> bounds_table(long long n_max) {
  if (n_max < 0) throw DomainError("table needs n_max >= 0");
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long long n = 0; n <= n_max; ++n) {
    BoundsRow row;
    row.n = n;
    row.order = lyndon_order(n);
    row.log2_size = row.order;
    row.log2_size.add_small(2);
    row.k_max = k_max(n);
    row.min_vars = row.k_max + 1;
    row.min_len = 2 * row.min_vars - 2;
    row.f_n = f_of(static_cast<double>(n));
    double L = row.log2_size.fits_u64()
                   ? static_cast<double>(row.log2_size.as_u64())
                   : std::exp2(row.log2_size.log2());
    row.beta_lower = beta_lower_from_log2m(L);
    row.interval_argument_applies = n >= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "n,order,log2_size,k_max,min_vars,min_len,f_n,beta_lower\n";
  char buf[64];
  for (const BoundsRow& r : rows) {
    out += std::to_string(r.n) + ',' + r.order.to_decimal() + ',' +
           r.log2_size.to_decimal() + ',' + std::to_string(r.k_max) + ',' +
           std::to_string(r.min_vars) + ',' + std::to_string(r.min_len) + ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.f_n);
    out += buf;
    out += ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.beta_lower);
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace relalg
