#include "relalg/gf.hpp"

#include <string>

namespace relalg {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p) continue;
    int m = q, k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
  }
  return false;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Remainder of f modulo monic g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  f = poly_trim(std::move(f));
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    int shift = static_cast<int>(f.size()) - 1 - dg;
    int coeff = f.back();
    for (int i = 0; i <= dg; ++i) {
      int& c = f[i + shift];
      c = ((c - coeff * g[i]) % p + p) % p;
    }
    f = poly_trim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(out));
}

// Decodes 0..p^deg-1 into the coefficient vector of a degree-< deg poly.
Poly decode(int code, int p, int deg) {
  Poly out(deg, 0);
  for (int i = 0; i < deg; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return poly_trim(std::move(out));
}

bool divides(const Poly& d, const Poly& f, int p) {
  return poly_rem(f, d, p).empty();
}

// Irreducibility over GF(p) by trial division by all monic polynomials of
// degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly d = decode(code, p, dd);
      d.resize(dd + 1, 0);
      d[dd] = 1;
      if (divides(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(int q, int ceiling) {
  int p = 0, k = 0;
  if (!is_prime_power(q, &p, &k))
    throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
  if (q > ceiling)
    throw CeilingError("field order " + std::to_string(q) +
                       " exceeds ceiling " + std::to_string(ceiling));
  FiniteField f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  if (k > 1) {
    // scan non-leading coefficient encodings in ascending order
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly cand = decode(code, p, k);
      cand.resize(k + 1, 0);
      cand[k] = 1;
      if (is_irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
    if (f.modulus_.empty())
      throw StructuralError("no irreducible polynomial found");  // unreachable
  }
  f.build_tables();
  f.verify_axioms();
  return f;
}

void FiniteField::build_tables() {
  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  auto encode = [&](const Poly& f) {
    int code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p_ + f[i];
    return code;
  };
  for (int a = 0; a < q_; ++a) {
    Poly fa = decode(a, p_, k_);
    fa.resize(k_, 0);
    Poly na(k_, 0);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      Poly fb = decode(b, p_, k_);
      fb.resize(k_, 0);
      Poly sum(k_, 0);
      for (int i = 0; i < k_; ++i) sum[i] = (fa[i] + fb[i]) % p_;
      add_[a * q_ + b] = encode(sum);
      Poly prod = poly_mul(poly_trim(fa), poly_trim(fb), p_);
      if (k_ > 1) prod = poly_rem(std::move(prod), modulus_, p_);
      mul_[a * q_ + b] = encode(prod);
    }
  }
}

void FiniteField::verify_axioms() const {
  auto fail = [&](const char* what) {
    throw StructuralError("field axiom violated in GF(" + std::to_string(q_) +
                          "): " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a) fail("additive identity");
    if (mul(a, 1) != a) fail("multiplicative identity");
    if (add(a, neg(a)) != 0) fail("additive inverse");
    if (a != 0) {
      bool has_inv = false;
      for (int b = 1; b < q_; ++b) has_inv = has_inv || mul(a, b) == 1;
      if (!has_inv) fail("multiplicative inverse");
    }
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a)) fail("addition commutativity");
      if (mul(a, b) != mul(b, a)) fail("multiplication commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("addition associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("multiplication associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

int FiniteField::inverse(int a) const {
  if (a == 0) throw DomainError("0 has no multiplicative inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw StructuralError("inverse not found");  // unreachable after verify
}

}  // namespace relalg
