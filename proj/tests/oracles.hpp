#pragma once

// Independent test-side oracles.  These deliberately reimplement the checks
// with plain element-level loops so the library's atom-level shortcuts are
// measured against the universal statements they stand for.

#include <optional>
#include <string>

#include "relalg/algebra.hpp"
#include "relalg/bitmatrix.hpp"
#include "relalg/representation.hpp"

namespace oracles {

// Brute-force universal check of the relation-algebra axioms over every
// element tuple.  Feasible for small algebras only.
inline bool brute_force_axioms(const relalg::Algebra& a) {
  const relalg::Mask count = a.element_count();
  for (relalg::Mask x = 0; x < count; ++x) {
    if (a.converse(a.converse(x)) != x) return false;
    if (a.compose(x, a.identity_mask()) != x) return false;
    if (a.compose(a.identity_mask(), x) != x) return false;
  }
  for (relalg::Mask x = 0; x < count; ++x)
    for (relalg::Mask y = 0; y < count; ++y) {
      if (a.converse(a.compose(x, y)) !=
          a.compose(a.converse(y), a.converse(x)))
        return false;
      if (a.converse(x | y) != (a.converse(x) | a.converse(y))) return false;
      // Tarski's triangle axiom: x^ ; -(x;y) <= -y
      if (a.compose(a.converse(x), a.complement(a.compose(x, y))) & y)
        return false;
      for (relalg::Mask z = 0; z < count; ++z) {
        if (a.compose(a.compose(x, y), z) != a.compose(x, a.compose(y, z)))
          return false;
        if (a.compose(x | y, z) != (a.compose(x, z) | a.compose(y, z)))
          return false;
      }
    }
  return true;
}

inline bool naive_sum_of_two_squares(long long n) {
  for (long long x = 0; x * x <= n; ++x)
    for (long long y = 0; y * y <= n; ++y)
      if (x * x + y * y == n) return true;
  return false;
}

// Reads the atom composition table back off a representation: T(a,b) is the
// set of atoms whose relations tile R(a) o R(b).  Returns nullopt when the
// product is not a union of atom relations.
inline std::optional<relalg::Mask> table_from_representation(
    const relalg::Representation& rep, int a, int b) {
  relalg::BitMatrix prod = rep.relations[a].product(rep.relations[b]);
  relalg::Mask atoms = 0;
  relalg::BitMatrix covered(rep.base_size);
  for (int c = 0; c < rep.target.atom_count(); ++c)
    if (rep.relations[c].intersects(prod)) {
      atoms |= relalg::Mask{1} << c;
      covered |= rep.relations[c];
    }
  if (!(covered == prod)) return std::nullopt;
  return atoms;
}

}  // namespace oracles
