#pragma once

#include <array>
#include <vector>

#include "relalg/algebra.hpp"

namespace fixtures {

// Complex algebra of the symmetric group S3: atoms are the six permutations,
// composition of atoms is the group product {g.h}, converse is inversion.
// Non-commutative, so it separates equations that Lyndon algebras satisfy.
inline relalg::Algebra s3_algebra() {
  using relalg::Mask;
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // t12
      {2, 1, 0},  // t13
      {0, 2, 1},  // t23
      {1, 2, 0},  // c123
      {2, 0, 1},  // c132
  }};
  std::vector<std::string> names = {"e", "t12", "t13", "t23", "c123", "c132"};

  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };

  std::vector<int> converse(6);
  for (int g = 0; g < 6; ++g) {
    std::array<int, 3> inv{};
    for (int x = 0; x < 3; ++x) inv[perms[g][x]] = x;
    converse[g] = index_of(inv);
  }

  std::vector<Mask> table(36, 0);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      std::array<int, 3> prod{};
      for (int x = 0; x < 3; ++x) prod[x] = perms[g][perms[h][x]];
      table[g * 6 + h] = Mask{1} << index_of(prod);
    }

  return relalg::Algebra("S3", std::move(names), 0, std::move(converse),
                         std::move(table));
}

// The two-element relation algebra: one atom 1' with 1';1' = 1'.
inline relalg::Algebra one_atom_algebra() {
  return relalg::Algebra("I", {"1'"}, 0, {0}, {relalg::Mask{1}});
}

}  // namespace fixtures
