#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relalg/bitmatrix.hpp"
#include "relalg/gf.hpp"

namespace relalg {

// PG(2,q): points and lines are homogeneous triples over GF(q), normalized
// so the first nonzero coordinate is 1, enumerated in ascending lexicographic
// order of (c0,c1,c2).  A point lies on a line iff the dot product vanishes.
// The incidence matrix is stored explicitly (rows = lines, columns = points)
// so tests can perturb it.
struct ProjectivePlane {
  int q = 0;
  FiniteField field;
  std::vector<std::array<int, 3>> points;
  std::vector<std::array<int, 3>> lines;
  BitMatrix incidence;  // incidence.get(line, point)

  int size() const { return static_cast<int>(points.size()); }
};

ProjectivePlane build_pg2(int q, int ceiling = 16);

struct PlaneViolation {
  std::string invariant;  // "counts", "incidence", "line-size",
                          // "point-degree", "joining-line"
  int i = -1, j = -1;     // least offending pair (meaning depends on check)
  std::string detail;
};

// Exhaustively verifies the plane invariants: stored incidence matches the
// dot-product rule, q^2+q+1 points and lines, q+1 points per line, q+1 lines
// per point, and a unique joining line for every point pair.  Returns the
// least violation or nullopt.
std::optional<PlaneViolation> validate_plane(const ProjectivePlane& pl);

// ---------------------------------------------------------------------------

struct BrVerdict {
  bool rules_out = false;
  int order = 0;
  int search_bound = -1;  // floor(sqrt(order)) when the two-squares search ran
};

// Classical Bruck-Ryser test: rules the order out iff order = 1 or 2 mod 4
// and order is not a sum of two integer squares.
BrVerdict bruck_ryser(int order);

bool is_sum_of_two_squares(long long n);

}  // namespace relalg
