#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"
#include "relalg/bitmatrix.hpp"
#include "relalg/plane.hpp"

namespace relalg {

// A square representation: each atom of the target algebra is assigned a set
// of ordered pairs over a finite base, stored as a boolean matrix.
struct Representation {
  Algebra target;
  int base_size = 0;
  std::vector<BitMatrix> relations;  // indexed by target atom
};

// The direction representation of E_{q+2} over the affine plane obtained by
// deleting the canonical last line of PG(2,q): base = the q^2 points off that
// line, the i-th diversity atom holds the ordered pairs of distinct points
// whose joining line meets the deleted line in its i-th point, and the
// identity atom is the diagonal.  Throws ConstructionUnsoundError for q = 2
// (two-point affine lines leave compositions without witnesses) unless
// force_unsound is set, which tests use to exhibit the failure.
Representation build_affine_representation(const ProjectivePlane& plane,
                                           bool force_unsound = false);

struct RepViolation {
  std::string check;  // "identity-diagonal", "disjoint", "cover",
                      // "converse", "composition"
  int atom_a = -1, atom_b = -1;
  int row = -1, col = -1;  // least offending base pair
  std::string detail;
};

// Brute-force verification: representation invariants, converse as
// transpose, and R(a) compose R(b) (boolean matrix product) equal to the
// union of R(c) over c in the atom table of a;b.  Returns the least
// violation in (check, atom pair, base pair) scan order, or nullopt.
// Callers are expected to hand in a target that passes check_axioms; the
// checks themselves do not assume it.
std::optional<RepViolation> verify_representation(const Representation& rep);

}  // namespace relalg
