#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/errors.hpp"

namespace relalg {

// An element is a set of atoms packed into a 64-bit mask.
using Mask = std::uint64_t;

struct AlgebraConfig {
  int max_atoms = 64;  // bitmask capacity; the hard ceiling is 64
};

// Finite integral relation algebra presented by its atom structure: atom
// names, the (single) identity atom, the converse permutation and the
// atom-level composition table.  All element-level operations extend the
// table by complete additivity.
class Algebra {
 public:
  // comp_table is row-major: entry [a * atom_count + b] is the atom set of
  // a;b.  Construction validates: distinct names, converse an involution
  // fixing the identity atom, total table with entries inside the atom range.
  Algebra(std::string name, std::vector<std::string> atom_names,
          int identity_atom, std::vector<int> converse,
          std::vector<Mask> comp_table, AlgebraConfig config = {});

  const std::string& name() const { return name_; }
  int atom_count() const { return n_; }
  const std::vector<std::string>& atom_names() const { return atom_names_; }
  const std::string& atom_name(int a) const { return atom_names_[a]; }
  std::optional<int> atom_index(std::string_view name) const;
  int identity_index() const { return identity_; }
  int converse_atom(int a) const { return converse_[a]; }
  Mask comp_atoms(int a, int b) const { return table_[a * n_ + b]; }

  // Throws CapacityError for 64 atoms (the count would not fit the word).
  std::uint64_t element_count() const;

  Mask zero() const { return 0; }
  Mask one() const { return one_; }
  Mask identity_mask() const { return Mask{1} << identity_; }
  Mask diversity_mask() const { return one_ ^ identity_mask(); }
  Mask atom_mask(int a) const { return Mask{1} << a; }

  Mask complement(Mask x) const { return one_ & ~x; }
  Mask converse(Mask x) const;
  Mask compose(Mask x, Mask y) const;

  // "0" for the empty set, otherwise atom names joined with '+'.
  std::string element_name(Mask x) const;
  // Inverse of element_name; accepts "" as the empty set too.
  Mask parse_element(std::string_view text) const;

 private:
  std::string name_;
  std::vector<std::string> atom_names_;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> converse_;
  std::vector<Mask> table_;
  Mask one_ = 0;
};

// Element of a specific algebra; operations reject mixed-algebra arguments.
// "Same algebra" means the same Algebra object.
struct Element {
  const Algebra* algebra = nullptr;
  Mask mask = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

Element make_element(const Algebra& a, Mask m);
Element join(Element x, Element y);
Element meet(Element x, Element y);
Element complement(Element x);
Element converse(Element x);
Element compose(Element x, Element y);
Element zero_of(const Algebra& a);
Element one_of(const Algebra& a);
Element identity_of(const Algebra& a);
Element diversity_of(const Algebra& a);

// ---------------------------------------------------------------------------
// Axiom checking (atom level; sufficient by complete additivity)

struct AxiomWitness {
  std::vector<int> atoms;  // offending atom tuple, lexicographically least
  Mask lhs = 0, rhs = 0;   // evaluated sides where the axiom is an equation
  std::string detail;
};

struct AxiomCheck {
  std::string axiom;
  std::optional<AxiomWitness> failure;
  bool pass() const { return !failure.has_value(); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  const AxiomCheck* check(std::string_view axiom) const;
};

// Checks, over atoms only: associativity, the identity law, converse
// involution, converse of composition, and the six-way cycle law.  Boolean
// axioms hold by construction and are not re-checked.  Witnesses are the
// least offending tuples in atom order.
AxiomReport check_axioms(const Algebra& a);

}  // namespace relalg
