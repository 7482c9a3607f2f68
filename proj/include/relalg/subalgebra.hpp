#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

struct Subalgebra {
  const Algebra* parent = nullptr;
  std::vector<Mask> elements;  // ascending; contains 0, 1, 1' and is closed
                               // under all six operations
  std::size_t size() const { return elements.size(); }
  bool contains(Mask m) const;
};

// Least subuniverse containing the generators and the constants 0, 1, 1',
// closed under join, meet, complement, converse and composition; worklist
// closure to fixpoint.
Subalgebra generate(const Algebra& a, const std::vector<Mask>& generators);

// Boolean subalgebra generated by the seeds together with 1', computed by
// partition refinement of the atom set; the result has 2^blocks elements.
std::vector<Mask> boolean_closure(const Algebra& a,
                                  const std::vector<Mask>& seeds);

bool is_proper(const Subalgebra& sub);

// Minimal nonzero elements; for these closures that is the block partition.
std::vector<Mask> minimal_elements(const Subalgebra& sub);

// The subalgebra as an algebra in its own right: its atoms are the minimal
// elements, named by joining parent atom names with '+'.
Algebra induced_algebra(const Subalgebra& sub, const std::string& name);

// Every subalgebra of a, found by closing the minimal subalgebra under
// one-element extensions until no new subuniverse appears.
std::vector<Subalgebra> all_subalgebras(const Algebra& a);

// ---------------------------------------------------------------------------

struct Embedding {
  std::vector<std::string> source_atoms;  // source atom names, in atom order
  std::vector<Mask> images;               // target element per source atom
};

enum class EmbedOutcome { found, none, exhausted };

struct EmbedResult {
  EmbedOutcome outcome = EmbedOutcome::none;
  std::optional<Embedding> embedding;
  long long nodes_visited = 0;
};

// Backtracking search over assignments of disjoint nonempty target atom sets
// to source atoms (identity to identity forced, images jointly covering the
// target top), preserving converse and composition on atoms; by complete
// additivity such a map extends to a full embedding.  Candidates are tried
// in ascending mask order, so the first hit is the lexicographically least
// embedding.  A node budget caps the search; hitting it yields `exhausted`,
// distinct from a completed `none`.
EmbedResult find_embedding(const Algebra& source, const Algebra& target,
                           long long node_budget = 50'000'000);
EmbedResult find_embedding(const Subalgebra& source, const Algebra& target,
                           long long node_budget = 50'000'000);

// Re-verifies that atom images form an embedding (used for soundness checks).
bool verify_embedding(const Algebra& source, const Algebra& target,
                      const std::vector<Mask>& images);

}  // namespace relalg
