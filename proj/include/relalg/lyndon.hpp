#pragma once

#include <optional>
#include <string>

#include "relalg/algebra.hpp"
#include "relalg/representation.hpp"

namespace relalg {

// E_{n+1}: n symmetric diversity atoms a1..an plus the identity 1'.
// Atom composition: a_i;a_i = 1' + a_i, and for i != j, a_i;a_j is every
// diversity atom other than a_i and a_j.  The builder accepts every n >= 1,
// including n = 2, 3 whose tables violate associativity; that is the status
// operation's concern, not the builder's.
Algebra build_lyndon(int n, AlgebraConfig config = {});

struct GeometrySettings {
  int field_ceiling = 16;  // largest plane order the workbench constructs
};

enum class ReprKind { representable, non_representable, unknown };
enum class NonReprReason { none, bruck_ryser, not_relation_algebra };

struct ReprStatus {
  int n = 0;
  std::string algebra_name;
  ReprKind kind = ReprKind::unknown;
  NonReprReason reason = NonReprReason::none;
  int ruled_out_order = -1;                // set when reason is bruck_ryser
  std::optional<Representation> witness;   // set and verified when representable
  std::string note;
};

// Representability of E_{n+1} by plane order q = n-1: n in {2,3} are not
// relation algebras; for n >= 4, a prime-power q yields a verified affine
// representation, a Bruck-Ryser-excluded q yields non-representable, and
// everything else (including n = 1, below the constructive range) is
// honestly unknown.
ReprStatus representability_status(int n, const GeometrySettings& gs = {});

}  // namespace relalg
