#include "relalg/lyndon.hpp"

#include <numeric>

#include "relalg/plane.hpp"

namespace relalg {

Algebra build_lyndon(int n, AlgebraConfig config) {
  if (n < 1) throw DomainError("Lyndon algebra needs n >= 1");
  const int atoms = n + 1;
  if (atoms > std::min(config.max_atoms, 64))
    throw CapacityError("E_" + std::to_string(n + 1) + " needs " +
                        std::to_string(atoms) + " atoms, capacity is " +
                        std::to_string(std::min(config.max_atoms, 64)));

  std::vector<std::string> names;
  names.reserve(atoms);
  names.emplace_back("1'");
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));

  std::vector<int> converse(atoms);
  std::iota(converse.begin(), converse.end(), 0);  // all atoms symmetric

  const Mask identity = Mask{1};
  const Mask one = (atoms == 64) ? ~Mask{0} : (Mask{1} << atoms) - 1;
  const Mask diversity = one ^ identity;

  std::vector<Mask> table(static_cast<std::size_t>(atoms) * atoms, 0);
  auto at = [&](int a, int b) -> Mask& { return table[a * atoms + b]; };
  at(0, 0) = identity;
  for (int i = 1; i <= n; ++i) {
    at(0, i) = Mask{1} << i;
    at(i, 0) = Mask{1} << i;
    at(i, i) = identity | (Mask{1} << i);
    for (int j = 1; j <= n; ++j)
      if (i != j) at(i, j) = diversity & ~(Mask{1} << i) & ~(Mask{1} << j);
  }

  return Algebra("E" + std::to_string(n + 1), std::move(names), 0,
                 std::move(converse), std::move(table), config);
}

ReprStatus representability_status(int n, const GeometrySettings& gs) {
  if (n < 1) throw DomainError("representability status needs n >= 1");
  ReprStatus st;
  st.n = n;
  st.algebra_name = "E" + std::to_string(n + 1);

  if (n == 2 || n == 3) {
    st.kind = ReprKind::non_representable;
    st.reason = NonReprReason::not_relation_algebra;
    st.note = "the composition table violates associativity, so " +
              st.algebra_name + " is not a relation algebra";
    return st;
  }
  if (n == 1) {
    st.kind = ReprKind::unknown;
    st.note = "below the constructive range (plane order 0); no verdict";
    return st;
  }

  const int q = n - 1;
  if (is_prime_power(q)) {
    if (q > gs.field_ceiling) {
      st.kind = ReprKind::unknown;
      st.note = "order " + std::to_string(q) +
                " is a prime power but exceeds the plane ceiling " +
                std::to_string(gs.field_ceiling);
      return st;
    }
    ProjectivePlane plane = build_pg2(q, gs.field_ceiling);
    Representation rep = build_affine_representation(plane);
    if (auto bad = verify_representation(rep))
      throw StructuralError("affine representation of " + st.algebra_name +
                            " failed verification: " + bad->detail);
    st.kind = ReprKind::representable;
    st.witness = std::move(rep);
    st.note = "verified representation over the affine plane of order " +
              std::to_string(q);
    return st;
  }

  BrVerdict verdict = bruck_ryser(q);
  if (verdict.rules_out) {
    st.kind = ReprKind::non_representable;
    st.reason = NonReprReason::bruck_ryser;
    st.ruled_out_order = q;
    st.note = "Bruck-Ryser rules out a projective plane of order " +
              std::to_string(q);
    return st;
  }

  st.kind = ReprKind::unknown;
  st.note = "order " + std::to_string(q) +
            " is not a prime power and Bruck-Ryser is inconclusive";
  return st;
}

}  // namespace relalg
