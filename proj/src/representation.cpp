#include "relalg/representation.hpp"

#include <bit>

#include "relalg/lyndon.hpp"

namespace relalg {

namespace {

// First position where the two matrices differ, scanning rows then columns.
std::optional<std::pair<int, int>> first_difference(const BitMatrix& a,
                                                    const BitMatrix& b) {
  for (int i = 0; i < a.size(); ++i) {
    const std::uint64_t* ra = a.row(i);
    const std::uint64_t* rb = b.row(i);
    for (int w = 0; w < a.words_per_row(); ++w)
      if (ra[w] != rb[w])
        return std::make_pair(i, w * 64 + std::countr_zero(ra[w] ^ rb[w]));
  }
  return std::nullopt;
}

}  // namespace

Representation build_affine_representation(const ProjectivePlane& plane,
                                           bool force_unsound) {
  const int q = plane.q;
  if (q == 2 && !force_unsound)
    throw ConstructionUnsoundError(
        "the affine direction construction fails verification at order 2");

  const int n_plane = plane.size();
  const int line_inf = n_plane - 1;  // canonical choice: last line

  std::vector<int> infinity_points;  // ascending point indices on L_inf
  std::vector<int> base_index(n_plane, -1);
  int base_size = 0;
  for (int p = 0; p < n_plane; ++p) {
    if (plane.incidence.get(line_inf, p))
      infinity_points.push_back(p);
    else
      base_index[p] = base_size++;
  }

  Representation rep{build_lyndon(q + 1), base_size, {}};
  rep.relations.assign(rep.target.atom_count(), BitMatrix(base_size));

  BitMatrix& diag = rep.relations[rep.target.identity_index()];
  for (int i = 0; i < base_size; ++i) diag.set(i, i);

  for (int l = 0; l < n_plane; ++l) {
    if (l == line_inf) continue;
    int direction = -1;
    std::vector<int> affine;
    for (int p = 0; p < n_plane; ++p) {
      if (!plane.incidence.get(l, p)) continue;
      if (base_index[p] < 0) {
        for (std::size_t d = 0; d < infinity_points.size(); ++d)
          if (infinity_points[d] == p) direction = static_cast<int>(d);
      } else {
        affine.push_back(base_index[p]);
      }
    }
    BitMatrix& rel = rep.relations[1 + direction];  // atom a_{direction+1}
    for (int x : affine)
      for (int y : affine)
        if (x != y) rel.set(x, y);
  }
  return rep;
}

std::optional<RepViolation> verify_representation(const Representation& rep) {
  const Algebra& A = rep.target;
  const int m = A.atom_count();
  const int n = rep.base_size;
  if (static_cast<int>(rep.relations.size()) != m)
    throw StructuralError("representation has wrong relation count");
  for (const BitMatrix& r : rep.relations)
    if (r.size() != n) throw StructuralError("relation has wrong base size");

  {
    BitMatrix diag(n);
    for (int i = 0; i < n; ++i) diag.set(i, i);
    if (auto d = first_difference(rep.relations[A.identity_index()], diag))
      return RepViolation{"identity-diagonal", A.identity_index(), -1,
                          d->first, d->second,
                          "identity relation is not the diagonal at (" +
                              std::to_string(d->first) + "," +
                              std::to_string(d->second) + ")"};
  }

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (rep.relations[a].intersects(rep.relations[b])) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (rep.relations[a].get(i, j) && rep.relations[b].get(i, j))
              return RepViolation{
                  "disjoint", a, b, i, j,
                  "relations of " + A.atom_name(a) + " and " + A.atom_name(b) +
                      " share pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")"};
      }

  {
    BitMatrix all(n);
    for (const BitMatrix& r : rep.relations) all |= r;
    BitMatrix full(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) full.set(i, j);
    if (auto d = first_difference(all, full))
      return RepViolation{"cover", -1, -1, d->first, d->second,
                          "pair (" + std::to_string(d->first) + "," +
                              std::to_string(d->second) +
                              ") is not covered by any atom relation"};
  }

  for (int a = 0; a < m; ++a) {
    BitMatrix t = rep.relations[a].transposed();
    if (auto d = first_difference(rep.relations[A.converse_atom(a)], t))
      return RepViolation{"converse", a, A.converse_atom(a), d->first,
                          d->second,
                          "relation of " + A.atom_name(A.converse_atom(a)) +
                              " is not the transpose of " + A.atom_name(a) +
                              " at (" + std::to_string(d->first) + "," +
                              std::to_string(d->second) + ")"};
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      BitMatrix prod = rep.relations[a].product(rep.relations[b]);
      BitMatrix want(n);
      Mask comp = A.comp_atoms(a, b);
      while (comp) {
        int c = std::countr_zero(comp);
        comp &= comp - 1;
        want |= rep.relations[c];
      }
      if (auto d = first_difference(prod, want)) {
        bool extra = prod.get(d->first, d->second);
        return RepViolation{
            "composition", a, b, d->first, d->second,
            "R(" + A.atom_name(a) + ") o R(" + A.atom_name(b) + ") " +
                (extra ? "contains extra pair (" : "is missing pair (") +
                std::to_string(d->first) + "," + std::to_string(d->second) +
                ")"};
      }
    }

  return std::nullopt;
}

}  // namespace relalg
