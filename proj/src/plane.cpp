#include "relalg/plane.hpp"

#include <cmath>

namespace relalg {

ProjectivePlane build_pg2(int q, int ceiling) {
  ProjectivePlane pl;
  pl.q = q;
  pl.field = make_field(q, ceiling);
  const FiniteField& F = pl.field;

  // Normalized representatives in ascending (c0,c1,c2) order.
  for (int c0 = 0; c0 < q; ++c0)
    for (int c1 = 0; c1 < q; ++c1)
      for (int c2 = 0; c2 < q; ++c2) {
        int first = c0 != 0 ? c0 : (c1 != 0 ? c1 : c2);
        if (first != 1) continue;
        pl.points.push_back({c0, c1, c2});
      }
  pl.lines = pl.points;  // same normalized triples, read as line coordinates

  const int n = pl.size();
  pl.incidence = BitMatrix(n);
  for (int l = 0; l < n; ++l)
    for (int p = 0; p < n; ++p) {
      int dot = 0;
      for (int i = 0; i < 3; ++i)
        dot = F.add(dot, F.mul(pl.lines[l][i], pl.points[p][i]));
      if (dot == 0) pl.incidence.set(l, p);
    }
  return pl;
}

std::optional<PlaneViolation> validate_plane(const ProjectivePlane& pl) {
  const int q = pl.q;
  const int expected = q * q + q + 1;
  const FiniteField& F = pl.field;

  if (static_cast<int>(pl.points.size()) != expected ||
      static_cast<int>(pl.lines.size()) != expected)
    return PlaneViolation{"counts", static_cast<int>(pl.points.size()),
                          static_cast<int>(pl.lines.size()),
                          "expected " + std::to_string(expected) +
                              " points and lines"};

  // Stored incidence must match the algebraic rule; this also pins down a
  // single flipped bit as the least offending (point, line) pair.
  for (int p = 0; p < expected; ++p)
    for (int l = 0; l < expected; ++l) {
      int dot = 0;
      for (int i = 0; i < 3; ++i)
        dot = F.add(dot, F.mul(pl.lines[l][i], pl.points[p][i]));
      if (pl.incidence.get(l, p) != (dot == 0))
        return PlaneViolation{"incidence", p, l,
                              "stored incidence bit disagrees with the dot "
                              "product at (point " +
                                  std::to_string(p) + ", line " +
                                  std::to_string(l) + ")"};
    }

  for (int l = 0; l < expected; ++l) {
    int c = pl.incidence.row_count(l);
    if (c != q + 1)
      return PlaneViolation{"line-size", l, c,
                            "line " + std::to_string(l) + " has " +
                                std::to_string(c) + " points, expected " +
                                std::to_string(q + 1)};
  }

  for (int p = 0; p < expected; ++p) {
    int c = 0;
    for (int l = 0; l < expected; ++l) c += pl.incidence.get(l, p);
    if (c != q + 1)
      return PlaneViolation{"point-degree", p, c,
                            "point " + std::to_string(p) + " lies on " +
                                std::to_string(c) + " lines, expected " +
                                std::to_string(q + 1)};
  }

  for (int p1 = 0; p1 < expected; ++p1)
    for (int p2 = p1 + 1; p2 < expected; ++p2) {
      int common = 0;
      for (int l = 0; l < expected; ++l)
        common += pl.incidence.get(l, p1) && pl.incidence.get(l, p2);
      if (common != 1)
        return PlaneViolation{"joining-line", p1, p2,
                              "points " + std::to_string(p1) + "," +
                                  std::to_string(p2) + " lie on " +
                                  std::to_string(common) + " common lines"};
    }

  return std::nullopt;
}

bool is_sum_of_two_squares(long long n) {
  if (n < 0) return false;
  for (long long a = 0; a * a <= n; ++a) {
    long long rest = n - a * a;
    long long b = static_cast<long long>(std::sqrt(static_cast<double>(rest)));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return true;
  }
  return false;
}

BrVerdict bruck_ryser(int order) {
  if (order < 2) throw DomainError("Bruck-Ryser test needs order >= 2");
  BrVerdict v;
  v.order = order;
  int mod = order % 4;
  if (mod != 1 && mod != 2) return v;  // hypothesis inapplicable
  v.search_bound = static_cast<int>(std::sqrt(static_cast<double>(order)));
  while ((v.search_bound + 1) * (v.search_bound + 1) <= order) ++v.search_bound;
  v.rules_out = !is_sum_of_two_squares(order);
  return v;
}

}  // namespace relalg
