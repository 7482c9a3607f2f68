#include "relalg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace relalg {

Algebra::Algebra(std::string name, std::vector<std::string> atom_names,
                 int identity_atom, std::vector<int> converse,
                 std::vector<Mask> comp_table, AlgebraConfig config)
    : name_(std::move(name)),
      atom_names_(std::move(atom_names)),
      n_(static_cast<int>(atom_names_.size())),
      identity_(identity_atom),
      converse_(std::move(converse)),
      table_(std::move(comp_table)) {
  const int cap = std::min(config.max_atoms, 64);
  if (n_ < 1) throw StructuralError("algebra needs at least one atom");
  if (n_ > cap)
    throw CapacityError("algebra '" + name_ + "' has " + std::to_string(n_) +
                        " atoms, capacity is " + std::to_string(cap));
  std::unordered_set<std::string> seen;
  for (const auto& nm : atom_names_) {
    if (nm.empty()) throw StructuralError("empty atom name");
    if (!seen.insert(nm).second)
      throw StructuralError("duplicate atom name '" + nm + "'");
  }
  if (identity_ < 0 || identity_ >= n_)
    throw StructuralError("identity atom index out of range");
  if (static_cast<int>(converse_.size()) != n_)
    throw StructuralError("converse permutation has wrong size");
  for (int a = 0; a < n_; ++a) {
    int c = converse_[a];
    if (c < 0 || c >= n_) throw StructuralError("converse image out of range");
    if (converse_[c] != a)
      throw StructuralError("converse is not an involution at atom '" +
                            atom_names_[a] + "'");
  }
  if (converse_[identity_] != identity_)
    throw StructuralError("converse must fix the identity atom");
  one_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw StructuralError("composition table is not total");
  for (Mask entry : table_)
    if (entry & ~one_)
      throw StructuralError("composition table entry outside atom range");
}

std::optional<int> Algebra::atom_index(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (atom_names_[i] == name) return i;
  return std::nullopt;
}

std::uint64_t Algebra::element_count() const {
  if (n_ >= 64)
    throw CapacityError("element count of a 64-atom algebra overflows");
  return Mask{1} << n_;
}

Mask Algebra::converse(Mask x) const {
  Mask out = 0;
  while (x) {
    int a = std::countr_zero(x);
    x &= x - 1;
    out |= Mask{1} << converse_[a];
  }
  return out;
}

Mask Algebra::compose(Mask x, Mask y) const {
  Mask out = 0;
  for (Mask xs = x; xs;) {
    int a = std::countr_zero(xs);
    xs &= xs - 1;
    const Mask* row = table_.data() + static_cast<std::size_t>(a) * n_;
    for (Mask ys = y; ys;) {
      int b = std::countr_zero(ys);
      ys &= ys - 1;
      out |= row[b];
    }
  }
  return out;
}

std::string Algebra::element_name(Mask x) const {
  if (x == 0) return "0";
  std::string out;
  while (x) {
    int a = std::countr_zero(x);
    x &= x - 1;
    if (!out.empty()) out += '+';
    out += atom_names_[a];
  }
  return out;
}

Mask Algebra::parse_element(std::string_view text) const {
  if (text.empty() || text == "0") return 0;
  Mask out = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    auto idx = atom_index(part);
    if (!idx)
      throw StructuralError("unknown atom '" + std::string(part) +
                            "' in element of algebra '" + name_ + "'");
    out |= Mask{1} << *idx;
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const Element& x, const Element& y) {
  if (x.algebra == nullptr || y.algebra == nullptr)
    throw StructuralError("element is not attached to an algebra");
  if (x.algebra != y.algebra)
    throw StructuralError("elements belong to different algebras");
}

}  // namespace

Element make_element(const Algebra& a, Mask m) {
  if (m & ~a.one())
    throw StructuralError("element mask outside the atom range of '" +
                          a.name() + "'");
  return Element{&a, m};
}

Element join(Element x, Element y) {
  require_same(x, y);
  return Element{x.algebra, x.mask | y.mask};
}

Element meet(Element x, Element y) {
  require_same(x, y);
  return Element{x.algebra, x.mask & y.mask};
}

Element complement(Element x) {
  require_same(x, x);
  return Element{x.algebra, x.algebra->complement(x.mask)};
}

Element converse(Element x) {
  require_same(x, x);
  return Element{x.algebra, x.algebra->converse(x.mask)};
}

Element compose(Element x, Element y) {
  require_same(x, y);
  return Element{x.algebra, x.algebra->compose(x.mask, y.mask)};
}

Element zero_of(const Algebra& a) { return Element{&a, a.zero()}; }
Element one_of(const Algebra& a) { return Element{&a, a.one()}; }
Element identity_of(const Algebra& a) { return Element{&a, a.identity_mask()}; }
Element diversity_of(const Algebra& a) {
  return Element{&a, a.diversity_mask()};
}

// ---------------------------------------------------------------------------

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

const AxiomCheck* AxiomReport::check(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

AxiomReport check_axioms(const Algebra& A) {
  const int n = A.atom_count();
  const int e = A.identity_index();
  AxiomReport report;

  {
    AxiomCheck c{"associativity", std::nullopt};
    for (int a = 0; a < n && !c.failure; ++a)
      for (int b = 0; b < n && !c.failure; ++b)
        for (int k = 0; k < n && !c.failure; ++k) {
          Mask lhs = A.compose(A.comp_atoms(a, b), A.atom_mask(k));
          Mask rhs = A.compose(A.atom_mask(a), A.comp_atoms(b, k));
          if (lhs != rhs)
            c.failure = AxiomWitness{
                {a, b, k},
                lhs,
                rhs,
                "(" + A.atom_name(a) + ";" + A.atom_name(b) + ");" +
                    A.atom_name(k) + " = " + A.element_name(lhs) + " but " +
                    A.atom_name(a) + ";(" + A.atom_name(b) + ";" +
                    A.atom_name(k) + ") = " + A.element_name(rhs)};
        }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"identity", std::nullopt};
    for (int a = 0; a < n && !c.failure; ++a) {
      Mask want = A.atom_mask(a);
      Mask left = A.comp_atoms(a, e);
      Mask right = A.comp_atoms(e, a);
      if (left != want)
        c.failure =
            AxiomWitness{{a}, left, want,
                         A.atom_name(a) + ";1' = " + A.element_name(left)};
      else if (right != want)
        c.failure =
            AxiomWitness{{a}, right, want,
                         "1';" + A.atom_name(a) + " = " + A.element_name(right)};
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"converse-involution", std::nullopt};
    for (int a = 0; a < n && !c.failure; ++a) {
      int cc = A.converse_atom(A.converse_atom(a));
      if (cc != a)
        c.failure = AxiomWitness{{a},
                                 A.atom_mask(cc),
                                 A.atom_mask(a),
                                 A.atom_name(a) + "^^ = " + A.atom_name(cc)};
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"converse-of-composition", std::nullopt};
    for (int a = 0; a < n && !c.failure; ++a)
      for (int b = 0; b < n && !c.failure; ++b) {
        Mask lhs = A.converse(A.comp_atoms(a, b));
        Mask rhs = A.comp_atoms(A.converse_atom(b), A.converse_atom(a));
        if (lhs != rhs)
          c.failure = AxiomWitness{
              {a, b},
              lhs,
              rhs,
              "(" + A.atom_name(a) + ";" + A.atom_name(b) + ")^ = " +
                  A.element_name(lhs) + " but " +
                  A.atom_name(A.converse_atom(b)) + ";" +
                  A.atom_name(A.converse_atom(a)) + " = " +
                  A.element_name(rhs)};
      }
    report.checks.push_back(std::move(c));
  }

  {
    // Cycle (Peircean) law: the six memberships of a triangle agree.
    AxiomCheck c{"cycle-law", std::nullopt};
    auto in = [&](int x, int y, int z) {
      return (A.comp_atoms(x, y) >> z) & 1u;
    };
    for (int a = 0; a < n && !c.failure; ++a)
      for (int b = 0; b < n && !c.failure; ++b)
        for (int k = 0; k < n && !c.failure; ++k) {
          int ac = A.converse_atom(a), bc = A.converse_atom(b),
              kc = A.converse_atom(k);
          bool m[6] = {
              static_cast<bool>(in(a, b, k)),   // c <= a;b
              static_cast<bool>(in(bc, ac, kc)),  // c^ <= b^;a^
              static_cast<bool>(in(k, bc, a)),  // a <= c;b^
              static_cast<bool>(in(b, kc, ac)),  // a^ <= b;c^
              static_cast<bool>(in(ac, k, b)),  // b <= a^;c
              static_cast<bool>(in(kc, a, bc)),  // b^ <= c^;a
          };
          bool all = m[0], any = m[0];
          for (bool v : m) {
            all = all && v;
            any = any || v;
          }
          if (all != any) {
            std::string detail = "cycle (" + A.atom_name(a) + "," +
                                 A.atom_name(b) + "," + A.atom_name(k) +
                                 ") memberships:";
            for (bool v : m) detail += v ? " 1" : " 0";
            c.failure = AxiomWitness{{a, b, k}, 0, 0, std::move(detail)};
          }
        }
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace relalg
