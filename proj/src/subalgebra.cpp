#include "relalg/subalgebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace relalg {

bool Subalgebra::contains(Mask m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

Subalgebra generate(const Algebra& a, const std::vector<Mask>& generators) {
  std::vector<Mask> elems;
  std::unordered_set<Mask> seen;
  auto push = [&](Mask m) {
    if (seen.insert(m).second) elems.push_back(m);
  };
  push(a.zero());
  push(a.one());
  push(a.identity_mask());
  for (Mask g : generators) {
    if (g & ~a.one())
      throw StructuralError("generator outside the algebra '" + a.name() + "'");
    push(g);
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    Mask x = elems[i];
    push(a.complement(x));
    push(a.converse(x));
    for (std::size_t j = 0; j <= i; ++j) {
      Mask y = elems[j];
      push(x | y);
      push(x & y);
      push(a.compose(x, y));
      push(a.compose(y, x));
    }
  }

  std::sort(elems.begin(), elems.end());
  return Subalgebra{&a, std::move(elems)};
}

std::vector<Mask> boolean_closure(const Algebra& a,
                                  const std::vector<Mask>& seeds) {
  // Atoms with the same membership signature across seeds + 1' form a block.
  const int n = a.atom_count();
  std::map<std::vector<bool>, Mask> blocks;
  for (int t = 0; t < n; ++t) {
    std::vector<bool> sig;
    sig.reserve(seeds.size() + 1);
    sig.push_back(t == a.identity_index());
    for (Mask s : seeds) {
      if (s & ~a.one())
        throw StructuralError("seed outside the algebra '" + a.name() + "'");
      sig.push_back((s >> t) & 1u);
    }
    blocks[sig] |= a.atom_mask(t);
  }
  std::vector<Mask> block_masks;
  block_masks.reserve(blocks.size());
  for (const auto& [sig, m] : blocks) block_masks.push_back(m);
  if (block_masks.size() > 28)
    throw CapacityError("boolean closure with " +
                        std::to_string(block_masks.size()) +
                        " blocks is too large to materialize");

  std::vector<Mask> out;
  out.reserve(std::size_t{1} << block_masks.size());
  for (std::size_t subset = 0; subset < (std::size_t{1} << block_masks.size());
       ++subset) {
    Mask m = 0;
    for (std::size_t b = 0; b < block_masks.size(); ++b)
      if ((subset >> b) & 1u) m |= block_masks[b];
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_proper(const Subalgebra& sub) {
  return sub.elements.size() < sub.parent->element_count();
}

std::vector<Mask> minimal_elements(const Subalgebra& sub) {
  // smallest subalgebra element containing each parent atom; distinct such
  // elements are exactly the minimal nonzero ones (the closure is a Boolean
  // subalgebra of the powerset, so they partition the top)
  const Algebra& a = *sub.parent;
  std::vector<Mask> out;
  for (int t = 0; t < a.atom_count(); ++t) {
    Mask best = a.one();
    for (Mask e : sub.elements)
      if ((e >> t) & 1u) best &= e;
    if (std::find(out.begin(), out.end(), best) == out.end()) out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Algebra induced_algebra(const Subalgebra& sub, const std::string& name) {
  const Algebra& a = *sub.parent;
  std::vector<Mask> blocks = minimal_elements(sub);
  const int m = static_cast<int>(blocks.size());

  auto decompose = [&](Mask parent_mask) -> Mask {
    Mask out = 0;
    Mask rest = parent_mask;
    for (int b = 0; b < m; ++b)
      if (parent_mask & blocks[b]) {
        if ((parent_mask & blocks[b]) != blocks[b])
          throw StructuralError(
              "subalgebra element does not decompose into blocks");
        out |= Mask{1} << b;
        rest &= ~blocks[b];
      }
    if (rest) throw StructuralError("block decomposition left atoms over");
    return out;
  };

  std::vector<std::string> names;
  names.reserve(m);
  for (Mask b : blocks) names.push_back(a.element_name(b));

  int identity = -1;
  for (int b = 0; b < m; ++b)
    if (blocks[b] == a.identity_mask()) identity = b;
  if (identity < 0)
    throw StructuralError("subalgebra identity is not a block");

  std::vector<int> converse(m, -1);
  for (int b = 0; b < m; ++b) {
    Mask image = a.converse(blocks[b]);
    for (int c = 0; c < m; ++c)
      if (blocks[c] == image) converse[b] = c;
    if (converse[b] < 0)
      throw StructuralError("subalgebra is not closed under converse");
  }

  std::vector<Mask> table(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      table[x * m + y] = decompose(a.compose(blocks[x], blocks[y]));

  return Algebra(name, std::move(names), identity, std::move(converse),
                 std::move(table));
}

std::vector<Subalgebra> all_subalgebras(const Algebra& a) {
  std::vector<Subalgebra> found;
  std::map<std::vector<Mask>, std::size_t> seen;

  Subalgebra least = generate(a, {});
  seen.emplace(least.elements, 0);
  found.push_back(std::move(least));

  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<Mask> base = found[i].elements;  // copy: found may reallocate
    for (Mask x = 0; x < a.element_count(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<Mask> gens = base;
      gens.push_back(x);
      Subalgebra ext = generate(a, gens);
      if (seen.emplace(ext.elements, found.size()).second)
        found.push_back(std::move(ext));
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Embedding search

bool verify_embedding(const Algebra& source, const Algebra& target,
                      const std::vector<Mask>& images) {
  const int m = source.atom_count();
  if (static_cast<int>(images.size()) != m) return false;
  Mask used = 0;
  for (int i = 0; i < m; ++i) {
    if (images[i] == 0 || (images[i] & ~target.one())) return false;
    if (images[i] & used) return false;
    used |= images[i];
  }
  if (used != target.one()) return false;
  if (images[source.identity_index()] != target.identity_mask()) return false;
  for (int i = 0; i < m; ++i)
    if (target.converse(images[i]) != images[source.converse_atom(i)])
      return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask want = 0;
      Mask comp = source.comp_atoms(i, j);
      while (comp) {
        int c = std::countr_zero(comp);
        comp &= comp - 1;
        want |= images[c];
      }
      if (target.compose(images[i], images[j]) != want) return false;
    }
  return true;
}

namespace {

struct EmbedSearch {
  const Algebra& source;
  const Algebra& target;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<Mask> images;
  std::vector<int> order;  // source atoms, identity first

  EmbedSearch(const Algebra& s, const Algebra& t, long long b)
      : source(s), target(t), budget(b), images(s.atom_count(), 0) {
    order.push_back(s.identity_index());
    for (int i = 0; i < s.atom_count(); ++i)
      if (i != s.identity_index()) order.push_back(i);
  }

  bool assigned(int atom, int depth) const {
    for (int d = 0; d < depth; ++d)
      if (order[d] == atom) return true;
    return false;
  }

  // Composition constraints that are decidable with the atoms placed so far.
  bool compatible(int depth, Mask used) const {
    for (int di = 0; di < depth; ++di)
      for (int dj = 0; dj < depth; ++dj) {
        int i = order[di], j = order[dj];
        Mask lhs = target.compose(images[i], images[j]);
        Mask covered = 0;
        bool complete = true;
        Mask comp = source.comp_atoms(i, j);
        while (comp) {
          int c = std::countr_zero(comp);
          comp &= comp - 1;
          if (assigned(c, depth))
            covered |= images[c];
          else
            complete = false;
        }
        if (covered & ~lhs) return false;  // an image escaped the product
        Mask residue = lhs & ~covered;
        if (complete) {
          if (residue) return false;  // product exactly the image union
        } else if (residue & used) {
          return false;  // residue must be coverable by future images
        }
        // assigned atoms outside the table entry must miss the product
        for (int dc = 0; dc < depth; ++dc) {
          int c = order[dc];
          if (!((source.comp_atoms(i, j) >> c) & 1u) && (images[c] & lhs))
            return false;
        }
      }
    return true;
  }

  bool dfs(int depth, Mask used) {
    if (exhausted) return false;
    if (depth == static_cast<int>(order.size()))
      return used == target.one() &&
             verify_embedding(source, target, images);
    const int atom = order[depth];
    const int conv = source.converse_atom(atom);

    // remaining atoms each need at least one fresh target atom
    const int remaining = static_cast<int>(order.size()) - depth;
    if (std::popcount(target.one() & ~used) < remaining) return false;

    auto try_image = [&](Mask img) -> bool {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      images[atom] = img;
      if (compatible(depth + 1, used | img) && dfs(depth + 1, used | img))
        return true;
      images[atom] = 0;
      return false;
    };

    if (atom == source.identity_index())
      return try_image(target.identity_mask());
    if (conv != atom && assigned(conv, depth)) {
      Mask forced = target.converse(images[conv]);
      if (forced == 0 || (forced & used) || (forced & ~target.diversity_mask()))
        return false;
      return try_image(forced);
    }

    // candidate subsets of the free diversity atoms, ascending mask order
    Mask free = target.diversity_mask() & ~used;
    std::vector<int> free_bits;
    for (Mask f = free; f;) {
      free_bits.push_back(std::countr_zero(f));
      f &= f - 1;
    }
    const std::size_t limit = std::size_t{1} << free_bits.size();
    for (std::size_t pick = 1; pick < limit; ++pick) {
      Mask img = 0;
      for (std::size_t b = 0; b < free_bits.size(); ++b)
        if ((pick >> b) & 1u) img |= Mask{1} << free_bits[b];
      if (conv == atom && target.converse(img) != img) continue;
      if (try_image(img)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

EmbedResult find_embedding(const Algebra& source, const Algebra& target,
                           long long node_budget) {
  EmbedResult result;
  EmbedSearch search(source, target, node_budget);
  bool ok = search.dfs(0, 0);
  result.nodes_visited = search.nodes;
  if (ok) {
    result.outcome = EmbedOutcome::found;
    result.embedding = Embedding{source.atom_names(), search.images};
  } else {
    result.outcome =
        search.exhausted ? EmbedOutcome::exhausted : EmbedOutcome::none;
  }
  return result;
}

EmbedResult find_embedding(const Subalgebra& source, const Algebra& target,
                           long long node_budget) {
  Algebra induced =
      induced_algebra(source, source.parent->name() + "-subalgebra");
  return find_embedding(induced, target, node_budget);
}

}  // namespace relalg
