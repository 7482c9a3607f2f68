#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "fixtures.hpp"
#include "relalg/io.hpp"
#include "relalg/lyndon.hpp"
#include "relalg/subalgebra.hpp"

using namespace relalg;

namespace {

Mask atom(const Algebra& a, const char* name) {
  return Mask{1} << *a.atom_index(name);
}

}  // namespace

TEST_CASE("generate: worked examples over E5") {
  Algebra e5 = build_lyndon(4);

  Subalgebra empty = generate(e5, {});
  CHECK(empty.elements ==
        std::vector<Mask>{0, 1, 30, 31});  // 0, 1', 0', 1

  Subalgebra one_gen = generate(e5, {atom(e5, "a1")});
  CHECK(one_gen.size() == 8);
  CHECK(one_gen.elements == std::vector<Mask>{0, 1, 2, 3, 28, 29, 30, 31});

  std::vector<Mask> all_atoms;
  for (int t = 0; t < 5; ++t) all_atoms.push_back(e5.atom_mask(t));
  CHECK(generate(e5, all_atoms).size() == 32);

  CHECK_THROWS_AS(generate(e5, {Mask{1} << 9}), StructuralError);
}

TEST_CASE("generated sets are closed under all six operations") {
  Algebra e5 = build_lyndon(4);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Mask> gens = {rng() & e5.one(), rng() & e5.one()};
    Subalgebra sub = generate(e5, gens);
    CHECK(sub.contains(0));
    CHECK(sub.contains(e5.one()));
    CHECK(sub.contains(e5.identity_mask()));
    for (Mask x : sub.elements) {
      CHECK(sub.contains(e5.complement(x)));
      CHECK(sub.contains(e5.converse(x)));
      for (Mask y : sub.elements) {
        CHECK(sub.contains(x | y));
        CHECK(sub.contains(x & y));
        CHECK(sub.contains(e5.compose(x, y)));
      }
    }
  }
}

TEST_CASE("boolean_closure: worked examples and block counts") {
  Algebra e5 = build_lyndon(4);
  CHECK(boolean_closure(e5, {}).size() == 4);
  CHECK(boolean_closure(e5, {atom(e5, "a1")}).size() == 8);
  // seeds overlapping 1' refine nothing extra
  CHECK(boolean_closure(e5, {e5.identity_mask()}).size() == 4);
}

TEST_CASE("generate equals boolean_closure on Lyndon algebras") {
  for (int n : {4, 5, 6}) {
    Algebra e = build_lyndon(n);
    const Mask count = e.element_count();
    // exhaustive over generator sets of size <= 2
    for (Mask g1 = 0; g1 < count; ++g1) {
      CHECK(generate(e, {g1}).elements == boolean_closure(e, {g1}));
      for (Mask g2 = g1 + 1; g2 < count; ++g2) {
        auto gen = generate(e, {g1, g2});
        CHECK(gen.elements == boolean_closure(e, {g1, g2}));
        CHECK(gen.size() <= 256);  // 2^(2^(k+1)) with k = 2
      }
    }
  }
  // random samples with three generators
  std::mt19937_64 rng(5);
  Algebra e8 = build_lyndon(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Mask> gens = {rng() & e8.one(), rng() & e8.one(),
                              rng() & e8.one()};
    auto gen = generate(e8, gens);
    CHECK(gen.elements == boolean_closure(e8, gens));
    CHECK(gen.size() <= 65536);  // 2^(2^4)
  }
}

TEST_CASE("is_proper") {
  Algebra e5 = build_lyndon(4);
  CHECK(is_proper(generate(e5, {atom(e5, "a1")})));
  std::vector<Mask> all_atoms;
  for (int t = 0; t < 5; ++t) all_atoms.push_back(e5.atom_mask(t));
  CHECK(!is_proper(generate(e5, all_atoms)));

  // in E2 the diversity element is an atom, so the minimal subalgebra is all
  Algebra e2 = build_lyndon(1);
  CHECK(!is_proper(generate(e2, {})));
}

TEST_CASE("minimal elements and the induced algebra") {
  Algebra e5 = build_lyndon(4);
  Subalgebra sub = generate(e5, {atom(e5, "a1")});
  CHECK(minimal_elements(sub) == std::vector<Mask>{1, 2, 28});

  Algebra induced = induced_algebra(sub, "B");
  CHECK(induced.atom_count() == 3);
  CHECK(induced.atom_names() ==
        std::vector<std::string>{"1'", "a1", "a2+a3+a4"});
  CHECK(induced.identity_index() == 0);
  CHECK(check_axioms(induced).all_pass());
  // a1;a1 = 1' + a1 inside the subalgebra
  CHECK(induced.comp_atoms(1, 1) == Mask{0b011});
  // block;block reaches everything
  CHECK(induced.comp_atoms(2, 2) == induced.one());
}

TEST_CASE("find_embedding: 1-generated subalgebra of E5 into E8") {
  Algebra e5 = build_lyndon(4);
  Algebra e8 = build_lyndon(7);
  Subalgebra sub = generate(e5, {atom(e5, "a1")});
  EmbedResult result = find_embedding(sub, e8);
  REQUIRE(result.outcome == EmbedOutcome::found);
  const Embedding& emb = *result.embedding;
  CHECK(emb.source_atoms ==
        std::vector<std::string>{"1'", "a1", "a2+a3+a4"});
  CHECK(emb.images == std::vector<Mask>{1, 2, 0b11111100});
  Algebra induced = induced_algebra(sub, "B");
  CHECK(verify_embedding(induced, e8, emb.images));
}

TEST_CASE("find_embedding: E5 into E8 has none, exhaustively") {
  Algebra e5 = build_lyndon(4);
  Algebra e8 = build_lyndon(7);
  EmbedResult result = find_embedding(e5, e8);
  CHECK(result.outcome == EmbedOutcome::none);
  CHECK(result.nodes_visited < 50'000'000);
}

TEST_CASE("find_embedding: identity embedding into itself") {
  for (const Algebra& a : {build_lyndon(4), fixtures::s3_algebra()}) {
    EmbedResult result = find_embedding(a, a);
    REQUIRE(result.outcome == EmbedOutcome::found);
    for (int t = 0; t < a.atom_count(); ++t)
      CHECK(result.embedding->images[t] == a.atom_mask(t));
  }
}

TEST_CASE("find_embedding: a tiny budget reports exhaustion") {
  Algebra e5 = build_lyndon(4);
  Algebra e8 = build_lyndon(7);
  EmbedResult result = find_embedding(e5, e8, 5);
  CHECK(result.outcome == EmbedOutcome::exhausted);
}

TEST_CASE("no Lyndon algebra embeds into a strictly larger one") {
  for (int ns = 4; ns <= 6; ++ns)
    for (int nt = ns + 1; nt <= 7; ++nt) {
      EmbedResult result =
          find_embedding(build_lyndon(ns), build_lyndon(nt));
      CHECK(result.outcome == EmbedOutcome::none);
    }
}

TEST_CASE("atom images extend additively to a full embedding") {
  // cross-validation of the atom-level search: extend the found map to every
  // element and check the whole operation tables
  Algebra e6 = build_lyndon(5);
  Algebra e8 = build_lyndon(7);
  for (const Subalgebra& sub : all_subalgebras(e6)) {
    if (!is_proper(sub)) continue;
    Algebra source = induced_algebra(sub, "sub");
    EmbedResult result = find_embedding(source, e8);
    REQUIRE(result.outcome == EmbedOutcome::found);
    const std::vector<Mask>& im = result.embedding->images;

    auto extend = [&](Mask x) {
      Mask out = 0;
      for (Mask xs = x; xs; xs &= xs - 1)
        out |= im[std::countr_zero(xs)];
      return out;
    };

    CHECK(extend(source.one()) == e8.one());
    CHECK(extend(source.identity_mask()) == e8.identity_mask());
    for (Mask x = 0; x < source.element_count(); ++x) {
      CHECK(extend(source.complement(x)) == e8.complement(extend(x)));
      CHECK(extend(source.converse(x)) == e8.converse(extend(x)));
      for (Mask y = 0; y < source.element_count(); ++y) {
        CHECK(extend(x | y) == (extend(x) | extend(y)));
        CHECK(extend(x & y) == (extend(x) & extend(y)));
        CHECK(extend(source.compose(x, y)) ==
              e8.compose(extend(x), extend(y)));
        if (x != y) CHECK(extend(x) != extend(y));  // injective
      }
    }
  }
}

TEST_CASE("all_subalgebras of E5: the 15 block closures") {
  Algebra e5 = build_lyndon(4);
  std::vector<Subalgebra> subs = all_subalgebras(e5);
  CHECK(subs.size() == 15);  // one per partition of the four diversity atoms
  int proper = 0;
  for (const Subalgebra& sub : subs) {
    // each is a fixpoint of generate
    CHECK(generate(e5, sub.elements).elements == sub.elements);
    proper += is_proper(sub);
  }
  CHECK(proper == 14);
}

TEST_CASE("every proper subalgebra of E6 embeds into E8, verified") {
  Algebra e6 = build_lyndon(5);
  Algebra e8 = build_lyndon(7);
  int checked = 0;
  for (const Subalgebra& sub : all_subalgebras(e6)) {
    if (!is_proper(sub)) continue;
    EmbedResult result = find_embedding(sub, e8);
    REQUIRE(result.outcome == EmbedOutcome::found);
    Algebra induced = induced_algebra(sub, "sub");
    CHECK(verify_embedding(induced, e8, result.embedding->images));
    ++checked;
  }
  CHECK(checked == 51);  // Bell(5) - 1 proper subalgebras
}

TEST_CASE("subalgebra and embedding JSON dumps") {
  Algebra e5 = build_lyndon(4);
  Subalgebra sub = generate(e5, {atom(e5, "a1")});
  Json j = subalgebra_to_json(sub);
  CHECK(j["parent"] == "E5");
  CHECK(j["elements"].size() == 8);
  CHECK(j["elements"][0] == Json::array());
  CHECK(j["elements"][1] == Json::array({"1'"}));

  Algebra e8 = build_lyndon(7);
  EmbedResult result = find_embedding(sub, e8);
  Json je = embedding_to_json(*result.embedding, e8);
  CHECK(je["map"]["a1"] == Json::array({"a1"}));
  CHECK(je["map"]["a2+a3+a4"].size() == 6);
}
