// Acceptance suite: one line per criterion, with wall-clock limits enforced.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "relalg/bounds.hpp"
#include "relalg/equation.hpp"
#include "relalg/io.hpp"
#include "relalg/lyndon.hpp"
#include "relalg/plane.hpp"
#include "relalg/representation.hpp"
#include "relalg/subalgebra.hpp"

using namespace relalg;

namespace {

struct Ctx {
  std::vector<std::string> failures;
  void require(bool cond, const std::string& msg) {
    if (!cond) failures.push_back(msg);
  }
};

Mask expected_lyndon_comp(int n, int a, int b) {
  const Mask identity = 1;
  const Mask one = (Mask{1} << (n + 1)) - 1;
  if (a == 0 && b == 0) return identity;
  if (a == 0) return Mask{1} << b;
  if (b == 0) return Mask{1} << a;
  if (a == b) return identity | (Mask{1} << a);
  return (one ^ identity) & ~(Mask{1} << a) & ~(Mask{1} << b);
}

void criterion1_lyndon_table(Ctx& c) {
  Algebra e5 = build_lyndon(4);
  c.require(e5.compose(Mask{2}, Mask{2}) == (Mask{1} | Mask{2}),
            "a1;a1 != 1'+a1 in E5");
  c.require(e5.compose(Mask{2}, Mask{4}) == (Mask{8} | Mask{16}),
            "a1;a2 != a3+a4 in E5");
  for (int n = 1; n <= 10; ++n) {
    Algebra e = build_lyndon(n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        if (e.comp_atoms(a, b) != expected_lyndon_comp(n, a, b)) {
          c.require(false, "table mismatch in E" + std::to_string(n + 1) +
                               " at (" + e.atom_name(a) + "," + e.atom_name(b) +
                               ")");
          return;
        }
  }
}

void criterion2_axioms(Ctx& c) {
  for (int n = 4; n <= 10; ++n)
    c.require(check_axioms(build_lyndon(n)).all_pass(),
              "axioms fail for E" + std::to_string(n + 1));
  c.require(check_axioms(fixtures::one_atom_algebra()).all_pass(),
            "axioms fail for the one-atom algebra");

  for (int n : {2, 3}) {
    Algebra e = build_lyndon(n);
    AxiomReport report = check_axioms(e);
    const AxiomCheck* assoc = report.check("associativity");
    bool witness_ok = assoc && assoc->failure &&
                      assoc->failure->atoms == std::vector<int>{1, 1, 2};
    c.require(witness_ok, "E" + std::to_string(n + 1) +
                              " associativity witness is not (a1,a1,a2)");
    if (n == 2 && witness_ok) {
      c.require(assoc->failure->lhs == Mask{4} && assoc->failure->rhs == 0,
                "E3 witness sides are not {a2} vs empty");
    }
    if (witness_ok) {
      Mask lhs = e.compose(e.comp_atoms(1, 1), e.atom_mask(2));
      Mask rhs = e.compose(e.atom_mask(1), e.comp_atoms(1, 2));
      c.require(lhs != rhs, "witness does not falsify associativity");
    }
  }

  // universal brute-force agreement on every fleet algebra with <= 32 elements
  std::vector<Algebra> fleet;
  for (int n = 1; n <= 4; ++n) fleet.push_back(build_lyndon(n));
  fleet.push_back(fixtures::one_atom_algebra());
  for (const Algebra& a : fleet)
    c.require(check_axioms(a).all_pass() == oracles::brute_force_axioms(a),
              "atom-level and universal verdicts disagree on " + a.name());
}

void criterion3_constructive_lyndon(Ctx& c) {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    ProjectivePlane pl = build_pg2(q);
    if (auto v = validate_plane(pl)) {
      c.require(false,
                "plane q=" + std::to_string(q) + " invalid: " + v->detail);
      continue;
    }
    Representation rep = build_affine_representation(pl);
    if (auto v = verify_representation(rep)) {
      c.require(false, "representation q=" + std::to_string(q) +
                           " failed: " + v->detail);
      continue;
    }
    Algebra expected = build_lyndon(q + 1);
    for (int a = 0; a < expected.atom_count(); ++a)
      for (int b = 0; b < expected.atom_count(); ++b) {
        auto entry = oracles::table_from_representation(rep, a, b);
        c.require(entry && *entry == expected.comp_atoms(a, b),
                  "represented table of E" + std::to_string(q + 2) +
                      " differs at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
      }
  }

  Representation forced = build_affine_representation(build_pg2(2), true);
  auto violation = verify_representation(forced);
  c.require(violation.has_value() && violation->check == "composition",
            "q=2 affine construction did not fail with a composition witness");
}

void criterion4_bruck_ryser(Ctx& c) {
  for (int q : {6, 14, 21, 22, 30, 33, 54})
    c.require(bruck_ryser(q).rules_out,
              "order " + std::to_string(q) + " not ruled out");
  for (int q : {4, 5, 8, 9, 10, 12})
    c.require(!bruck_ryser(q).rules_out,
              "order " + std::to_string(q) + " wrongly ruled out");
  for (long long n = 0; n <= 10000; ++n)
    if (is_sum_of_two_squares(n) != oracles::naive_sum_of_two_squares(n)) {
      c.require(false, "two-squares mismatch at " + std::to_string(n));
      return;
    }
}

void criterion5_counting_argument(Ctx& c) {
  Algebra e8 = build_lyndon(7);
  for (Mask g = 0; g < e8.element_count(); ++g) {
    Subalgebra sub = generate(e8, {g});
    if (sub.size() > 16 || !is_proper(sub)) {
      c.require(false, "1-generated subalgebra of E8 at generator " +
                           std::to_string(g) + " has size " +
                           std::to_string(sub.size()));
      return;
    }
  }

  for (int n = 4; n <= 8; ++n) {
    Algebra e = build_lyndon(n);
    const Mask count = e.element_count();
    Subalgebra least = generate(e, {});
    c.require(least.elements == boolean_closure(e, {}) && least.size() <= 4,
              "empty-generator closure mismatch in E" + std::to_string(n + 1));
    for (Mask g1 = 0; g1 < count; ++g1) {
      Subalgebra s1 = generate(e, {g1});
      if (s1.elements != boolean_closure(e, {g1}) || s1.size() > 16) {
        c.require(false, "1-generator closure mismatch in E" +
                             std::to_string(n + 1));
        return;
      }
      for (Mask g2 = g1 + 1; g2 < count; ++g2) {
        Subalgebra s2 = generate(e, {g1, g2});
        if (s2.elements != boolean_closure(e, {g1, g2}) || s2.size() > 256) {
          c.require(false, "2-generator closure mismatch in E" +
                               std::to_string(n + 1));
          return;
        }
      }
    }
  }
}

void criterion6_embeddings(Ctx& c) {
  Algebra e6 = build_lyndon(5);
  Algebra e8 = build_lyndon(7);
  int proper = 0;
  for (const Subalgebra& sub : all_subalgebras(e6)) {
    if (!is_proper(sub)) continue;
    ++proper;
    EmbedResult result = find_embedding(sub, e8);
    if (result.outcome != EmbedOutcome::found) {
      c.require(false, "a proper subalgebra of E6 of size " +
                           std::to_string(sub.size()) +
                           " does not embed into E8");
      continue;
    }
    Algebra induced = induced_algebra(sub, "sub");
    c.require(verify_embedding(induced, e8, result.embedding->images),
              "embedding of a proper subalgebra of E6 fails re-verification");
  }
  c.require(proper > 0, "no proper subalgebras of E6 found");

  EmbedResult none = find_embedding(build_lyndon(4), e8);
  c.require(none.outcome == EmbedOutcome::none,
            "E5 unexpectedly embeds into E8 (or search exhausted)");
}

void criterion7_bounds(Ctx& c) {
  c.require(k_max(1) == 4, "k_max(1) != 4");
  c.require(min_len(1) == 8, "min_len(1) != 8");
  c.require(std::abs(f_of(1) - (6 * std::log2(3.0) - 2)) < 1e-9,
            "f(1) differs from 6 log2(3) - 2");
  // at the n = 2 interval start, L = 488, the bound evaluates to
  // 2 log2(3) (log3(243) - 2) - 2 = 7.509775...
  c.require(std::abs(beta_lower_from_log2m(488) - 7.5097750043269365) < 1e-9,
            "beta_lower(488) is not 7.509775...");
  c.require(std::abs(beta_lower_from_log2m(488) - f_of(1)) < 1e-9,
            "beta_lower(488) does not meet the f value at the interval start");
  for (long long n = 1; n <= 5; ++n)
    c.require(verify_chain(n).all_pass(),
              "chain verification fails at n = " + std::to_string(n));
  c.require(std::abs(beta_star_lower(56) - 1.1699) < 1e-4,
            "beta_star(56) is not 1.1699 within 1e-4");
}

void criterion8_equation_engine(Ctx& c) {
  c.require(length(parse_equation("(x + y) . z = x . z + y . z")) == 12,
            "example equation length != 12");

  Algebra e5 = build_lyndon(4);
  c.require(holds(parse_equation("(x + y) . z = x . z + y . z"), e5).holds,
            "distributivity fails over E5");
  c.require(holds(parse_equation("x ; y = y ; x"), e5).holds,
            "commutativity fails over E5");

  Algebra s3 = fixtures::s3_algebra();
  Equation comm = parse_equation("x ; y = y ; x");
  CheckResult one = holds(comm, s3, {.threads = 1, .restrict_to = {}});
  c.require(!one.holds, "commutativity unexpectedly holds over S3");
  if (!one.holds) {
    std::map<std::string, Element> asg;
    for (const auto& [var, mask] : one.witness)
      asg.emplace(var, make_element(s3, mask));
    c.require(
        evaluate(comm.lhs, s3, asg).mask != evaluate(comm.rhs, s3, asg).mask,
        "S3 witness does not falsify the equation");
  }
  CheckResult eight = holds(comm, s3, {.threads = 8, .restrict_to = {}});
  c.require(one.holds == eight.holds && one.witness == eight.witness,
            "witness differs between 1 and 8 workers");
}

void criterion9_performance(Ctx& c) {
  Algebra e9 = build_lyndon(8);  // 512 elements, 512^3 assignments
  CheckOptions opt;
  opt.threads = 4;
  CheckResult r = holds(parse_equation("(x + y) ; z = x ; z + y ; z"), e9, opt);
  c.require(r.holds, "composition distributivity fails over E9");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Ctx&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Lyndon table fidelity (n = 1..10)", 1.0, criterion1_lyndon_table},
      {2, "axiom suite and universal cross-check", 10.0, criterion2_axioms},
      {3, "constructive Lyndon theorem (q = 3..9, q = 2 fails)", 60.0,
       criterion3_constructive_lyndon},
      {4, "Bruck-Ryser verdicts and two-squares oracle", 1.0,
       criterion4_bruck_ryser},
      {5, "counting-argument instances (E8 generators; n = 4..8)", 120.0,
       criterion5_counting_argument},
      {6, "embedding facts (E6 subalgebras; E5 not in E8)", 60.0,
       criterion6_embeddings},
      {7, "bounds arithmetic and derivation chain", 1.0, criterion7_bounds},
      {8, "equation engine on E5 and S3", 30.0, criterion8_equation_engine},
      {9, "performance smoke: 3-variable equation over E9", 60.0,
       criterion9_performance},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Ctx ctx;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(ctx);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > cr.limit_seconds)
      ctx.failures.push_back("runtime " + std::to_string(elapsed) +
                             " s exceeds limit " +
                             std::to_string(cr.limit_seconds) + " s");
    bool pass = ctx.failures.empty();
    failed += !pass;
    std::printf("[%s] C%d %s (%.2f s)\n", pass ? "PASS" : "FAIL", cr.id,
                cr.title, elapsed);
    for (const std::string& f : ctx.failures)
      std::printf("       %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
