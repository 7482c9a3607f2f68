#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

enum class TermKind {
  variable,
  zero,
  one,
  identity,
  complement,
  converse,
  join,
  meet,
  compose
};

struct Term {
  TermKind kind{};
  std::string var;              // for TermKind::variable
  std::vector<Term> children;   // 1 for unary, 2 for binary

  static Term variable(std::string name);
  static Term constant(TermKind k);
  static Term unary(TermKind k, Term child);
  static Term binary(TermKind k, Term lhs, Term rhs);
  friend bool operator==(const Term&, const Term&) = default;
};

struct Equation {
  Term lhs, rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// Grammar (ASCII): + join, . meet, ; composition, - complement (prefix),
// ^ converse (postfix on a primary), constants 0, 1, 1', and 0' as sugar
// for -1'.  Tightest first: -, ^; then ;; then .; then +.  All binary
// operators associate left.  Throws ParseError with the offending position.
Equation parse_equation(std::string_view text);

// Canonical printing with minimal parentheses; parse(print(e)) == e and
// printing introduces no counted symbols.
std::string to_string(const Term& t);
std::string to_string(const Equation& eq);

// Total occurrences of operation symbols (constants count as nullary
// operation symbols) and variables; '=' and parentheses do not count.
int length(const Term& t);
int length(const Equation& eq);

int num_variables(const Equation& eq);
// Distinct variables in first-occurrence order, reading lhs then rhs.
std::vector<std::string> variables(const Equation& eq);

// Least possible length of an equation in k distinct variables: 2k-2, with
// floor 2 at k = 1.
int min_length_lower_bound(int k);

// Standard term semantics over an algebra.  Throws DomainError on an
// unassigned variable, StructuralError on foreign elements.
Element evaluate(const Term& t, const Algebra& a,
                 const std::map<std::string, Element>& assignment);
Mask evaluate_mask(const Term& t, const Algebra& a,
                   const std::map<std::string, Mask>& assignment);

struct CheckResult {
  bool holds = true;
  // Failing assignment in first-occurrence variable order; empty when holds.
  std::vector<std::pair<std::string, Mask>> witness;
};

struct CheckOptions {
  int threads = 1;
  // Candidate elements for the variables; all elements when absent.
  std::optional<std::vector<Mask>> restrict_to;
};

// Exhaustive model check.  Assignments are enumerated lexicographically with
// variables in first-occurrence order and elements in ascending bitmask
// order; the reported witness is the least failing assignment regardless of
// the worker count.
CheckResult holds(const Equation& eq, const Algebra& a, CheckOptions opt = {});

}  // namespace relalg
