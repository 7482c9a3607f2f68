#pragma once

#include <string>

#include "json.hpp"
#include "relalg/algebra.hpp"
#include "relalg/bounds.hpp"
#include "relalg/equation.hpp"
#include "relalg/lyndon.hpp"
#include "relalg/plane.hpp"
#include "relalg/representation.hpp"
#include "relalg/subalgebra.hpp"

namespace relalg {

// Keys keep insertion order so output is byte-reproducible.
using Json = nlohmann::ordered_json;

// Canonical algebra format:
// { "name":, "atoms": [..], "identity":, "converse": {atom: atom},
//   "table": { a: { b: [atoms in declared order] } } }
// Atoms missing from "converse" are self-converse; the table must be total.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, AlgebraConfig config = {});
Algebra load_algebra_file(const std::string& path, AlgebraConfig config = {});

Json axiom_report_to_json(const Algebra& a, const AxiomReport& report);

// { "q":, "points": [[c0,c1,c2]..], "lines": [[c0,c1,c2]..] }
Json plane_to_json(const ProjectivePlane& pl);

// { "base":, "relations": { atom: [[i,j] sorted lexicographically] } }
Json representation_to_json(const Representation& rep);

Json repr_status_to_json(const ReprStatus& status);

Json br_to_json(const BrVerdict& verdict);

Json check_result_to_json(const Algebra& a, const CheckResult& result);

// { "parent":, "elements": [[atom names]..] } elements ascending
Json subalgebra_to_json(const Subalgebra& sub);

// { "map": { source atom: [target atoms] } }
Json embedding_to_json(const Embedding& emb, const Algebra& target);

Json bounds_rows_to_json(const std::vector<BoundsRow>& rows);

}  // namespace relalg
