#include "relalg/io.hpp"

#include <bit>
#include <fstream>

namespace relalg {

namespace {

Json atom_list(const Algebra& a, Mask m) {
  Json out = Json::array();
  while (m) {
    int t = std::countr_zero(m);
    m &= m - 1;
    out.push_back(a.atom_name(t));
  }
  return out;
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["name"] = a.name();
  j["atoms"] = a.atom_names();
  j["identity"] = a.atom_name(a.identity_index());
  Json conv = Json::object();
  for (int t = 0; t < a.atom_count(); ++t)
    if (a.converse_atom(t) != t)
      conv[a.atom_name(t)] = a.atom_name(a.converse_atom(t));
  j["converse"] = std::move(conv);
  Json table = Json::object();
  for (int x = 0; x < a.atom_count(); ++x) {
    Json row = Json::object();
    for (int y = 0; y < a.atom_count(); ++y)
      row[a.atom_name(y)] = atom_list(a, a.comp_atoms(x, y));
    table[a.atom_name(x)] = std::move(row);
  }
  j["table"] = std::move(table);
  return j;
}

Algebra algebra_from_json(const Json& j, AlgebraConfig config) {
  try {
    std::string name = j.at("name").get<std::string>();
    std::vector<std::string> atoms =
        j.at("atoms").get<std::vector<std::string>>();
    const int n = static_cast<int>(atoms.size());
    auto index_of = [&](const std::string& nm) {
      for (int i = 0; i < n; ++i)
        if (atoms[i] == nm) return i;
      throw StructuralError("unknown atom '" + nm + "' in algebra '" + name +
                            "'");
    };
    int identity = index_of(j.at("identity").get<std::string>());

    std::vector<int> converse(n);
    for (int i = 0; i < n; ++i) converse[i] = i;
    if (j.contains("converse"))
      for (const auto& [from, to] : j.at("converse").items())
        converse[index_of(from)] = index_of(to.get<std::string>());

    std::vector<Mask> table(static_cast<std::size_t>(n) * n, 0);
    std::vector<bool> present(table.size(), false);
    for (const auto& [xa, row] : j.at("table").items()) {
      int x = index_of(xa);
      for (const auto& [ya, entry] : row.items()) {
        int y = index_of(ya);
        Mask m = 0;
        for (const auto& atom : entry)
          m |= Mask{1} << index_of(atom.get<std::string>());
        table[x * n + y] = m;
        present[x * n + y] = true;
      }
    }
    for (bool p : present)
      if (!p)
        throw StructuralError("composition table of '" + name +
                              "' is not total");

    return Algebra(std::move(name), std::move(atoms), identity,
                   std::move(converse), std::move(table), config);
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed algebra JSON: ") + e.what());
  }
}

Algebra load_algebra_file(const std::string& path, AlgebraConfig config) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw StructuralError("invalid JSON in '" + path + "': " + e.what());
  }
  return algebra_from_json(j, config);
}

Json axiom_report_to_json(const Algebra& a, const AxiomReport& report) {
  Json j;
  j["algebra"] = a.name();
  j["pass"] = report.all_pass();
  Json checks = Json::array();
  for (const AxiomCheck& c : report.checks) {
    Json jc;
    jc["axiom"] = c.axiom;
    jc["status"] = c.pass() ? "pass" : "fail";
    if (c.failure) {
      Json w;
      Json atoms = Json::array();
      for (int t : c.failure->atoms) atoms.push_back(a.atom_name(t));
      w["atoms"] = std::move(atoms);
      w["lhs"] = atom_list(a, c.failure->lhs);
      w["rhs"] = atom_list(a, c.failure->rhs);
      w["detail"] = c.failure->detail;
      jc["witness"] = std::move(w);
    }
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json plane_to_json(const ProjectivePlane& pl) {
  Json j;
  j["q"] = pl.q;
  Json pts = Json::array();
  for (const auto& p : pl.points) pts.push_back({p[0], p[1], p[2]});
  j["points"] = std::move(pts);
  Json lns = Json::array();
  for (const auto& l : pl.lines) lns.push_back({l[0], l[1], l[2]});
  j["lines"] = std::move(lns);
  return j;
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["base"] = rep.base_size;
  Json rels = Json::object();
  for (int t = 0; t < rep.target.atom_count(); ++t) {
    Json pairs = Json::array();
    const BitMatrix& r = rep.relations[t];
    for (int i = 0; i < r.size(); ++i)
      for (int jcol = 0; jcol < r.size(); ++jcol)
        if (r.get(i, jcol)) pairs.push_back({i, jcol});
    rels[rep.target.atom_name(t)] = std::move(pairs);
  }
  j["relations"] = std::move(rels);
  return j;
}

Json repr_status_to_json(const ReprStatus& status) {
  Json j;
  j["n"] = status.n;
  j["algebra"] = status.algebra_name;
  switch (status.kind) {
    case ReprKind::representable: j["status"] = "representable"; break;
    case ReprKind::non_representable: j["status"] = "non_representable"; break;
    case ReprKind::unknown: j["status"] = "unknown"; break;
  }
  if (status.reason == NonReprReason::bruck_ryser) {
    j["reason"] = "bruck_ryser";
    j["ruled_out_order"] = status.ruled_out_order;
  } else if (status.reason == NonReprReason::not_relation_algebra) {
    j["reason"] = "not_relation_algebra";
  }
  if (status.witness) {
    j["base"] = status.witness->base_size;
    j["verified"] = true;
  }
  j["note"] = status.note;
  return j;
}

Json br_to_json(const BrVerdict& verdict) {
  Json j;
  j["order"] = verdict.order;
  j["verdict"] = verdict.rules_out ? "rules_out" : "no_conclusion";
  if (verdict.search_bound >= 0) j["search_bound"] = verdict.search_bound;
  return j;
}

Json check_result_to_json(const Algebra& a, const CheckResult& result) {
  Json j;
  j["status"] = result.holds ? "holds" : "fails";
  if (!result.holds) {
    Json w = Json::object();
    for (const auto& [var, mask] : result.witness) w[var] = atom_list(a, mask);
    j["witness"] = std::move(w);
  }
  return j;
}

Json subalgebra_to_json(const Subalgebra& sub) {
  Json j;
  j["parent"] = sub.parent->name();
  Json elems = Json::array();
  for (Mask m : sub.elements) elems.push_back(atom_list(*sub.parent, m));
  j["elements"] = std::move(elems);
  return j;
}

Json embedding_to_json(const Embedding& emb, const Algebra& target) {
  Json map = Json::object();
  for (std::size_t i = 0; i < emb.source_atoms.size(); ++i)
    map[emb.source_atoms[i]] = atom_list(target, emb.images[i]);
  Json j;
  j["map"] = std::move(map);
  return j;
}

Json bounds_rows_to_json(const std::vector<BoundsRow>& rows) {
  Json out = Json::array();
  for (const BoundsRow& r : rows) {
    Json j;
    j["n"] = r.n;
    j["order"] = r.order.to_decimal();
    j["log2_size"] = r.log2_size.to_decimal();
    j["k_max"] = r.k_max;
    j["min_vars"] = r.min_vars;
    j["min_len"] = r.min_len;
    j["f_n"] = r.f_n;
    j["beta_lower"] = r.beta_lower;
    j["interval_argument_applies"] = r.interval_argument_applies;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace relalg
