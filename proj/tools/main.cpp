// relalg: command-line workbench for finite relation algebras.
//
// Exit codes: 0 success / positive verdict; 2 semantic negative (axioms
// fail, equation fails, order ruled out, no embedding, verification
// failure); 3 embedding search exhausted; 64 usage or invalid input;
// 66 unreadable file.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relalg/io.hpp"

namespace {

using relalg::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw relalg::FileError("cannot write '" + path + "'");
  out << contents;
}

std::vector<relalg::Mask> parse_generator_list(const relalg::Algebra& a,
                                               const std::string& list) {
  std::vector<relalg::Mask> out;
  if (list.empty()) return out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    out.push_back(a.parse_element(list.substr(start, end - start)));
    if (end == list.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<relalg::Mask> load_restriction(const relalg::Algebra& a,
                                           const std::string& path) {
  std::ifstream in(path);
  if (!in) throw relalg::FileError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw relalg::StructuralError("invalid JSON in '" + path + "': " + e.what());
  }
  const Json* elems = &j;
  if (j.is_object() && j.contains("elements")) elems = &j.at("elements");
  if (!elems->is_array())
    throw relalg::StructuralError(
        "restriction file must be an array of elements or a subalgebra dump");
  std::vector<relalg::Mask> out;
  for (const Json& el : *elems) {
    relalg::Mask m = 0;
    for (const Json& atom : el) {
      auto idx = a.atom_index(atom.get<std::string>());
      if (!idx)
        throw relalg::StructuralError("unknown atom '" +
                                      atom.get<std::string>() + "'");
      m |= relalg::Mask{1} << *idx;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relalg: a workbench for finite relation algebras"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "worker count for equation checks")
      ->capture_default_str();

  // lyndon
  auto* cmd_lyndon = app.add_subcommand("lyndon", "emit the algebra E_{n+1}");
  int lyndon_n = 0;
  std::string lyndon_out;
  cmd_lyndon->add_option("--n", lyndon_n, "diversity atom count")->required();
  cmd_lyndon->add_option("--out", lyndon_out, "write algebra JSON here");

  // axioms
  auto* cmd_axioms = app.add_subcommand("axioms", "check the RA axioms");
  std::string axioms_file;
  cmd_axioms->add_option("--algebra", axioms_file, "algebra JSON file")
      ->required();

  // plane
  auto* cmd_plane = app.add_subcommand("plane", "construct PG(2,q)");
  int plane_q = 0;
  std::string plane_out;
  bool plane_validate = false;
  cmd_plane->add_option("--q", plane_q, "plane order (prime power)")->required();
  cmd_plane->add_option("--out", plane_out, "write plane JSON here");
  cmd_plane->add_flag("--validate", plane_validate, "run the plane validator");

  // br
  auto* cmd_br = app.add_subcommand("br", "Bruck-Ryser test");
  int br_order = 0;
  cmd_br->add_option("--order", br_order, "plane order to test")->required();

  // repr
  auto* cmd_repr =
      app.add_subcommand("repr", "affine representation of E_{q+2}");
  int repr_q = 0;
  std::string repr_out;
  bool repr_verify = false;
  cmd_repr->add_option("--q", repr_q, "plane order (prime power)")->required();
  cmd_repr->add_option("--out", repr_out, "write representation JSON here");
  cmd_repr->add_flag("--verify", repr_verify, "brute-force verification");

  // status
  auto* cmd_status =
      app.add_subcommand("status", "representability status of E_{n+1}");
  int status_n = 0;
  cmd_status->add_option("--n", status_n, "diversity atom count")->required();

  // eq
  auto* cmd_eq = app.add_subcommand("eq", "equation tools");
  cmd_eq->require_subcommand(1);
  auto* cmd_eq_check = cmd_eq->add_subcommand("check", "model-check over an algebra");
  std::string eqc_algebra, eqc_equation, eqc_restrict;
  cmd_eq_check->add_option("--algebra", eqc_algebra, "algebra JSON file")
      ->required();
  cmd_eq_check->add_option("--equation", eqc_equation, "equation text")
      ->required();
  cmd_eq_check->add_option("--restrict", eqc_restrict,
                           "JSON file restricting variable values");
  auto* cmd_eq_length = cmd_eq->add_subcommand("length", "equation length");
  std::string eql_equation;
  cmd_eq_length->add_option("--equation", eql_equation, "equation text")
      ->required();

  // subalg
  auto* cmd_subalg = app.add_subcommand("subalg", "generated subalgebra");
  std::string sub_algebra, sub_generators, sub_induced_out;
  cmd_subalg->add_option("--algebra", sub_algebra, "algebra JSON file")
      ->required();
  cmd_subalg
      ->add_option("--generators", sub_generators,
                   "comma-separated elements; atoms joined with '+'")
      ->required();
  cmd_subalg->add_option("--induced-out", sub_induced_out,
                         "write the subalgebra as an algebra JSON here");

  // embed
  auto* cmd_embed = app.add_subcommand("embed", "embedding search");
  std::string embed_source, embed_target;
  long long embed_budget = 50'000'000;
  cmd_embed->add_option("--source", embed_source, "source algebra JSON file")
      ->required();
  cmd_embed->add_option("--target", embed_target, "target algebra JSON file")
      ->required();
  cmd_embed->add_option("--budget", embed_budget, "search node budget")
      ->capture_default_str();

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "lower-bound table");
  long long bounds_n_max = 0;
  std::string bounds_format = "csv";
  cmd_bounds->add_option("--n-max", bounds_n_max, "last row index")->required();
  cmd_bounds->add_option("--format", bounds_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (cmd_lyndon->parsed()) {
      relalg::Algebra a = relalg::build_lyndon(lyndon_n);
      Json j = relalg::algebra_to_json(a);
      if (!lyndon_out.empty()) {
        write_file(lyndon_out, j.dump(2) + "\n");
        Json note;
        note["written"] = lyndon_out;
        note["name"] = a.name();
        note["atoms"] = a.atom_count();
        emit(note);
      } else {
        emit(j);
      }
      std::cerr << a.name() << ": " << a.atom_count() << " atoms, "
                << a.element_count() << " elements\n";
      return 0;
    }

    if (cmd_axioms->parsed()) {
      relalg::Algebra a = relalg::load_algebra_file(axioms_file);
      relalg::AxiomReport report = relalg::check_axioms(a);
      emit(relalg::axiom_report_to_json(a, report));
      std::cerr << a.name() << ": axioms "
                << (report.all_pass() ? "pass" : "fail") << "\n";
      return report.all_pass() ? 0 : 2;
    }

    if (cmd_plane->parsed()) {
      relalg::ProjectivePlane pl = relalg::build_pg2(plane_q);
      std::optional<relalg::PlaneViolation> violation;
      if (plane_validate) violation = relalg::validate_plane(pl);
      Json j = relalg::plane_to_json(pl);
      if (plane_validate) j["validated"] = !violation.has_value();
      if (!plane_out.empty()) {
        write_file(plane_out, j.dump(2) + "\n");
        Json note;
        note["written"] = plane_out;
        note["q"] = pl.q;
        note["points"] = pl.size();
        if (plane_validate) note["validated"] = !violation.has_value();
        emit(note);
      } else {
        emit(j);
      }
      std::cerr << "PG(2," << pl.q << "): " << pl.size()
                << " points and lines\n";
      return violation ? 2 : 0;
    }

    if (cmd_br->parsed()) {
      relalg::BrVerdict v = relalg::bruck_ryser(br_order);
      emit(relalg::br_to_json(v));
      std::cerr << "order " << v.order << ": "
                << (v.rules_out ? "ruled out" : "no conclusion") << "\n";
      return v.rules_out ? 2 : 0;
    }

    if (cmd_repr->parsed()) {
      relalg::ProjectivePlane pl = relalg::build_pg2(repr_q);
      relalg::Representation rep = relalg::build_affine_representation(pl);
      std::optional<relalg::RepViolation> violation;
      if (repr_verify) violation = relalg::verify_representation(rep);
      Json j;
      j["q"] = repr_q;
      j["algebra"] = rep.target.name();
      j["base"] = rep.base_size;
      if (repr_verify) {
        j["verified"] = !violation.has_value();
        if (violation) j["violation"] = violation->detail;
      }
      if (!repr_out.empty()) {
        write_file(repr_out, relalg::representation_to_json(rep).dump(2) + "\n");
        j["written"] = repr_out;
      } else {
        j["representation"] = relalg::representation_to_json(rep);
      }
      emit(j);
      std::cerr << rep.target.name() << " over base " << rep.base_size
                << (repr_verify ? (violation ? ": verification FAILED"
                                             : ": verified")
                                : "")
                << "\n";
      return violation ? 2 : 0;
    }

    if (cmd_status->parsed()) {
      relalg::ReprStatus st = relalg::representability_status(status_n);
      emit(relalg::repr_status_to_json(st));
      std::cerr << st.algebra_name << ": " << st.note << "\n";
      return 0;
    }

    if (cmd_eq_check->parsed()) {
      relalg::Algebra a = relalg::load_algebra_file(eqc_algebra);
      relalg::Equation eq = relalg::parse_equation(eqc_equation);
      relalg::CheckOptions opt;
      opt.threads = threads;
      if (!eqc_restrict.empty())
        opt.restrict_to = load_restriction(a, eqc_restrict);
      relalg::CheckResult result = relalg::holds(eq, a, opt);
      emit(relalg::check_result_to_json(a, result));
      std::cerr << relalg::to_string(eq) << " over " << a.name() << ": "
                << (result.holds ? "holds" : "fails") << "\n";
      return result.holds ? 0 : 2;
    }

    if (cmd_eq_length->parsed()) {
      relalg::Equation eq = relalg::parse_equation(eql_equation);
      std::cout << relalg::length(eq) << "\n";
      std::cerr << relalg::to_string(eq) << ": length "
                << relalg::length(eq) << ", " << relalg::num_variables(eq)
                << " distinct variables\n";
      return 0;
    }

    if (cmd_subalg->parsed()) {
      relalg::Algebra a = relalg::load_algebra_file(sub_algebra);
      std::vector<relalg::Mask> gens = parse_generator_list(a, sub_generators);
      relalg::Subalgebra sub = relalg::generate(a, gens);
      Json j = relalg::subalgebra_to_json(sub);
      j["size"] = sub.size();
      j["proper"] = relalg::is_proper(sub);
      if (!sub_induced_out.empty()) {
        relalg::Algebra induced =
            relalg::induced_algebra(sub, a.name() + "-sub");
        write_file(sub_induced_out,
                   relalg::algebra_to_json(induced).dump(2) + "\n");
        j["induced_written"] = sub_induced_out;
      }
      emit(j);
      std::cerr << a.name() << ": subalgebra of size " << sub.size() << " ("
                << (relalg::is_proper(sub) ? "proper" : "improper") << ")\n";
      return 0;
    }

    if (cmd_embed->parsed()) {
      relalg::Algebra source = relalg::load_algebra_file(embed_source);
      relalg::Algebra target = relalg::load_algebra_file(embed_target);
      relalg::EmbedResult result =
          relalg::find_embedding(source, target, embed_budget);
      if (result.outcome == relalg::EmbedOutcome::found) {
        emit(relalg::embedding_to_json(*result.embedding, target));
        std::cerr << source.name() << " embeds into " << target.name() << "\n";
        return 0;
      }
      std::cout << "null\n";
      if (result.outcome == relalg::EmbedOutcome::none) {
        std::cerr << "no embedding of " << source.name() << " into "
                  << target.name() << " (exhaustive)\n";
        return 2;
      }
      std::cerr << "search budget exhausted after " << result.nodes_visited
                << " nodes\n";
      return 3;
    }

    if (cmd_bounds->parsed()) {
      std::vector<relalg::BoundsRow> rows = relalg::bounds_table(bounds_n_max);
      if (bounds_format == "json")
        emit(relalg::bounds_rows_to_json(rows));
      else
        std::cout << relalg::bounds_csv(rows);
      std::cerr << rows.size() << " rows (the n = 0 row predates the interval "
                   "argument)\n";
      return 0;
    }
  } catch (const relalg::FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 66;
  } catch (const relalg::ConstructionUnsoundError& e) {
    Json j;
    j["error"] = e.what();
    emit(j);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }

  return 64;  // unreachable with require_subcommand
}
