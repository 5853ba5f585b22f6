// qtwist: exact classification toolkit for twisted affine vertex
// superalgebra extensions. Subcommands: qspace, isotropic, classify,
// tables, character, verify.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtwist/classifier.hpp"
#include "qtwist/json_io.hpp"
#include "qtwist/pbw.hpp"
#include "qtwist/qsuites.hpp"

using namespace qtwist;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInvalid = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

int cmd_qspace(const std::string& type, std::int64_t shift, bool with_cocycle,
               const std::string& load_path, bool verify_flag,
               const std::string& out_path) {
  json j;
  if (!load_path.empty()) {
    json in = load_json(load_path);
    if (in.contains("omega")) {
      AbCocycle x = io::cocycle_from_json(in, verify_flag);
      j["cocycle"] = io::cocycle_to_json(x);
      j["verified"] = verify_flag;
    } else {
      QuadForm q = io::quad_form_from_json(in);
      j["quad_form"] = io::quad_form_to_json(q);
      j["verified"] = true;
    }
    emit(j, out_path);
    return kExitOk;
  }
  const RootDatum& d = build_root_datum(LieType::parse(type));
  QuadForm q = quad_form_lie(d, shift);
  j["type"] = type;
  j["shift"] = shift;
  j["root_datum"] = io::root_datum_to_json(d);
  j["quad_form"] = io::quad_form_to_json(q);
  json reps = json::array();
  const DiscriminantGroup& dg = discriminant_group(d);
  for (std::int64_t i = 0; i < dg.group.size(); ++i)
    reps.push_back({{"class", dg.group.element(i)}, {"weight", dg.reps[i]}});
  j["coset_representatives"] = std::move(reps);
  if (with_cocycle) j["cocycle"] = io::cocycle_to_json(em_inverse(q));
  emit(j, out_path);
  return kExitOk;
}

int cmd_isotropic(const std::string& spec_path, const std::string& type,
                  std::int64_t shift, const std::string& out_path) {
  QuadForm q;
  if (!spec_path.empty()) {
    ExtensionSpec spec = io::spec_from_json(load_json(spec_path));
    q = build_ambient(spec).q;
  } else {
    q = quad_form_lie(build_root_datum(LieType::parse(type)), shift);
  }
  json out = json::array();
  for (const auto& si : super_isotropic_subspaces(q))
    out.push_back(io::super_isotropic_to_json(si, q.group));
  emit(json{{"subspaces", out}}, out_path);
  return kExitOk;
}

int cmd_classify(const std::string& spec_path, std::int64_t parity_cutoff,
                 std::int64_t character_cutoff, const std::string& out_path) {
  ExtensionSpec spec = io::spec_from_json(load_json(spec_path));
  AmbientSpace a = build_ambient(spec);
  Verdict v = decide_extension(spec);
  json j = io::verdict_to_json(v, a);
  bool verification_ok = v.admissible;
  if (v.admissible && parity_cutoff > 0) {
    SpinParityReport rep = spin_parity_check(spec, parity_cutoff);
    j["spin_parity"] = {{"pass", rep.pass},
                        {"checked", rep.checked},
                        {"counterexamples", rep.counterexamples}};
    if (!rep.pass) verification_ok = false;
  }
  if (v.admissible && character_cutoff > 0) {
    GradedSeries s = graded_character(spec, Rat(character_cutoff));
    j["character"] = io::series_to_json(s);
  }
  emit(j, out_path);
  return verification_ok ? kExitOk : kExitVerification;
}

int cmd_tables(const std::string& out_path, bool parallel,
               const std::string& json_out) {
  TableScan scan = generate_tables(parallel);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << scan.markdown;
  } else {
    std::cout << scan.markdown;
  }
  if (!json_out.empty()) {
    json rows = json::array();
    for (const auto& r : scan.rows)
      rows.push_back({{"type", r.type},
                      {"shift", r.shift},
                      {"lattice", r.lattice},
                      {"super", r.super},
                      {"trivial", r.trivial}});
    emit(rows, json_out);
  }
  return kExitOk;
}

int cmd_character(const std::string& spec_path, std::int64_t cutoff,
                  const std::string& out_path) {
  ExtensionSpec spec = io::spec_from_json(load_json(spec_path));
  GradedSeries s = graded_character(spec, Rat(cutoff));
  emit(io::series_to_json(s), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int nmax, int dcap,
               const std::string& out_path) {
  SuiteReport rep;
  if (suite == "qint") rep = run_qint_suite();
  else if (suite == "theta") rep = run_theta_suite(dcap);
  else if (suite == "rmatrix") rep = run_rmatrix_suite();
  else if (suite == "phases") rep = run_phases_suite();
  else if (suite == "appendix") rep = run_appendix_suite(nmax);
  else throw std::invalid_argument("unknown suite: " + suite);
  emit(io::suite_report_to_json(rep), out_path);
  return rep.all_pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quadratic-space / cocycle / quantum-identity toolkit"};
  app.require_subcommand(1);

  std::string type = "A1", out_path, load_path, spec_path, json_out, suite;
  std::int64_t shift = 0, parity_cutoff = 0, character_cutoff = 0, cutoff = 4;
  bool with_cocycle = false, verify_flag = false, parallel = false;
  int nmax = 4, dcap = 8;

  auto* qspace = app.add_subcommand("qspace", "quadratic space of a Lie type");
  qspace->add_option("--type", type, "Lie type, e.g. E7");
  qspace->add_option("--shift", shift, "integer shift N");
  qspace->add_flag("--cocycle", with_cocycle, "include the EM cocycle");
  qspace->add_option("--load", load_path, "re-ingest an exported JSON file");
  qspace->add_flag("--verify", verify_flag, "re-check cocycle identities on load");
  qspace->add_option("--out", out_path, "output file (default stdout)");

  auto* iso = app.add_subcommand("isotropic", "super isotropic subspaces");
  iso->add_option("--type", type, "Lie type");
  iso->add_option("--shift", shift, "integer shift N");
  iso->add_option("--spec", spec_path, "extension spec JSON");
  iso->add_option("--out", out_path, "output file");

  auto* cls = app.add_subcommand("classify", "Theorem-level decision procedure");
  cls->add_option("--spec", spec_path, "extension spec JSON")->required();
  cls->add_option("--parity-cutoff", parity_cutoff, "spin-parity height cutoff")
      ->check(CLI::NonNegativeNumber);
  cls->add_option("--character-cutoff", character_cutoff, "character cutoff")
      ->check(CLI::NonNegativeNumber);
  cls->add_option("--out", out_path, "output file");

  auto* tab = app.add_subcommand("tables", "regenerate the classification tables");
  tab->add_option("--out", out_path, "markdown output file");
  tab->add_option("--json", json_out, "row dump as JSON");
  tab->add_flag("--parallel", parallel, "fan out across (type, N)");

  auto* chr = app.add_subcommand("character", "graded character of a spec");
  chr->add_option("--spec", spec_path, "extension spec JSON")->required();
  chr->add_option("--cutoff", cutoff, "exponent cutoff")->check(CLI::NonNegativeNumber);
  chr->add_option("--out", out_path, "output file");

  auto* ver = app.add_subcommand("verify", "exact identity suites");
  ver->add_option("--suite", suite, "qint|theta|rmatrix|phases|appendix")->required();
  ver->add_option("--nmax", nmax, "appendix suite depth");
  ver->add_option("--dcap", dcap, "theta truncation degree");
  ver->add_option("--out", out_path, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*qspace) return cmd_qspace(type, shift, with_cocycle, load_path, verify_flag, out_path);
    if (*iso) return cmd_isotropic(spec_path, type, shift, out_path);
    if (*cls) return cmd_classify(spec_path, parity_cutoff, character_cutoff, out_path);
    if (*tab) return cmd_tables(out_path, parallel, json_out);
    if (*chr) return cmd_character(spec_path, cutoff, out_path);
    if (*ver) return cmd_verify(suite, nmax, dcap, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::length_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInvalid;
}
