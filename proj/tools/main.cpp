// Command line front end: catalog, construction, validation, duality
// verification, automorphism reports and profinite demos.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (witness in
// the report), 2 precondition, cap or usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosetmg/aut_topology.hpp"
#include "cosetmg/catalog.hpp"
#include "cosetmg/equivalence.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/json_io.hpp"

namespace {

using namespace cosetmg;

struct GroupSelection {
  std::string group_name;
  std::string file;
  std::string gens;
  int degree = 0;
  bool large = false;
};

void add_group_options(CLI::App* cmd, GroupSelection& sel) {
  cmd->add_option("--group", sel.group_name, "catalog group name");
  cmd->add_option("--file", sel.file, "group JSON file");
  cmd->add_option("--gens", sel.gens, "generators in cycle notation, ';' separated");
  cmd->add_option("--degree", sel.degree, "degree for --gens");
  cmd->add_flag("--large", sel.large, "allow catalog entries gated for size");
}

PermGroup resolve_group(const GroupSelection& sel, std::string* name_out) {
  if (!sel.group_name.empty()) {
    if (!catalog_has(sel.group_name))
      throw PreconditionError("unknown catalog group: " + sel.group_name);
    if (catalog_requires_large(sel.group_name) && !sel.large)
      throw PreconditionError(sel.group_name + " is gated behind --large");
    *name_out = sel.group_name;
    return catalog_group(sel.group_name);
  }
  if (!sel.file.empty()) {
    return group_from_json(read_file(sel.file), name_out);
  }
  if (!sel.gens.empty()) {
    if (sel.degree <= 0) throw PreconditionError("--gens requires --degree");
    std::vector<Perm> gens;
    std::size_t start = 0;
    while (start <= sel.gens.size()) {
      std::size_t semi = sel.gens.find(';', start);
      std::string part = sel.gens.substr(start, semi == std::string::npos ? semi : semi - start);
      if (!part.empty()) gens.push_back(parse_cycles(part, sel.degree));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    *name_out = "custom";
    return PermGroup::generated(sel.degree, std::move(gens));
  }
  throw PreconditionError("select a group with --group, --file or --gens");
}

SubgroupFamily resolve_basis(const PermGroup& G, const std::string& group_name,
                             const std::string& basis, const Caps& caps) {
  if (basis.empty() || basis == "all") return all_subgroups_family(G, caps);
  if (basis == "chain") return chain_basis(group_name);
  // Anything else is a file: {"subgroups": [[[images...], ...], ...]},
  // closed under intersection and conjugation on load.
  nlohmann::json j = nlohmann::json::parse(read_file(basis));
  std::vector<ElementSet> members;
  for (const auto& sub : j.at("subgroups")) {
    ElementSet U;
    for (const auto& images : sub) {
      int idx = G.index_of(Perm(images.get<std::vector<int>>()));
      if (idx < 0) throw PreconditionError("basis file element is not in the group");
      U.push_back(idx);
    }
    members.push_back(std::move(U));
  }
  return close_basis(G, std::move(members), caps);
}

void emit(const std::string& text, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(json_path, text + "\n");
  }
}

Caps cli_caps() {
  Caps caps;
  caps.centralizer_max_omega = 64;  // covers the built-in catalog
  return caps;
}

int run(int argc, char** argv) {
  CLI::App app{"finite coset meet groupoids: construction, reconstruction and reports"};
  app.require_subcommand(1);

  GroupSelection sel;
  std::string basis = "all";
  std::string json_path;
  std::string dot_path;
  std::uint64_t seed = 0;
  int depth = 3;
  std::string tower_name = "2adic";
  std::string input_file;
  bool fullness = false;

  auto* cmd_catalog = app.add_subcommand("catalog", "list built-in groups");

  auto* cmd_w = app.add_subcommand("w", "build the coset meet groupoid and validate it");
  add_group_options(cmd_w, sel);
  cmd_w->add_option("--basis", basis, "all | chain | basis JSON file");
  cmd_w->add_option("--json", json_path, "write the report here instead of stdout");
  cmd_w->add_option("--dot", dot_path, "write the idempotent order as DOT");

  auto* cmd_validate = app.add_subcommand("validate", "check axioms of a groupoid JSON file");
  cmd_validate->add_option("file", input_file, "groupoid JSON")->required();
  cmd_validate->add_flag("--fullness", fullness, "also check the level axioms");
  cmd_validate->add_option("--json", json_path, "write the report here instead of stdout");

  auto* cmd_export = app.add_subcommand("export", "export the idempotent order as DOT");
  add_group_options(cmd_export, sel);
  cmd_export->add_option("--basis", basis, "all | chain | basis JSON file");
  cmd_export->add_option("--dot", dot_path, "output DOT path")->required();

  auto* cmd_aut = app.add_subcommand("aut", "run the automorphism topology report");
  add_group_options(cmd_aut, sel);
  cmd_aut->add_option("--basis", basis, "all | chain | basis JSON file");
  cmd_aut->add_option("--json", json_path, "write the report here instead of stdout");

  auto* cmd_roundtrip = app.add_subcommand("roundtrip", "verify both duality round trips");
  add_group_options(cmd_roundtrip, sel);
  cmd_roundtrip->add_option("--basis", basis, "all | chain | basis JSON file");
  cmd_roundtrip->add_option("--json", json_path, "write the report here instead of stdout");
  cmd_roundtrip->add_option("--seed", seed, "seed for the sampled morphism suites");

  auto* cmd_verify = app.add_subcommand("verify-duality", "roundtrip for a group JSON file");
  cmd_verify->add_option("file", input_file, "group JSON")->required();
  cmd_verify->add_option("--basis", basis, "all | chain | basis JSON file");
  cmd_verify->add_option("--json", json_path, "write the report here instead of stdout");
  cmd_verify->add_option("--seed", seed, "seed for the sampled morphism suites");

  auto* cmd_profinite = app.add_subcommand("profinite", "inverse limit demos");
  auto* cmd_demo = cmd_profinite->add_subcommand("demo", "lazy/eager agreement and filter counts");
  cmd_demo->add_option("--tower", tower_name, "2adic | dihedral | tower JSON file");
  cmd_demo->add_option("--depth", depth, "truncation depth");
  cmd_demo->add_option("--json", json_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage problems are precondition errors
  }
  const Caps caps = cli_caps();

  if (cmd_catalog->parsed()) {
    for (const auto& e : catalog()) {
      std::cout << e.name << "  order=" << catalog_group(e.name).order()
                << "  basis=" << e.basis_policy << (e.requires_large ? "  (--large)" : "")
                << "\n";
    }
    return 0;
  }

  if (cmd_w->parsed() || cmd_export->parsed()) {
    std::string name;
    PermGroup G = resolve_group(sel, &name);
    SubgroupFamily S = resolve_basis(G, name, basis, caps);
    CosetGroupoid W = build_w(G, S);
    if (!dot_path.empty()) write_file(dot_path, idempotent_order_dot(W.groupoid));
    if (cmd_export->parsed()) return 0;

    ValidationReport v = check_axioms(W.groupoid, true);
    Report rep;
    rep.command = "w";
    rep.meta["group"] = name;
    rep.meta["basis"] = basis;
    auto& c = rep.add("axioms");
    c.passed = v.passed;
    c.cardinalities["carrier"] = W.groupoid.size();
    if (!v.passed) c.witness = v.violations.front().axiom;
    nlohmann::ordered_json out;
    out["groupoid"] = nlohmann::ordered_json::parse(groupoid_to_json(W));
    out["report"] = nlohmann::ordered_json::parse(report_to_json(rep));
    emit(out.dump(2), json_path);
    return rep.passed() ? 0 : 1;
  }

  if (cmd_validate->parsed()) {
    MeetGroupoid M = groupoid_from_json(read_file(input_file));
    ValidationReport v = check_axioms(M, fullness);
    Report rep;
    rep.command = "validate";
    rep.meta["file"] = input_file;
    for (const auto& viol : v.violations) {
      auto& c = rep.add(viol.axiom);
      c.passed = false;
      std::string w;
      for (std::size_t i = 0; i < viol.witness.size(); ++i)
        w += (i ? "," : "") + std::to_string(viol.witness[i]);
      c.witness = w;
    }
    if (v.passed) rep.add("axioms");
    emit(report_to_json(rep), json_path);
    return v.passed ? 0 : 1;
  }

  if (cmd_aut->parsed()) {
    std::string name;
    PermGroup G = resolve_group(sel, &name);
    SubgroupFamily S = resolve_basis(G, name, basis, caps);
    Report rep = aut_suite(G, S, caps);
    rep.meta["group"] = name;
    rep.meta["basis"] = basis;
    emit(report_to_json(rep), json_path);
    return rep.passed() ? 0 : 1;
  }

  if (cmd_roundtrip->parsed() || cmd_verify->parsed()) {
    std::string name;
    PermGroup G = cmd_verify->parsed() ? group_from_json(read_file(input_file), &name)
                                       : resolve_group(sel, &name);
    SubgroupFamily S = resolve_basis(G, name, basis, caps);
    Report rep = roundtrip_suite(G, S, 20, seed, caps);
    rep.meta["group"] = name;
    rep.meta["basis"] = basis;
    emit(report_to_json(rep), json_path);
    return rep.passed() ? 0 : 1;
  }

  if (cmd_demo->parsed()) {
    InverseSystem sys;
    if (tower_name == "2adic" || tower_name == "dihedral") {
      sys = named_tower(tower_name, depth);
    } else {
      sys = tower_from_json(read_file(tower_name));
    }
    if (depth > sys.depth()) depth = sys.depth();
    Report rep = profinite_suite(sys, depth);
    rep.meta["tower"] = tower_name;
    emit(report_to_json(rep), json_path);
    return rep.passed() ? 0 : 1;
  }

  std::cerr << app.help();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
