#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosetmg/aut_topology.hpp"
#include "cosetmg/catalog.hpp"
#include "cosetmg/equivalence.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/json_io.hpp"

namespace py = pybind11;
using namespace cosetmg;

PYBIND11_MODULE(cosetmg, m) {
  m.doc() = "Finite coset meet groupoids: the W / G duality, automorphism "
            "machinery and profinite towers";

  // Base first: translators run newest-first, so the derived classes must
  // shadow the base.
  py::register_exception<Error>(m, "GroupError");
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<PreconditionError>(m, "PreconditionError");

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", [](const Perm& p) { return p.images(); })
      .def("__call__", [](const Perm& p, int i) { return p(i); })
      .def("__mul__", [](const Perm& p, const Perm& q) { return p * q; })
      .def("inverse", &Perm::inverse)
      .def("order", &Perm::order)
      .def("__eq__", [](const Perm& p, const Perm& q) { return p == q; })
      .def("__repr__", [](const Perm& p) { return "Perm " + to_cycles(p); });

  m.def("parse_cycles", &parse_cycles, py::arg("text"), py::arg("degree"));
  m.def("to_cycles", &to_cycles);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<int>(), py::arg("degree"))
      .def_static(
          "generated",
          [](int degree, const std::vector<Perm>& gens) {
            return PermGroup::generated(degree, gens);
          },
          py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def_property_readonly("elements", [](const PermGroup& G) { return G.elements(); })
      .def_property_readonly("generators", [](const PermGroup& G) { return G.generators(); })
      .def("index_of", &PermGroup::index_of)
      .def("mul", &PermGroup::mul)
      .def("inv", &PermGroup::inv)
      .def("__len__", &PermGroup::order)
      .def("__repr__", [](const PermGroup& G) {
        return "PermGroup(degree=" + std::to_string(G.degree()) +
               ", order=" + std::to_string(G.order()) + ")";
      });

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_group", &catalog_group, py::arg("name"));

  m.def("enumerate_subgroups",
        [](const PermGroup& G) { return enumerate_subgroups(G); });
  m.def("left_cosets", &left_cosets, py::arg("group"), py::arg("subgroup"));
  m.def("conjugate_subgroup", &conjugate_subgroup, py::arg("group"), py::arg("g"),
        py::arg("subgroup"));
  m.def("center", &center);
  m.def("double_coset_count", &double_coset_count);
  m.def("brute_automorphisms", [](const PermGroup& G) { return brute_automorphisms(G); });
  m.def("centralizer_in_sym", [](const PermGroup& H, int max_omega) {
          Caps caps;
          caps.centralizer_max_omega = max_omega;
          return centralizer_in_sym(H, caps);
        },
        py::arg("group"), py::arg("max_omega") = Caps{}.centralizer_max_omega);
  m.def("normalizer_in_sym", [](const PermGroup& H) { return normalizer_in_sym(H); });

  py::class_<SubgroupFamily>(m, "SubgroupFamily")
      .def_readonly("members", &SubgroupFamily::members)
      .def_readonly("meet_closed", &SubgroupFamily::meet_closed)
      .def_readonly("conjugation_closed", &SubgroupFamily::conjugation_closed)
      .def_readonly("separating", &SubgroupFamily::separating)
      .def("__len__", [](const SubgroupFamily& S) { return S.members.size(); });

  m.def("make_family", &make_family, py::arg("group"), py::arg("members"));
  m.def("all_subgroups_family", [](const PermGroup& G) { return all_subgroups_family(G); });
  m.def("close_basis",
        [](const PermGroup& G, std::vector<ElementSet> seed) {
          return close_basis(G, std::move(seed));
        },
        py::arg("group"), py::arg("seed"));
  m.def("chain_basis", &chain_basis, py::arg("group_name"));

  py::class_<AxiomViolation>(m, "AxiomViolation")
      .def_readonly("axiom", &AxiomViolation::axiom)
      .def_readonly("witness", &AxiomViolation::witness);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("passed", &ValidationReport::passed)
      .def_readonly("violations", &ValidationReport::violations);

  py::class_<MeetGroupoid>(m, "MeetGroupoid")
      .def_property_readonly("size", &MeetGroupoid::size)
      .def("product",
           [](const MeetGroupoid& M, int a, int b) -> py::object {
             int c = M.product(a, b);
             if (c == MeetGroupoid::kUndefined) return py::none();
             return py::int_(c);
           })
      .def("meet", &MeetGroupoid::meet)
      .def("inverse", &MeetGroupoid::inverse)
      .def("leq", &MeetGroupoid::leq)
      .def("idempotents", &MeetGroupoid::idempotents)
      .def("left_star_cosets", &MeetGroupoid::left_star_cosets)
      .def("right_star_cosets", &MeetGroupoid::right_star_cosets)
      .def("coset_frame", &MeetGroupoid::coset_frame)
      .def("level_up", &MeetGroupoid::level_up)
      .def("label", &MeetGroupoid::label)
      .def("__repr__", [](const MeetGroupoid& M) {
        return "MeetGroupoid(size=" + std::to_string(M.size()) + ")";
      });

  m.def("check_axioms",
        [](const MeetGroupoid& M, bool fullness) { return check_axioms(M, fullness); },
        py::arg("groupoid"), py::arg("fullness") = true);

  py::class_<CosetGroupoid>(m, "CosetGroupoid")
      .def_readonly("groupoid", &CosetGroupoid::groupoid)
      .def_readonly("family", &CosetGroupoid::family)
      .def_property_readonly("group",
                             [](const CosetGroupoid& W) { return W.group(); })
      .def("set_of", [](const CosetGroupoid& W, int id) { return W.set_of(id); })
      .def("id_of_set", &CosetGroupoid::id_of_set);

  m.def("build_w", &build_w, py::arg("group"), py::arg("family"));

  py::class_<FullFilter>(m, "FullFilter")
      .def_readonly("choices", &FullFilter::choices)
      .def("choice", &FullFilter::choice);

  m.def("enumerate_full_filters", &enumerate_full_filters);
  m.def("filter_to_aut", &filter_to_aut);
  m.def("aut_to_filter", &aut_to_filter);
  m.def("g_of_m", &g_of_m);
  m.def("hat", &hat, py::arg("groupoid"), py::arg("reconstructed"), py::arg("a"));
  m.def("is_groupoid_aut", [](const MeetGroupoid& M, const Perm& p) {
    auto cert = is_groupoid_aut(M, p);
    return py::make_tuple(cert.ok, cert.clause, cert.witness);
  });

  py::class_<AutPresentation>(m, "AutPresentation")
      .def_readonly("aut", &AutPresentation::aut)
      .def_readonly("inn", &AutPresentation::inn)
      .def_readonly("out_reps", &AutPresentation::out_reps);

  m.def("inn_out", [](const PermGroup& G) { return inn_out(G); });

  py::class_<ThetaResult>(m, "ThetaResult")
      .def_readonly("ghat", &ThetaResult::ghat)
      .def_readonly("kernel", &ThetaResult::kernel)
      .def_readonly("injective", &ThetaResult::injective)
      .def_property_readonly("omega_size", &ThetaResult::omega_size)
      .def("theta_of", [](const ThetaResult& T, int g) { return T.theta[g]; });

  m.def("theta", &theta, py::arg("group"), py::arg("family"));
  m.def("delta", &delta, py::arg("theta_result"), py::arg("phi"));
  m.def("gamma", &cosetmg::gamma, py::arg("theta_result"), py::arg("alpha"));

  py::class_<Check>(m, "Check")
      .def_readonly("name", &Check::name)
      .def_readonly("passed", &Check::passed)
      .def_readonly("witness", &Check::witness)
      .def_readonly("cardinalities", &Check::cardinalities);

  py::class_<Report>(m, "Report")
      .def_readonly("command", &Report::command)
      .def_readonly("checks", &Report::checks)
      .def("passed", &Report::passed)
      .def("to_json", [](const Report& rep) { return report_to_json(rep); });

  m.def("aut_suite", [](const PermGroup& G, const SubgroupFamily& S) {
    Caps caps;
    caps.centralizer_max_omega = 64;
    return aut_suite(G, S, caps);
  });
  m.def("centralizer_kernel_check", [](const PermGroup& G, const SubgroupFamily& S) {
    Caps caps;
    caps.centralizer_max_omega = 64;
    return centralizer_kernel_check(G, S, caps);
  });
  m.def("split_extension_check", [](const PermGroup& G, const SubgroupFamily& S) {
    Caps caps;
    caps.centralizer_max_omega = 64;
    return split_extension_check(G, S, caps);
  });
  m.def("roundtrip_suite",
        [](const PermGroup& G, const SubgroupFamily& S, int samples, std::uint64_t seed) {
          return roundtrip_suite(G, S, samples, seed);
        },
        py::arg("group"), py::arg("family"), py::arg("samples") = 20, py::arg("seed") = 0);

  py::class_<EtaG>(m, "EtaG")
      .def_readonly("gm", &EtaG::gm)
      .def_readonly("homomorphism", &EtaG::homomorphism)
      .def_readonly("injective", &EtaG::injective)
      .def_readonly("surjective", &EtaG::surjective)
      .def_readonly("kernel", &EtaG::kernel)
      .def("isomorphism", &EtaG::isomorphism);

  py::class_<EtaM>(m, "EtaM")
      .def_readonly("gm", &EtaM::gm)
      .def_readonly("map", &EtaM::map)
      .def_readonly("isomorphism", &EtaM::isomorphism)
      .def_readonly("witness", &EtaM::witness);

  m.def("eta_g", &eta_g);
  m.def("eta_m", [](const MeetGroupoid& M) { return eta_m(M); });
  m.def("is_object_of_MM", [](const MeetGroupoid& M) { return is_object_of_MM(M); });

  py::class_<InverseSystem>(m, "InverseSystem")
      .def_readonly("levels", &InverseSystem::levels)
      .def_readonly("maps", &InverseSystem::maps)
      .def_property_readonly("depth", &InverseSystem::depth);

  m.def("tower_2adic", &tower_2adic, py::arg("depth"));
  m.def("tower_dihedral", &tower_dihedral);
  m.def("truncate", &cosetmg::truncate, py::arg("system"), py::arg("depth"));
  m.def("refine_filter", &refine_filter, py::arg("system"), py::arg("depth"), py::arg("element"),
        py::arg("target_depth"));
  m.def("profinite_suite", &profinite_suite, py::arg("system"), py::arg("depth"));

  m.def("filter_to_json", &filter_to_json);
  m.def("group_to_json", &group_to_json, py::arg("group"), py::arg("name") = "");
  m.def("group_from_json", [](const std::string& text) { return group_from_json(text); });
  m.def("groupoid_to_json",
        [](const MeetGroupoid& M) { return groupoid_to_json(M); });
  m.def("groupoid_from_json", &groupoid_from_json);
  m.def("idempotent_order_dot", &idempotent_order_dot);
}
