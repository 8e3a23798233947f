#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sanlib/algebra.hpp"
#include "sanlib/classify.hpp"
#include "sanlib/construct.hpp"
#include "sanlib/io.hpp"
#include "sanlib/series.hpp"
#include "sanlib/sweep.hpp"

namespace py = pybind11;
using namespace sanlib;

namespace {

// Reports are built once as JSON and handed to Python as plain objects.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FiniteGroup from_table(const std::string& name, const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw PreconditionError("table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  if (auto v = validate_table(rows.size(), flat)) throw PreconditionError(v->describe());
  return FiniteGroup(name, rows.size(), std::move(flat));
}

Subgroup subgroup_of(const FiniteGroup& g, std::vector<Element> elements) {
  return make_subgroup(g, std::move(elements));
}

}  // namespace

PYBIND11_MODULE(_sanlib, m) {
  m.doc() = "Finite group predicates around subnormal abelian subgroups, and Lie/Leibniz checks";

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", [](const FiniteGroup& g) {
        std::vector<std::vector<Element>> rows(g.order());
        for (Element i = 0; i < g.order(); ++i)
          for (Element j = 0; j < g.order(); ++j) rows[i].push_back(g.mul(i, j));
        return rows;
      })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("order", &Subgroup::order)
      .def_property_readonly("elements", &Subgroup::elements)
      .def("contains", &Subgroup::contains)
      .def("is_abelian", &Subgroup::is_abelian)
      .def("__eq__", [](const Subgroup& a, const Subgroup& b) { return a == b; })
      .def("__repr__", [](const Subgroup& s) {
        return "<Subgroup of order " + std::to_string(s.order()) + " in " + s.parent().name() + ">";
      });

  // Construction.
  m.def("cyclic", &cyclic);
  m.def("elementary_abelian", &elementary_abelian);
  m.def("abelian", [](std::vector<std::size_t> orders) { return abelian(AbelianSpec{std::move(orders)}); });
  m.def("dihedral", &dihedral, py::arg("order"));
  m.def("generalized_quaternion", &generalized_quaternion, py::arg("order"));
  m.def("symmetric", &symmetric);
  m.def("alternating", &alternating);
  m.def("sl23", &sl23);
  m.def("metacyclic", &metacyclic, py::arg("q_power"), py::arg("m"), py::arg("r"));
  m.def("san_family",
        [](std::vector<std::size_t> q_spec, std::size_t p, std::size_t action_order, std::size_t cyclic_order) {
          return san_family(AbelianSpec{std::move(q_spec)}, p, action_order, cyclic_order);
        },
        py::arg("q_spec"), py::arg("p"), py::arg("action_order"), py::arg("cyclic_order") = 0);
  m.def("direct_product", [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); });
  m.def("catalog", [](std::size_t max_order) { return catalog(max_order); }, py::arg("max_order"));
  m.def("from_table", &from_table, py::arg("name"), py::arg("table"));
  m.def("group_from_json", [](const std::string& text) {
    return group_from_json(parse_json_text(text, "<string>")).group;
  });
  m.def("group_to_json", [](const FiniteGroup& g) { return group_to_json(g).dump(); });

  // Subgroups and series.
  m.def("subgroup", &subgroup_of, py::arg("group"), py::arg("elements"));
  m.def("closure", [](const FiniteGroup& g, std::vector<Element> seed) { return closure(g, seed); });
  m.def("all_subgroups", [](const FiniteGroup& g) { return all_subgroups(g); });
  m.def("is_normal", [](const Subgroup& h) { return is_normal(h); });
  m.def("subnormal_defect", [](const Subgroup& h) { return subnormal_defect(h); });
  m.def("sylow_subgroup", [](const FiniteGroup& g, std::size_t p) { return sylow_subgroup(g, p); });
  m.def("baer_radical", &baer_radical);
  m.def("fitting_subgroup", &fitting_subgroup);
  m.def("nilpotent_residual", &nilpotent_residual);
  m.def("hypercenter", &hypercenter);
  m.def("is_nilpotent", [](const FiniteGroup& g) { return is_nilpotent(g).nilpotent; });
  m.def("is_solvable", [](const FiniteGroup& g) { return is_solvable(g).solvable; });
  m.def("is_isomorphic", [](const FiniteGroup& a, const FiniteGroup& b) { return is_isomorphic(a, b); });

  // Predicates and reports.
  m.def("is_san",
        [](const FiniteGroup& g, const std::string& mode) {
          if (mode != "brute" && mode != "fast") throw PreconditionError("mode must be brute or fast");
          const auto r = is_san(g, mode == "brute" ? SanMode::brute : SanMode::fast);
          return std::make_pair(r.holds, r.witness);
        },
        py::arg("group"), py::arg("mode") = "brute",
        "Returns (holds, witness) where witness is a Subgroup or None.");
  m.def("is_t_group", [](const FiniteGroup& g) {
    const auto r = is_t_group(g);
    return std::make_pair(r.holds, r.witness);
  });
  m.def("is_dedekind", [](const FiniteGroup& g) { return is_dedekind(g); });
  m.def("dedekind_kind", [](const FiniteGroup& g) {
    switch (dedekind_structure(g).kind) {
      case DedekindStructure::Kind::abelian: return "abelian";
      case DedekindStructure::Kind::hamiltonian: return "hamiltonian";
      default: return "not-dedekind";
    }
  });
  m.def("is_supersolvable", &is_supersolvable);
  m.def("power_automorphism_group", [](const FiniteGroup& g) { return power_automorphisms(g).group; });
  m.def("classify", [](const FiniteGroup& g) { return to_python(classification_to_json(classify(g))); });
  m.def("theorem_a_report",
        [](const FiniteGroup& g) { return to_python(condition_report_to_json(theorem_a_report(g))); });
  m.def("corollary_a2_report",
        [](const FiniteGroup& g) { return to_python(condition_report_to_json(corollary_a2_report(g))); });
  m.def("corollary_a3_report",
        [](const FiniteGroup& g) { return to_python(condition_report_to_json(corollary_a3_report(g))); });
  m.def("sweep",
        [](const std::vector<FiniteGroup>& groups, const std::string& check, std::size_t jobs) {
          const auto c = parse_sweep_check(check);
          if (!c) throw PreconditionError("unknown check " + check);
          std::vector<SweepOutcome> out;
          {
            py::gil_scoped_release release;
            out = sweep(groups, *c, jobs);
          }
          py::list res;
          for (const auto& o : out) {
            py::dict d;
            d["group"] = o.group;
            d["order"] = o.order;
            d["ok"] = o.ok;
            d["violations"] = o.violations;
            d["notes"] = o.notes;
            res.append(d);
          }
          return res;
        },
        py::arg("groups"), py::arg("check"), py::arg("jobs") = 1);

  // Algebras: exact rationals cross the boundary as "p/q" strings.
  py::class_<StructureAlgebra>(m, "StructureAlgebra")
      .def_property_readonly("name", &StructureAlgebra::name)
      .def_property_readonly("dimension", &StructureAlgebra::dimension)
      .def_property_readonly("labels", &StructureAlgebra::labels);
  m.def("algebra_from_json", [](const std::string& text) {
    return algebra_from_json(parse_json_text(text, "<string>"));
  });
  m.def("example_2_3_build", [](std::size_t n) { return example_2_3_build(n); });
  m.def("heisenberg", &heisenberg);
  m.def("sl2", &sl2);
  m.def("scalar_extension_model", [](std::size_t m, const std::string& factor) {
    return scalar_extension_model(m, parse_scalar(factor));
  });
  m.def("check_identities", [](const StructureAlgebra& a) -> py::object {
    const auto v = check_identities(a);
    if (!v) return py::none();
    return py::str(v->describe());
  });
  m.def("bracket", [](const StructureAlgebra& a, const std::vector<std::string>& x,
                      const std::vector<std::string>& y) {
    Vector xv, yv;
    for (const auto& s : x) xv.push_back(parse_scalar(s));
    for (const auto& s : y) yv.push_back(parse_scalar(s));
    std::vector<std::string> out;
    for (const auto& c : bracket(a, xv, yv)) out.push_back(format_scalar(c));
    return out;
  });
  m.def("nilpotency_class", [](const StructureAlgebra& a) { return nilpotency_class(a); });
  m.def("unique_abelian_certificate", [](const StructureAlgebra& a) { return unique_abelian_certificate(a).ok(); });
  m.def("theorem_b_decompose", [](const StructureAlgebra& a) {
    const auto dec = theorem_b_decompose(a);
    py::dict d;
    using Kind = TheoremBDecomposition::Kind;
    d["outcome"] = dec.kind == Kind::abelian ? "abelian" : dec.kind == Kind::decomposed ? "decomposed" : "none";
    if (dec.ideal) {
      py::list rows;
      for (const auto& v : dec.ideal->basis()) rows.append(to_python(vector_to_json(v)));
      d["A"] = rows;
      d["d"] = to_python(vector_to_json(dec.d));
      d["beta"] = format_scalar(dec.beta);
      d["round_trip"] = theorem_b_round_trip(a, dec);
    }
    if (!dec.reason.empty()) d["reason"] = dec.reason;
    return d;
  });
}
