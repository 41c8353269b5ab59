#include <cmath>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/examples.hpp"
#include "coxkit/homology.hpp"
#include "coxkit/polytope.hpp"
#include "coxkit/surgery.hpp"
#include "coxkit/weights.hpp"

namespace py = pybind11;
using namespace coxkit;

namespace {

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

Rational to_rational(const py::object& x) {
  return Rational(py::str(py::module_::import("fractions").attr("Fraction")(x)).cast<std::string>());
}

PolytopeModel model(const CoxeterMatrix& m, int dim, bool validate) {
  return build_polytope(mark_cone_vertices(build_nerve(m), dim), dim, validate);
}

}  // namespace

PYBIND11_MODULE(coxkit, mod) {
  mod.doc() = "Coxeter diagrams, nerves and polytope audits";

  py::register_exception<Error>(mod, "Error", PyExc_ValueError);

  py::class_<CoxeterMatrix>(mod, "CoxeterMatrix")
      .def(py::init<std::vector<std::string>>())
      .def_property_readonly("rank", &CoxeterMatrix::rank)
      .def_property_readonly("generators", &CoxeterMatrix::generators)
      .def(
          "label",
          [](const CoxeterMatrix& m, const std::string& a, const std::string& b) -> py::object {
            const auto l = m.label(m.index_of(a), m.index_of(b));
            if (l.is_infinite()) return py::float_(INFINITY);
            return py::int_(l.order());
          },
          py::arg("a"), py::arg("b"))
      .def(
          "set_label",
          [](CoxeterMatrix& m, const std::string& a, const std::string& b, const py::object& l) {
            const bool inf = py::isinstance<py::float_>(l) && std::isinf(l.cast<double>());
            m.set_label(a, b, inf ? EdgeLabel::infinity() : EdgeLabel::finite(l.cast<int>()));
          },
          py::arg("a"), py::arg("b"), py::arg("label"), "label is an int >= 2 or math.inf")
      .def("is_right_angled", &CoxeterMatrix::is_right_angled)
      .def("to_cox", [](const CoxeterMatrix& m) { return to_cox(m); })
      .def("__eq__", [](const CoxeterMatrix& a, const CoxeterMatrix& b) { return a == b; })
      .def("__repr__", [](const CoxeterMatrix& m) { return "<CoxeterMatrix rank " + std::to_string(m.rank()) + ">"; });

  mod.def("parse_diagram", [](const std::string& text) { return parse_diagram(text); });

  mod.def("classify", [](const CoxeterMatrix& m) {
    const auto t = classify(m);
    py::dict d;
    d["kind"] = to_string(t.kind);
    d["families"] = t.families;
    return d;
  });
  mod.def("is_quasi_lanner", [](const CoxeterMatrix& m) { return is_quasi_lanner(m); });
  mod.def("quasi_lanner_table", [] {
    py::list out;
    for (const auto& e : quasi_lanner_table()) out.append(py::make_tuple(e.name, e.diagram));
    return out;
  });

  mod.def(
      "nerve",
      [](const CoxeterMatrix& m, std::size_t cap) {
        const auto n = build_nerve(m, cap);
        return from_json(nerve_to_json(n, maximal_flats(m, cap)));
      },
      py::arg("matrix"), py::arg("cap") = default_cap());
  mod.def(
      "is_ghs",
      [](const CoxeterMatrix& m, int dim) { return is_ghs(build_nerve(m).complex, dim - 1).passed(); },
      py::arg("matrix"), py::arg("dim"), "nerve is a generalized homology (dim-1)-sphere");

  mod.def(
      "f_vector",
      [](const CoxeterMatrix& m, int dim, bool validate) {
        const auto f = f_vector(model(m, dim, validate));
        py::dict d;
        d["a"] = f.a;
        d["c"] = f.c;
        return d;
      },
      py::arg("matrix"), py::arg("dim"), py::arg("validate") = true);
  mod.def(
      "audit",
      [](const CoxeterMatrix& m, int dim, const std::string& which, bool validate) {
        const auto p = model(m, dim, validate);
        if (which == "section4") return from_json(to_json(audit_section4(p)));
        if (which == "prop4") return from_json(to_json(check_proposition4(p)));
        if (which == "weights") return from_json(to_json(p, weight_report(p)));
        if (which == "good_faces") return from_json(to_json(good_face_audit(p)));
        throw PreconditionError("unknown audit '" + which + "'");
      },
      py::arg("matrix"), py::arg("dim"), py::arg("which"), py::arg("validate") = true);

  mod.def("nikulin_bound", [](int n, int i, int k) { return fraction(nikulin_bound(n, i, k)); });
  mod.def("rightangled_dimension_bound", &rightangled_dimension_bound);
  mod.def(
      "general_bound", [](const py::object& c) { return fraction(general_bound(to_rational(c))); },
      py::arg("C") = py::module_::import("fractions").attr("Fraction")(29, 3));
  mod.def("weight", [](std::optional<int> d) { return fraction(weight(d)); });

  mod.def(
      "cut",
      [](const CoxeterMatrix& m, const std::vector<std::string>& flat) {
        const auto r = cut_along_flat(build_nerve(m), m.mask_of(flat));
        return py::make_tuple(r.pieces[0].matrix, r.pieces[1].matrix);
      },
      py::arg("matrix"), py::arg("flat"));
  mod.def(
      "glue",
      [](const CoxeterMatrix& m1, const CoxeterMatrix& m2, const std::map<std::string, std::string>& match) {
        std::vector<std::string> a, b;
        for (const auto& [x, y] : match) {
          a.push_back(x);
          b.push_back(y);
        }
        return glue_along_flat(build_nerve(m1), m1.mask_of(a), build_nerve(m2), m2.mask_of(b), match).matrix;
      },
      py::arg("m1"), py::arg("m2"), py::arg("match"));

  auto ex = mod.def_submodule("examples", "Example diagrams");
  ex.def("rac_cube", &build_rac_cube, py::arg("pairs"));
  ex.def("pv", &build_pv_example, py::arg("pairs") = 8);
  ex.def("ideal_octahedron", &build_ideal_octahedron);
  ex.def("truncated_ideal_octahedron", &build_truncated_ideal_octahedron);
}
