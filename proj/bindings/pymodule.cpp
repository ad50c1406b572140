#include "orthoserie/mrs.hpp"
#include "orthoserie/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orthoserie;

namespace {

py::dict rhs_dict(const RhsBreakdown& r) {
    py::dict d;
    d["term1"] = r.term1;
    d["term2"] = r.term2;
    d["term3"] = r.term3;
    d["term4"] = r.term4;
    d["envelope"] = r.envelope;
    d["total"] = r.total;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "orthogonal polynomial expansions for exponential weights";

    py::class_<WeightSpec>(m, "Weight")
        .def(py::init([](const std::string& descriptor) { return parse_weight(descriptor); }),
             py::arg("descriptor"))
        .def("q", [](const WeightSpec& s, double x) { return s.Q(x); })
        .def("qp", [](const WeightSpec& s, double x) { return s.Qp(x); })
        .def("t", [](const WeightSpec& s, double x) { return s.T(x); })
        .def("w", [](const WeightSpec& s, double x) { return s.w(x); })
        .def("mrs", [](const WeightSpec& s, double t) { return mrs_number(s, t).a_t; },
             py::arg("t"))
        .def_property_readonly("descriptor", &WeightSpec::descriptor)
        .def_property_readonly("freud_type", &WeightSpec::freud_type)
        .def("__repr__",
             [](const WeightSpec& s) { return "<Weight " + s.descriptor() + ">"; });

    py::class_<RecurrenceTable>(m, "RecurrenceTable")
        .def_property_readonly("N", &RecurrenceTable::N)
        .def_property_readonly("mu0", &RecurrenceTable::mu0)
        .def_property_readonly("A", [](const RecurrenceTable& t) { return t.A_all(); })
        .def_property_readonly("B", [](const RecurrenceTable& t) { return t.B_all(); })
        .def("to_json", &table_to_json);

    py::class_<GaussRule>(m, "GaussRule")
        .def_property_readonly("n", [](const GaussRule& r) { return r.n; })
        .def_property_readonly("nodes", [](const GaussRule& r) { return r.nodes; })
        .def_property_readonly("weights", [](const GaussRule& r) { return r.weights; });

    py::class_<BVFunction>(m, "BVFunction")
        .def(py::init([](const std::string& descriptor) { return parse_bv(descriptor); }),
             py::arg("descriptor"))
        .def("__call__", [](const BVFunction& f, double x) { return f(x); })
        .def_property_readonly("breakpoints",
                               [](const BVFunction& f) { return f.breakpoints(); })
        .def_property_readonly("descriptor", &BVFunction::descriptor);

    m.def("build_table",
          [](const WeightSpec& spec, int N) { return recurrence_table(spec, N); },
          py::arg("weight"), py::arg("N"));
    m.def("gauss",
          [](const RecurrenceTable& t, int n) {
              const GaussRule r = gauss_rule(t, n);
              return py::make_tuple(r.nodes, r.weights);
          },
          py::arg("table"), py::arg("n"));
    m.def("eval_weighted",
          [](const RecurrenceTable& t, const WeightSpec& s, int n, double x) {
              return eval_weighted(t, s, n, x);
          });
    m.def("christoffel",
          [](const RecurrenceTable& t, const WeightSpec& s, int n, double x) {
              return christoffel(t, s, n, x);
          });
    m.def("kernel",
          [](const RecurrenceTable& t, const WeightSpec& s, int n, double x, double tt) {
              return kernel(t, s, n, x, tt);
          });
    m.def("coefficients",
          [](const RecurrenceTable& t, const WeightSpec& s, const BVFunction& f, int N) {
              const GaussRule rule = gauss_rule(t, t.N());
              return coefficients(t, s, &rule, f, N).c;
          });
    m.def("partial_sum",
          [](const RecurrenceTable& t, const WeightSpec& s, const BVFunction& f, int n,
             double x) {
              const GaussRule rule = gauss_rule(t, t.N());
              const ExpansionCoeffs c = coefficients(t, s, &rule, f, std::max(n, 1));
              return partial_sum(c, t, s, n, x);
          });
    m.def("v_delta",
          [](const WeightSpec& s, const BVFunction& f, double lo, double hi, double delta) {
              return v_delta(s, f, lo, hi, delta);
          });
    m.def("tail_integral",
          [](const RecurrenceTable& t, const WeightSpec& s, int n, double tt) {
              return tail_integral(t, s, n, tt);
          });
    m.def("theorem_rhs",
          [](const WeightSpec& s, const BVFunction& f, double x, int n, double delta,
             double d, double c, bool split_form) {
              TheoremConstants k;
              k.delta = delta;
              k.d = d;
              k.c = c;
              k.split_form = split_form;
              const RhsMode mode =
                  s.freud_type() ? RhsMode::mhaskar_freud : RhsMode::erdos_js;
              return rhs_dict(theorem_rhs(s, f, x, n, k, mode));
          },
          py::arg("weight"), py::arg("f"), py::arg("x"), py::arg("n"),
          py::arg("delta") = 0.5, py::arg("d") = 0.5, py::arg("c") = 1.0,
          py::arg("split_form") = false);
}
