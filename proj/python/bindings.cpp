#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demflag/characters.hpp"
#include "demflag/closed_forms.hpp"
#include "demflag/errors.hpp"
#include "demflag/flag_engine.hpp"
#include "demflag/gen_series.hpp"
#include "demflag/verify.hpp"

namespace py = pybind11;
using namespace demflag;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (auto& c : v) out.append(to_py(c));
  return out;
}

py::list terms(const QPoly& p) {
  py::list out;
  for (auto& [e, c] : p.terms()) out.append(py::make_tuple(e, to_py(c)));
  return out;
}

py::list series(const XSeriesQ& s) {
  py::list out;
  for (auto& c : s.coeffs()) out.append(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded Demazure flag multiplicities";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidLevel>(m, "InvalidLevel", PyExc_ValueError);
  py::register_exception<InvalidShape>(m, "InvalidShape", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<QPoly>(m, "QPoly")
      .def(py::init<long>(), py::arg("c") = 0)
      .def_static("parse", &QPoly::parse)
      .def_static("q_power", &QPoly::q_power)
      .def("terms", &terms, "(exponent, coefficient) pairs in increasing exponent order")
      .def("eval_one", [](const QPoly& p) { return to_py(p.eval_one()); })
      .def("is_zero", &QPoly::is_zero)
      .def("weight_split", &QPoly::weight_split)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &QPoly::to_string)
      .def("__repr__", [](const QPoly& p) { return "QPoly('" + p.to_string() + "')"; });

  m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("m"));
  m.def("mult", [](int a, int s, int b, int n) { return FlagEngine::shared().mult(a, s, b, n); },
        py::arg("m_from"), py::arg("s"), py::arg("m_to"), py::arg("n"), "[D(m_from, s) : D(m_to, n)]_q");
  m.def("mult_step", [](int mm, int s, int n) { return FlagEngine::shared().mult_step(mm, s, n); }, py::arg("m"),
        py::arg("s"), py::arg("n"));
  m.def("mult_parts", [](std::vector<int> parts, int mm, int n) { return FlagEngine::shared().mult_parts(parts, mm, n); },
        py::arg("parts"), py::arg("m"), py::arg("n"), "[V(parts) : D(m, n)]_q by the partition recursion");
  m.def("weighted_mult", [](int a, int s, int b, int n) { return FlagEngine::shared().weighted_mult(a, s, b, n); },
        py::arg("m_from"), py::arg("s"), py::arg("m_to"), py::arg("n"));

  m.def("series_A",
        [](int a, int b, int n, int x_order, bool weighted, std::optional<int> parity) {
          return series(series_A(SeriesSpec{a, b, n, weighted, parity, x_order}));
        },
        py::arg("m_from"), py::arg("m_to"), py::arg("n"), py::arg("x_order") = 10, py::arg("weighted") = false,
        py::arg("parity") = py::none());
  m.def("series_A_q1", [](int a, int b, int n, int x_order) { return to_py(series_A_q1(a, b, n, x_order)); },
        py::arg("m_from"), py::arg("m_to"), py::arg("n"), py::arg("x_order") = 10);

  m.def("cf_1to2", &cf_1to2, py::arg("s"), py::arg("p"));
  m.def("cf_2to3", &cf_2to3, py::arg("n"), py::arg("p"));
  m.def("mock_theta", &mock_theta, py::arg("which"), py::arg("q_order"));
  m.def("closed_A_1m",
        [](int mm, int n) {
          RatFunX r = closed_A_1m(mm, n);
          return py::make_tuple(to_py(r.num().coeffs()), to_py(r.den().coeffs()));
        },
        py::arg("m"), py::arg("n"), "(numerator, denominator) coefficient lists");
  m.def("closed_A_m_m1",
        [](int mm, int n) {
          RatFunX r = closed_A_m_m1(mm, n);
          return py::make_tuple(to_py(r.num().coeffs()), to_py(r.den().coeffs()));
        },
        py::arg("m"), py::arg("n"));
  m.def("d_poly", [](int mm, int n) { return to_py(d_poly(mm, n).coeffs()); }, py::arg("m"), py::arg("n"));

  m.def("dim_demazure", [](int mm, int n) { return to_py(dim_demazure(mm, n)); }, py::arg("m"), py::arg("n"));
  m.def("graded_character",
        [](int mm, int n, std::optional<int> via) {
          GradedCharacter c = via ? graded_character(mm, n, *via) : graded_character(mm, n);
          py::dict out;
          for (auto& [k, v] : c.entries()) out[py::make_tuple(k.first, k.second)] = to_py(v);
          return out;
        },
        py::arg("m"), py::arg("n"), py::arg("via_level") = py::none(), "{(j, grade): multiplicity}");
  m.def("char_product_D11",
        [](int mm, int p) {
          py::list out;
          for (auto& t : char_product_D11(mm, p)) out.append(py::make_tuple(t.n, t.coeff));
          return out;
        },
        py::arg("m"), py::arg("p"));

  m.def("verify",
        [](const std::string& suite, std::optional<int> max) {
          Bounds b = max ? Bounds::scaled(*max) : Bounds::acceptance();
          std::vector<NamedCheck> checks;
          try {
            checks = suite_checks(suite);
          } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
          }
          py::list out;
          for (auto& c : checks) {
            CheckResult r;
            {
              py::gil_scoped_release release;
              r = run_check(c, b);
            }
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["cases"] = r.cases;
            d["counterexample"] = r.counterexample;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("max") = py::none());
}
