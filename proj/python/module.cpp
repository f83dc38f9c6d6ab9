#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfh/groebner.hpp"
#include "pfh/identities.hpp"
#include "pfh/json_io.hpp"
#include "pfh/pfaffian.hpp"
#include "pfh/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const pfh::Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<pfh::Int>& v) {
    py::list out;
    for (const auto& c : v) out.append(to_py(c));
    return out;
}

py::list to_py(const pfh::IntPolynomial& p) { return to_py(p.coeffs()); }

py::object json_to_py(const pfh::Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_pfh, m) {
    m.doc() = "Hilbert series and Pfaffian ideals of almost alternating matrices";

    m.def("gbinom", [](long a, long b) { return to_py(pfh::gbinom(a, b)); },
          py::arg("a"), py::arg("b"),
          "Generalized binomial coefficient over all integer arguments.");

    m.def("h_vector", [](long n, long t) { return to_py(pfh::h_vector({n, t})); },
          py::arg("n"), py::arg("t"));
    m.def("hn", [](long n, long t) { return to_py(pfh::hn_polynomial({n, t})); },
          py::arg("n"), py::arg("t"), "Coefficients of the Hilbert numerator hn(z).");
    m.def("hn_numerator", [](long n, long t) { return to_py(pfh::hn_numerator_from_formula({n, t})); },
          py::arg("n"), py::arg("t"), "Coefficients of HN(z), the resolution-derived numerator.");
    m.def("multiplicity", [](long n, long t) { return to_py(pfh::hn_multiplicity({n, t})); },
          py::arg("n"), py::arg("t"));
    m.def("multiplicity_by_monomial_count",
          [](long n, long t) { return to_py(pfh::multiplicity_by_monomial_count({n, t})); },
          py::arg("n"), py::arg("t"));
    m.def("betti_table", [](long n, long t) {
              py::list rows;
              for (const auto& row : pfh::betti_table({n, t}).rows) {
                  py::list summands;
                  for (const auto& s : row) {
                      py::dict d;
                      d["xdeg"] = s.x_twist;
                      d["ydeg"] = s.y_twist;
                      d["mult"] = to_py(s.multiplicity);
                      summands.append(d);
                  }
                  rows.append(summands);
              }
              return rows;
          },
          py::arg("n"), py::arg("t"),
          "Per homological degree, the list of (xdeg, ydeg, mult) summands.");
    m.def("hilbert_report", [](long n, long t, std::optional<long> d) {
              return json_to_py(pfh::series_report_json({n, t}, d));
          },
          py::arg("n"), py::arg("t"), py::arg("d") = std::nullopt);

    m.def("q_value", [](long w, long t, long I, long alpha) {
              return to_py(pfh::q_value({w, t, I, alpha}));
          },
          py::arg("w"), py::arg("t"), py::arg("I"), py::arg("alpha"));
    m.def("prop_hypotheses_hold", [](long w, long t, long I, long alpha) {
              return pfh::prop_hypotheses_hold({w, t, I, alpha});
          },
          py::arg("w"), py::arg("t"), py::arg("I"), py::arg("alpha"));
    m.def("recurrence_residual", [](long w, long t, long I, long alpha) {
              return to_py(pfh::recurrence_residual(w, t, I, alpha));
          });
    m.def("alternating_partial_sum",
          [](long a, long b) { return to_py(pfh::alternating_partial_sum(a, b)); });
    m.def("ku92_residual",
          [](long a, long b, long c) { return to_py(pfh::ku92_residual(a, b, c)); });
    m.def("convolution_residual",
          [](long n, long t, long I) { return to_py(pfh::convolution_residual(n, t, I)); });
    m.def("unit_series_residual",
          [](long n, long t, long I) { return to_py(pfh::unit_series_residual(n, t, I)); });

    m.def("generators", [](long n, long t, int dim, std::uint64_t seed) {
              auto rho = pfh::random_generic_instance({n, t}, dim, seed);
              return json_to_py(pfh::generators_json(rho, pfh::ideal_generators(rho)));
          },
          py::arg("n"), py::arg("t"), py::arg("dim") = 4, py::arg("seed") = 20240801,
          "Generators of J(rho) for a seeded random generic instance.");
    m.def("oracle", [](long n, long t, int dim, std::uint64_t seed, int max_redraws) {
              return json_to_py(pfh::oracle_report_json(
                  pfh::oracle_check({n, t}, dim, seed, max_redraws)));
          },
          py::arg("n"), py::arg("t"), py::arg("dim"), py::arg("seed") = 1,
          py::arg("max_redraws") = 5,
          "Groebner-basis check of the closed-form Hilbert series.");

    py::register_exception<pfh::InvalidShapeError>(m, "InvalidShapeError", PyExc_ValueError);
    py::register_exception<pfh::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<pfh::GenericityError>(m, "GenericityError", PyExc_RuntimeError);
}
