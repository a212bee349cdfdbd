#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "su11/characters.hpp"
#include "su11/errors.hpp"
#include "su11/group.hpp"
#include "su11/half_integer.hpp"
#include "su11/orthogonality.hpp"
#include "su11/rep_matrix.hpp"
#include "su11/special_functions.hpp"
#include "su11/tensor_product.hpp"
#include "su11/verification.hpp"

namespace py = pybind11;
using namespace su11;

namespace {

// Labels arrive as "3/2", "1.5", 1.5 or 2.
RepLabel to_label(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return RepLabel::parse(obj.cast<std::string>());
    if (py::isinstance<py::bool_>(obj)) throw InvalidLabel("label must be a number or string");
    if (py::isinstance<py::int_>(obj)) return RepLabel::from_twice(2 * obj.cast<std::int64_t>());
    if (py::isinstance<py::float_>(obj)) {
        const double v = obj.cast<double>();
        const double twice = 2.0 * v;
        if (!std::isfinite(v) || twice != std::round(twice)) throw InvalidLabel("label is not a half-integer");
        return RepLabel::from_twice(static_cast<std::int64_t>(twice));
    }
    throw InvalidLabel("label must be a number or string");
}

py::dict to_dict(const verify::CheckResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["metric"] = r.metric;
    d["threshold"] = r.threshold;
    d["detail"] = r.detail;
    return d;
}

py::tuple cartan_tuple(const CartanCoords& c) { return py::make_tuple(c.tau, c.phi, c.psi); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Holomorphic discrete series of SU(1,1)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InvalidLabel>(m, "InvalidLabel", base);
    py::register_exception<DeterminantViolation>(m, "DeterminantViolation", base);
    py::register_exception<InvalidParams>(m, "InvalidParams", base);
    py::register_exception<BoundaryConjugacyClass>(m, "BoundaryConjugacyClass", base);
    py::register_exception<UnsupportedClass>(m, "UnsupportedClass", base);
    py::register_exception<SingularAngle>(m, "SingularAngle", base);
    py::register_exception<InvalidDamping>(m, "InvalidDamping", base);

    py::class_<GroupElement>(m, "GroupElement")
        .def_static("from_alpha_beta", &GroupElement::from_alpha_beta, py::arg("alpha"), py::arg("beta"),
                    py::arg("det_tol") = kDefaultDetTol)
        .def_static("identity", &GroupElement::identity)
        .def_static("from_cartan",
                    [](double tau, double phi, double psi) { return from_cartan({tau, phi, psi}); },
                    py::arg("tau"), py::arg("phi"), py::arg("psi"))
        .def_static("compact", &compact_element, py::arg("theta"))
        .def_property_readonly("alpha", &GroupElement::alpha)
        .def_property_readonly("beta", &GroupElement::beta)
        .def("determinant", &GroupElement::determinant)
        .def("to_cartan", [](const GroupElement& g) { return cartan_tuple(to_cartan(g)); })
        .def("disk_point", [](const GroupElement& g) { return disk_point(g).z; })
        .def("inverse", [](const GroupElement& g) { return inverse(g); })
        .def("__mul__", [](const GroupElement& a, const GroupElement& b) { return multiply(a, b); })
        .def("__repr__", [](const GroupElement& g) {
            return "GroupElement(alpha=" + py::repr(py::cast(g.alpha())).cast<std::string>() +
                   ", beta=" + py::repr(py::cast(g.beta())).cast<std::string>() + ")";
        });

    m.def("haar_density", [](double tau, double phi, double psi) { return haar_density({tau, phi, psi}); },
          py::arg("tau"), py::arg("phi") = 0.0, py::arg("psi") = 0.0);
    m.def("normalize_label", [](const py::object& eta) { return to_label(eta).to_string(); }, py::arg("eta"));

    m.def("matrix_element",
          [](const py::object& eta, int n, int np, const GroupElement& g) { return matrix_element(to_label(eta), n, np, g); },
          py::arg("eta"), py::arg("n"), py::arg("n_prime"), py::arg("g"));
    m.def("matrix_element_cartan",
          [](const py::object& eta, int n, int np, double tau, double phi, double psi) {
              return matrix_element_cartan(to_label(eta), n, np, {tau, phi, psi});
          },
          py::arg("eta"), py::arg("n"), py::arg("n_prime"), py::arg("tau"), py::arg("phi"), py::arg("psi"));
    m.def("truncated_operator",
          [](const py::object& eta, const GroupElement& g, std::size_t size) {
              const MatrixBlock b = truncated_operator(to_label(eta), g, size);
              py::array_t<cplx> out({size, size});
              auto view = out.mutable_unchecked<2>();
              for (std::size_t i = 0; i < size; ++i)
                  for (std::size_t j = 0; j < size; ++j) view(i, j) = b(i, j);
              return out;
          },
          py::arg("eta"), py::arg("g"), py::arg("size") = kDefaultBlockSize);
    m.def("unitarity_defect",
          [](const py::object& eta, const GroupElement& g, std::size_t size, std::size_t k) {
              return unitarity_defect(truncated_operator(to_label(eta), g, size), k);
          },
          py::arg("eta"), py::arg("g"), py::arg("size") = kDefaultBlockSize, py::arg("k") = kDefaultCorner);
    m.def("homomorphism_defect",
          [](const py::object& eta, const GroupElement& g1, const GroupElement& g2, std::size_t size, std::size_t k) {
              return homomorphism_defect(to_label(eta), g1, g2, size, k);
          },
          py::arg("eta"), py::arg("g1"), py::arg("g2"), py::arg("size") = kDefaultBlockSize,
          py::arg("k") = kDefaultCorner);

    m.def("character",
          [](const py::object& eta, const GroupElement& g) {
              const auto v = character(to_label(eta), g);
              return py::make_tuple(v.value, std::string(to_string(v.regime)));
          },
          py::arg("eta"), py::arg("g"));
    m.def("character_cartan",
          [](const py::object& eta, double x, double phi, double psi) {
              const auto v = character_cartan(to_label(eta), x, phi, psi);
              return py::make_tuple(v.value, std::string(to_string(v.regime)));
          },
          py::arg("eta"), py::arg("x"), py::arg("phi"), py::arg("psi"));
    m.def("character_compact", [](const py::object& eta, double theta) { return character_compact(to_label(eta), theta); },
          py::arg("eta"), py::arg("theta"));
    m.def("trace_partial_sum",
          [](const py::object& eta, const GroupElement& g, int terms) { return trace_partial_sum(to_label(eta), g, terms); },
          py::arg("eta"), py::arg("g"), py::arg("terms"));
    m.def("abel_trace",
          [](const py::object& eta, double theta, double r, std::optional<int> terms) {
              return abel_trace(to_label(eta), theta, r, terms ? *terms : abel_terms_for(r));
          },
          py::arg("eta"), py::arg("theta"), py::arg("r"), py::arg("terms") = py::none());
    m.def("abel_trace_limit", [](const py::object& eta, double theta) { return abel_trace_limit(to_label(eta), theta); },
          py::arg("eta"), py::arg("theta"));

    m.def("_formal_dimension",
          [](const py::object& eta) {
              const Rational r = formal_dimension(to_label(eta));
              return py::make_tuple(r.num, r.den);
          },
          py::arg("eta"));
    m.def("orthogonality_integral",
          [](const py::object& e1, const py::object& e2, int mm, int mp, int n, int np) {
              const auto r = orthogonality_integral({to_label(e1), to_label(e2), mm, mp, n, np});
              py::dict d;
              d["value"] = r.value;
              d["expected"] = r.expected;
              d["angular_selected"] = r.angular_selected;
              return d;
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("m"), py::arg("m_prime"), py::arg("n"), py::arg("n_prime"));
    m.def("monte_carlo_haar_check",
          [](const py::object& e1, const py::object& e2, int mm, int mp, int n, int np, std::int64_t samples,
             std::uint64_t seed, double tau_max) {
              MonteCarloEstimate r;
              {
                  py::gil_scoped_release release;
                  r = monte_carlo_haar_check({to_label(e1), to_label(e2), mm, mp, n, np}, samples, seed, tau_max);
              }
              py::dict d;
              d["estimate"] = r.estimate;
              d["std_error_re"] = r.std_error_re;
              d["std_error_im"] = r.std_error_im;
              d["samples"] = r.samples;
              return d;
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("m"), py::arg("m_prime"), py::arg("n"), py::arg("n_prime"),
          py::arg("samples") = 1'000'000, py::arg("seed") = 42, py::arg("tau_max") = kDefaultTauMax);

    m.def("decompose",
          [](const py::object& e1, const py::object& e2, int n_max) {
              py::list out;
              for (const auto& t : decompose(to_label(e1), to_label(e2), n_max).terms)
                  out.append(py::make_tuple(t.eta3.to_string(), t.multiplicity));
              return out;
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("n_max") = kDefaultSpectrumTerms);
    m.def("multiplicity",
          [](const py::object& e1, const py::object& e2, const py::object& e3) {
              return multiplicity(to_label(e1), to_label(e2), to_label(e3));
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("eta3"));
    m.def("character_product",
          [](const py::object& e1, const py::object& e2, double theta) {
              return character_product(to_label(e1), to_label(e2), theta);
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("theta"));
    m.def("abel_character_sum",
          [](const py::object& e1, const py::object& e2, double theta, double r, std::optional<int> n_max) {
              return abel_character_sum(to_label(e1), to_label(e2), theta, r, n_max ? *n_max : abel_terms_for(r));
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("theta"), py::arg("r"), py::arg("n_max") = py::none());
    m.def("abel_character_sum_limit",
          [](const py::object& e1, const py::object& e2, double theta) {
              return abel_character_sum_limit(to_label(e1), to_label(e2), theta);
          },
          py::arg("eta1"), py::arg("eta2"), py::arg("theta"));
    m.def("verify_expansion_identity", &verify_expansion_identity, py::arg("theta"));

    m.def("jacobi_p", [](double a, double b, int degree, double x) { return jacobi_p({a, b, degree}, x); },
          py::arg("a"), py::arg("b"), py::arg("degree"), py::arg("x"));
    m.def("gauss_jacobi",
          [](int order, double a, double b) {
              const auto rule = gauss_jacobi(order, a, b);
              return py::make_tuple(py::array_t<double>(rule.nodes.size(), rule.nodes.data()),
                                    py::array_t<double>(rule.weights.size(), rule.weights.data()));
          },
          py::arg("order"), py::arg("a"), py::arg("b"));
    m.def("gr_7391", &gr_7391, py::arg("a"), py::arg("b"), py::arg("m"));

    m.def("suite_names", &verify::suite_names);
    m.def("run_suite",
          [](const std::string& suite, std::int64_t samples, std::uint64_t seed) {
              verify::Options opts;
              opts.samples = samples;
              opts.seed = seed;
              std::vector<verify::CheckResult> results;
              {
                  py::gil_scoped_release release;
                  results = verify::run_suite(suite, opts);
              }
              py::list out;
              for (const auto& r : results) out.append(to_dict(r));
              return out;
          },
          py::arg("suite"), py::arg("samples") = 1'000'000, py::arg("seed") = 42);
}
