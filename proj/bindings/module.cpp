#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kickbasis/hilbert.hpp"
#include "kickbasis/kicking.hpp"
#include "kickbasis/oracle.hpp"
#include "kickbasis/orbit.hpp"
#include "kickbasis/verify.hpp"

namespace py = pybind11;
using namespace kickbasis;

namespace {

Family family_from(const std::string& name, const Shape& shape) {
    if (name == "twocol") return Family::TwoColumn;
    if (name == "hook") return Family::Hook;
    if (name == "auto") return shape.default_family();
    throw std::invalid_argument("unknown family: " + name);
}

// Rationals cross the boundary as "p/q" strings; exactness survives the trip.
std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(rational_str(r));
    return out;
}

Params params_from(const Shape& shape,
                   const std::vector<std::string>& alpha,
                   const std::vector<std::string>& beta,
                   std::optional<unsigned> seed) {
    Params p = seed ? Params::random(shape, *seed) : Params::defaults(shape);
    if (!alpha.empty()) {
        p.alpha.clear();
        for (const auto& s : alpha) p.alpha.push_back(parse_rational(s));
    }
    if (!beta.empty()) {
        p.beta.clear();
        for (const auto& s : beta) p.beta.push_back(parse_rational(s));
    }
    p.validate(shape);
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "kicking basis core: fillings, basis polynomials, evaluation "
              "certificates, and degree polynomials";

    py::register_exception<CapExceeded>(m, "CapExceeded");

    py::class_<Shape>(m, "Shape")
        .def_static("parse", &Shape::parse, py::arg("spec"))
        .def("__str__", &Shape::str)
        .def("__repr__",
             [](const Shape& s) { return "Shape('" + s.str() + "')"; })
        .def_property_readonly("n", &Shape::n)
        .def("is_two_column", &Shape::is_two_column)
        .def("is_hook", &Shape::is_hook)
        .def("n_mu", &Shape::n_mu)
        .def("n_mu_conj", &Shape::n_mu_conj);

    py::class_<QTPoly>(m, "QTPoly")
        .def("__str__", &QTPoly::str)
        .def("__repr__",
             [](const QTPoly& f) { return "QTPoly('" + f.str() + "')"; })
        .def("__eq__", [](const QTPoly& a, const QTPoly& b) { return a == b; })
        .def("json", &QTPoly::json)
        .def("coeff", &QTPoly::coeff, py::arg("tdeg"), py::arg("qdeg"))
        .def("max_degrees", &QTPoly::max_degrees)
        .def("eval_one_one", &QTPoly::eval_one_one);

    m.def(
        "fillings",
        [](const std::string& spec, const std::string& family, int cap) {
            const Shape shape = Shape::parse(spec);
            std::vector<std::string> out;
            for (const auto& f :
                 enumerate_fillings(shape, family_from(family, shape), cap)) {
                out.push_back(f.str());
            }
            return out;
        },
        py::arg("shape"), py::arg("family") = "auto", py::arg("cap") = 9,
        "standard fillings in kicking order, serialized bottom rows first");

    m.def(
        "basis",
        [](const std::string& spec, const std::string& family, int cap) {
            const Shape shape = Shape::parse(spec);
            const Family fam = family_from(family, shape);
            std::vector<std::tuple<std::string, std::string, int, int>> out;
            for (const auto& f : enumerate_fillings(shape, fam, cap)) {
                const auto p = phi(f, fam);
                const auto [dx, dy] = p.bidegree();
                out.emplace_back(f.str(), p.str(), dx, dy);
            }
            return out;
        },
        py::arg("shape"), py::arg("family") = "auto", py::arg("cap") = 9,
        "(filling, basis polynomial, x-degree, y-degree) rows");

    m.def(
        "phi",
        [](const std::string& filling, const std::string& family) {
            const Filling f = Filling::parse(filling);
            return phi(f, family_from(family, f.shape())).str();
        },
        py::arg("filling"), py::arg("family") = "auto",
        "basis polynomial of one filling, e.g. phi('2,1/3')");

    m.def(
        "certify",
        [](const std::string& spec, const std::string& family,
           const std::vector<std::string>& alpha,
           const std::vector<std::string>& beta,
           std::optional<unsigned> seed, std::int64_t matrix_cap) {
            const Shape shape = Shape::parse(spec);
            const Family fam = family_from(family, shape);
            const Params params = params_from(shape, alpha, beta, seed);
            const auto report = certify_nonsingular(shape, fam, params,
                                                    matrix_cap);
            py::dict out;
            out["shape"] = shape.str();
            out["nonsingular"] = report.nonsingular;
            out["kernel"] = rational_strings(report.kernel);
            return out;
        },
        py::arg("shape"), py::arg("family") = "auto",
        py::arg("alpha") = std::vector<std::string>{},
        py::arg("beta") = std::vector<std::string>{},
        py::arg("seed") = std::nullopt, py::arg("matrix_cap") = 720,
        "certificate that the evaluation matrix is nonsingular");

    m.def(
        "hilbert",
        [](const std::string& spec, const std::string& family, int cap) {
            const Shape shape = Shape::parse(spec);
            return degree_polynomial(shape, family_from(family, shape), cap);
        },
        py::arg("shape"), py::arg("family") = "auto", py::arg("cap") = 9,
        "degree polynomial of the basis, a polynomial in q and t");

    m.def(
        "symmetric",
        [](const std::string& spec, const std::string& family, int cap) {
            const Shape shape = Shape::parse(spec);
            const QTPoly f =
                degree_polynomial(shape, family_from(family, shape), cap);
            const auto [N, M] = top_degrees(shape);
            return symmetry_report(f, N, M).pass;
        },
        py::arg("shape"), py::arg("family") = "auto", py::arg("cap") = 9);

    m.def("j_enumerated", &j_enumerated, py::arg("a"), py::arg("b"),
          py::arg("m"), py::arg("cap") = 9);
    m.def("j_recurrence_first", &j_recurrence_first, py::arg("a"),
          py::arg("b"), py::arg("m"));
    m.def("j_recurrence_second", &j_recurrence_second, py::arg("a"),
          py::arg("b"), py::arg("m"));
    m.def(
        "j_reduced",
        [](int a, int b, int m) {
            return j_reduced(j_recurrence_first(a, b, m), a, b, m);
        },
        py::arg("a"), py::arg("b"), py::arg("m"));

    m.def(
        "harmonic_hilbert",
        [](const std::string& spec, int cap) {
            return harmonic_hilbert(Shape::parse(spec), cap);
        },
        py::arg("shape"), py::arg("cap") = 5,
        "Hilbert series of the derivative closure of the shape determinant");

    m.def(
        "verify_all",
        [](int nmax) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& r : run_verification_suite(nmax)) {
                out.emplace_back(r.name, r.pass, r.detail);
            }
            return out;
        },
        py::arg("nmax") = 0, "(name, pass, detail) rows of the full suite");
}
