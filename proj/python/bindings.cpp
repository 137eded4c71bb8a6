// Python surface of the library.  Polynomials and signals cross the
// boundary as {degree: complex}; words as lists of digits.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qmf/qmf.hpp"

namespace py = pybind11;
using namespace qmf;

namespace {

using PolyDict = std::map<Degree, Complex>;

LaurentPoly to_poly(const PolyDict& d) { return LaurentPoly(LaurentPoly::Map(d.begin(), d.end())); }

PolyDict to_dict(const LaurentPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

std::vector<PolyDict> to_dicts(const std::vector<LaurentPoly>& v) {
    std::vector<PolyDict> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(to_dict(f));
    return out;
}

std::vector<LaurentPoly> to_polys(const std::vector<PolyDict>& v) {
    std::vector<LaurentPoly> out;
    out.reserve(v.size());
    for (const auto& d : v) out.push_back(to_poly(d));
    return out;
}

FilterSystem make_system(int N, const std::vector<PolyDict>& filters) {
    FilterSystem fs{N, to_polys(filters)};
    if (fs.filters.size() != static_cast<std::size_t>(N)) {
        throw std::invalid_argument("expected " + std::to_string(N) + " filters");
    }
    return fs;
}

py::dict table_dict(const MeasureTable& t) {
    py::dict d;
    d["N"] = t.N;
    d["level"] = t.level;
    d["engine"] = to_string(t.engine);
    d["values"] = t.values;
    return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"qmfm"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "QMF filter banks, Cuntz isometries and their spectral measures";

    py::class_<FilterSystem>(m, "FilterSystem")
        .def(py::init(&make_system), py::arg("N"), py::arg("filters"))
        .def_readonly("N", &FilterSystem::N)
        .def_property_readonly("filters", [](const FilterSystem& fs) { return to_dicts(fs.filters); })
        .def("to_json", [](const FilterSystem& fs) { return filters_to_json(fs).dump(); })
        .def_static("from_json", [](const std::string& s) { return filters_from_json(Json::parse(s)); })
        .def("__repr__", [](const FilterSystem& fs) {
            return "<FilterSystem N=" + std::to_string(fs.N) + ">";
        });

    m.def("builtin", &builtin, py::arg("name"));
    m.def("daubechies", &daubechies, py::arg("vanishing_moments"));
    m.def("load_filters", &load_filters, py::arg("path"));

    m.def(
        "validate",
        [](const FilterSystem& fs, double tol) {
            const ValidationReport r = validate(fs, tol);
            py::dict d;
            d["passed"] = r.passed;
            d["max_isometry_defect"] = r.max_isometry_defect;
            d["max_completeness_defect"] = r.max_completeness_defect;
            return d;
        },
        py::arg("fs"), py::arg("tol") = kDefaultTolerance);

    m.def(
        "apply_S", [](const FilterSystem& fs, int j, const PolyDict& f) { return to_dict(apply_S(fs, j, to_poly(f))); },
        py::arg("fs"), py::arg("j"), py::arg("f"));
    m.def(
        "apply_S_star",
        [](const FilterSystem& fs, int j, const PolyDict& f) { return to_dict(apply_S_star(fs, j, to_poly(f))); },
        py::arg("fs"), py::arg("j"), py::arg("f"));
    m.def(
        "m_word", [](const FilterSystem& fs, const std::vector<int>& a) { return to_dict(m_word(fs, Word(fs.N, a))); },
        py::arg("fs"), py::arg("word"));

    m.def(
        "mu",
        [](const FilterSystem& fs, const PolyDict& f, const std::vector<int>& a, const std::string& engine) {
            const Word w(fs.N, a);
            switch (parse_engine(engine)) {
                case Engine::Operator: return mu_operator(fs, to_poly(f), w);
                case Engine::Spectral: return mu_spectral(fs, to_poly(f), w);
                default: throw std::invalid_argument("mu supports the operator and spectral engines");
            }
        },
        py::arg("fs"), py::arg("f"), py::arg("word"), py::arg("engine") = "operator");
    m.def(
        "measure_table",
        [](const FilterSystem& fs, const PolyDict& f, int k, const std::string& engine) {
            return table_dict(measure_table(fs, to_poly(f), k, parse_engine(engine)));
        },
        py::arg("fs"), py::arg("f"), py::arg("level"), py::arg("engine") = "operator");
    m.def(
        "packet_measure_table",
        [](const FilterSystem& fs, Degree p, int k) { return table_dict(packet_measure_table(fs, p, k)); },
        py::arg("fs"), py::arg("p"), py::arg("level"));

    m.def(
        "product_check",
        [](const FilterSystem& fs, const PolyDict& f, int k, double tol) {
            const ProductCheck c = product_check(fs, to_poly(f), k, tol);
            py::dict d;
            d["is_product"] = c.is_product;
            d["lambdas"] = c.eigen.lambdas;
            d["probabilities"] = c.probabilities;
            d["max_defect"] = c.max_defect;
            return d;
        },
        py::arg("fs"), py::arg("f"), py::arg("level"), py::arg("tol") = kDefaultTolerance);

    m.def(
        "packet_sweep",
        [](int kmax, int jmax) {
            const PacketSweep s = packet_sweep(kmax, jmax);
            py::dict d;
            d["cases"] = s.cases;
            d["max_identity_defect"] = s.max_identity_defect;
            d["max_measure_defect"] = s.max_measure_defect;
            return d;
        },
        py::arg("kmax"), py::arg("jmax") = 8);

    m.def(
        "analyze", [](const FilterSystem& fs, const PolyDict& xi) { return to_dicts(analyze(fs, to_poly(xi))); },
        py::arg("fs"), py::arg("signal"));
    m.def(
        "synthesize",
        [](const FilterSystem& fs, const std::vector<PolyDict>& bands) {
            return to_dict(synthesize(fs, to_polys(bands)));
        },
        py::arg("fs"), py::arg("bands"));
    m.def(
        "reconstruction_defect",
        [](const FilterSystem& fs, const PolyDict& xi, int depth) {
            return reconstruction_defect(fs, to_poly(xi), depth);
        },
        py::arg("fs"), py::arg("signal"), py::arg("depth"));

    m.def("run_cli", &run_cli, py::arg("args"),
          "Runs the qmfm command line in process; returns (exit_code, stdout, stderr).");
}
