#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geolab/runner.hpp"

namespace py = pybind11;
using namespace geolab;

namespace {

Report run_scene(const Scene& s, unsigned long seed, int samples, bool timings) {
    return run_checks(s, seed, samples, timings);
}

std::string check_name(const CheckStmt& c) {
    std::string out = c.check + "(";
    for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i) out += ", ";
        out += c.args[i];
    }
    return out + ")";
}

} // namespace

PYBIND11_MODULE(_geolab, m) {
    m.doc() = "exact chart-local checks for contact, Jacobi and cosymplectic "
              "structures on (TM x R) + (T*M x R)";

    m.attr("__version__") = kGeolabVersion;
    m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
    m.attr("DEFAULT_SAMPLES") = py::int_(kDefaultSamples);

    // Engine errors surface as ValueError-ish exceptions; parse errors keep
    // their 1-based line:column prefix in the message.
    py::register_exception<Error>(m, "EngineError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "SceneError", PyExc_ValueError);

    py::class_<Scene>(m, "Scene")
        .def_static("parse", &parse_scene, py::arg("text"),
                    "Parse and evaluate scene source; raises SceneError on bad input.")
        .def("__str__", &print_scene)
        .def_property_readonly("chart",
            [](const Scene& s) {
                std::vector<std::string> out;
                if (s.chart)
                    for (int i = 0; i < s.chart->dim(); ++i)
                        out.push_back(s.chart->coord(i));
                return out;
            },
            "Coordinate names, empty when the scene declares no chart.")
        .def_property_readonly("bindings",
            [](const Scene& s) {
                py::dict out;
                for (const auto& [name, b] : s.bindings)
                    out[py::str(name)] = b.poisoned()
                        ? std::string("poisoned")
                        : std::string(binding_kind_name(b.kind));
                return out;
            },
            "Mapping of binding name to its kind.")
        .def_property_readonly("checks", [](const Scene& s) {
            std::vector<std::string> out;
            for (const CheckStmt* c : s.checks())
                out.push_back(check_name(*c));
            return out;
        });

    py::class_<CheckRecord>(m, "CheckRecord")
        .def_readonly("name", &CheckRecord::name)
        .def_property_readonly("verdict",
            [](const CheckRecord& r) { return std::string(verdict_str(r.verdict)); })
        .def_readonly("witness", &CheckRecord::witness)
        .def_readonly("certificate", &CheckRecord::certificate)
        .def_readonly("ms", &CheckRecord::ms)
        .def("__repr__", [](const CheckRecord& r) {
            return "<CheckRecord " + r.name + ": " + verdict_str(r.verdict) + ">";
        });

    py::class_<Report>(m, "Report")
        .def_readonly("seed", &Report::seed)
        .def_readonly("samples", &Report::samples)
        .def_readonly("version", &Report::version)
        .def_readonly("records", &Report::records)
        .def("json", [](const Report& r) { return emit_report(r, true); },
             "Render the report as JSON with a stable key order.")
        .def("text", [](const Report& r) { return emit_report(r, false); })
        .def("exit_code", &report_exit_code, py::arg("strict") = false,
             "0 all pass, 1 any fail, 2 any error; strict demotes generic-pass.")
        .def("__repr__", [](const Report& r) {
            return "<Report of " + std::to_string(r.records.size())
                 + " checks, seed " + std::to_string(r.seed) + ">";
        });

    m.def("parse", &parse_scene, py::arg("text"));
    m.def("format", [](const std::string& text) { return print_scene(parse_scene(text)); },
          py::arg("text"), "Canonical formatting of scene source.");
    m.def("run", &run_scene, py::arg("scene"),
          py::arg("seed") = kDefaultSeed, py::arg("samples") = kDefaultSamples,
          py::arg("timings") = false,
          "Run every check of the scene in declaration order.");
    m.def("check",
          [](const std::string& text, unsigned long seed, int samples, bool timings) {
              return run_scene(parse_scene(text), seed, samples, timings);
          },
          py::arg("text"), py::arg("seed") = kDefaultSeed,
          py::arg("samples") = kDefaultSamples, py::arg("timings") = false,
          "Parse scene source and run its checks in one step.");
    m.def("check_names", &check_names);
    m.def("structure_kinds", &structure_kinds);
}
