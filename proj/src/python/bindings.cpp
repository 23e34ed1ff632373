#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <json.hpp>

#include "braidlab/config_space.hpp"
#include "braidlab/error.hpp"
#include "braidlab/pipeline.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/topology.hpp"

namespace py = pybind11;
using namespace braidlab;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
nlohmann::json from_py(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::int_ big(const Integer& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

Class1 to_class(const std::vector<long>& v) { return Class1(v.begin(), v.end()); }

Presentation presentation_of(const Graph& g, int n, const std::string& kind) {
    if (kind == "raw") {
        auto pr = prepare(g, n, is_cactus(g) ? SpanningMode::Cactus : SpanningMode::General);
        return MorseComplex(pr.spanning, n).raw_presentation();
    }
    if (kind == "scr") {
        auto pr = prepare(g, n, SpanningMode::Cactus);
        return build_scr(MorseComplex(pr.spanning, n)).scr;
    }
    if (kind == "raag") {
        if (!detect_nuclei(g).empty()) throw OutOfScope("graph contains a nucleus; B_4 is not a RAAG");
        auto pr = prepare(g, n, SpanningMode::LinearCactus);
        MorseComplex mc(pr.spanning, n);
        return build_raag(mc, build_scr(mc)).group;
    }
    throw PreconditionError("kind must be raw, scr or raag");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Braid groups of graphs";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
    py::register_exception<OutOfScope>(m, "OutOfScope", base);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("betti1", &Graph::betti1)
        .def_property_readonly("name", [](const Graph& g) { return g.name(); })
        .def("__str__", &format_graph)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + g.name() + " V=" + std::to_string(g.vertex_count()) +
                   " E=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
    m.def("load_graph", [](const std::filesystem::path& p) { return load_graph(p); }, py::arg("path"));
    m.def("is_cactus", &is_cactus, py::arg("graph"));
    m.def("data_dir", [] { return std::string(BRAIDLAB_DATA_DIR); });

    m.def(
        "detect_nuclei",
        [](const Graph& g) {
            std::vector<std::string> out;
            for (auto k : detect_nuclei(g)) out.push_back(nucleus_name(k));
            return out;
        },
        py::arg("graph"));

    m.def(
        "homology",
        [](const Graph& g, int n, int k) {
            auto h = homology_in_degree(subdivide_for(g, n).subdivided, n, k);
            py::list torsion;
            for (const auto& t : h.torsion) torsion.append(big(t));
            return py::make_tuple(h.betti, torsion);
        },
        py::arg("graph"), py::arg("n"), py::arg("k"));

    m.def(
        "presentation",
        [](const Graph& g, int n, const std::string& kind) { return format_presentation(presentation_of(g, n, kind)); },
        py::arg("graph"), py::arg("n") = 4, py::arg("kind") = "scr");

    m.def(
        "analyze",
        [](const Graph& g, int n, bool oracle) {
            RunConfig cfg = RunConfig::from_env();
            cfg.n = n;
            cfg.oracle = oracle;
            Verdict v;
            {
                py::gil_scoped_release nogil;
                v = analyze(g, cfg);
            }
            return to_py(v.to_json());
        },
        py::arg("graph"), py::arg("n") = 4, py::arg("oracle") = true);

    m.def(
        "massey",
        [](const Graph& g, int n, const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& c) {
            auto p = presentation_of(g, n, "scr");
            return to_py(to_json(massey_nontrivial(p, to_class(a), to_class(b), to_class(c))));
        },
        py::arg("graph"), py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    m.def(
        "verify_certificate", [](const py::object& cert) { return revalidate(certificate_from_json(from_py(cert))); },
        py::arg("certificate"));
}
