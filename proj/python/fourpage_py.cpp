#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourpage/binding.hpp"
#include "fourpage/error.hpp"
#include "fourpage/ribbon.hpp"
#include "fourpage/serialize.hpp"

namespace py = pybind11;
using namespace fourpage;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

PipelineOptions pipeline_options(const std::string& tree, std::uint64_t seed,
                                 std::optional<int> unshaded_face) {
    PipelineOptions o;
    if (tree == "auto") {
        o.tree = TreeChoice::automatic;
    } else if (tree == "default") {
        o.tree = TreeChoice::standard;
    } else if (tree == "strict") {
        o.tree = TreeChoice::strict;
    } else if (tree == "random") {
        o.tree = TreeChoice::random;
    } else {
        throw py::value_error("tree must be auto, default, strict or random");
    }
    o.seed = seed;
    o.unshaded_face = unshaded_face;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Four-page presentations of knot and link diagrams";

    static py::exception<Error> error(m, "FourpageError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string message = std::string(to_string(e.kind())) + ": " + e.what();
            py::set_error(error, message.c_str());
        }
    });

    py::class_<Diagram>(m, "Diagram")
        .def(py::init<std::vector<std::array<int, 4>>>(), py::arg("quads"))
        .def_property_readonly("crossing_count", &Diagram::crossing_count)
        .def_property_readonly("edges", &Diagram::edges)
        .def("quads", &Diagram::quads)
        .def("is_nonsplit", [](const Diagram& d) { return is_nonsplit(d); })
        .def("is_reduced", [](const Diagram& d) { return is_reduced(d, compute_faces(d)); })
        .def("nugatory_crossings",
             [](const Diagram& d) { return nugatory_crossings(d, compute_faces(d)); })
        .def("is_alternating", [](const Diagram& d) { return is_alternating(d); })
        .def("nonalternating_edges", [](const Diagram& d) { return nonalternating_edges(d); })
        .def("link_component_count", [](const Diagram& d) { return link_component_count(d); })
        .def("face_count", [](const Diagram& d) { return compute_faces(d).size(); })
        .def("to_pd", [](const Diagram& d) { return to_pd_text(d); })
        .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
        .def("__repr__", [](const Diagram& d) {
            return "<Diagram with " + std::to_string(d.crossing_count()) + " crossings>";
        });

    m.def("parse_pd", [](const std::string& text) { return parse_pd(text); }, py::arg("text"));

    m.def(
        "alpha4_upper_bound",
        [](const Diagram& d, const std::string& tree, std::uint64_t seed,
           std::optional<int> unshaded_face) {
            const Alpha4Result r = alpha4_upper_bound(d, pipeline_options(tree, seed, unshaded_face));
            Json j{{"arcs", r.arcs},
                   {"crossings", r.crossings},
                   {"strict", r.strict},
                   {"strictness_attempted", r.strictness_attempted},
                   {"tree", r.tree},
                   {"presentation", r.presentation}};
            return to_python(j);
        },
        py::arg("diagram"), py::arg("tree") = "auto", py::arg("seed") = 0,
        py::arg("unshaded_face") = py::none());

    m.def(
        "verify",
        [](const py::object& presentation) {
            return to_python(Json(verify(presentation_from_json(from_python(presentation)))));
        },
        py::arg("presentation"));

    m.def(
        "ribbon_bound",
        [](const py::object& presentation, double epsilon) {
            const RibbonPlan plan = ribbon_plan(presentation_from_json(from_python(presentation)));
            return to_python(Json(ribbon_bound(plan, epsilon)));
        },
        py::arg("presentation"), py::arg("epsilon") = 0.01);

    m.def(
        "enumerate_spanning_trees",
        [](const Diagram& d, std::size_t cap) {
            const FaceSet f = compute_faces(d);
            const TaitGraph g = build_tait(d, f, checkerboard(d, f));
            const TreeEnumeration all = enumerate_spanning_trees(g, cap);
            if (all.truncated) throw Error(ErrorKind::CapExceeded, "spanning tree cap reached");
            std::vector<std::vector<int>> out;
            for (const auto& t : all.trees) out.push_back(t.edges);
            return out;
        },
        py::arg("diagram"), py::arg("cap") = 100000);
}
