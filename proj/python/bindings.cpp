#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simploc/error.hpp"
#include "simploc/generators.hpp"
#include "simploc/io.hpp"
#include "simploc/metric.hpp"
#include "simploc/oracle.hpp"
#include "simploc/surgery.hpp"

namespace py = pybind11;
using namespace simploc;

namespace {

py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& o)
{
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::shared_ptr<const FlagComplex> shared(const FlagComplex& X)
{
    return std::make_shared<const FlagComplex>(X);
}

} // namespace

PYBIND11_MODULE(_simploc, m)
{
    m.doc() = "Flag complexes, local conditions, disc diagrams and flattened wheel metrics";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<SurgeryError>(m, "SurgeryError", PyExc_RuntimeError);
    py::register_exception<MetricUndefined>(m, "MetricUndefined", PyExc_RuntimeError);

    py::class_<FlagComplex>(m, "FlagComplex")
        .def(py::init([](std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> edges) {
                 return FlagComplex::from_labeled_edges(std::move(labels), edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_static("from_json", [](const py::object& o) { return complex_from_json(from_python(o)); })
        .def("to_json", [](const FlagComplex& X) { return to_python(complex_to_json(X)); })
        .def("__len__", &FlagComplex::size)
        .def_property_readonly("labels", &FlagComplex::labels)
        .def_property_readonly("edge_count", &FlagComplex::edge_count)
        .def("edges",
             [](const FlagComplex& X) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [a, b] : X.edges())
                     out.emplace_back(X.label(a), X.label(b));
                 return out;
             })
        .def("adjacent", [](const FlagComplex& X, const std::string& a, const std::string& b) {
            return X.adjacent(X.id_of(a), X.id_of(b));
        });

    py::class_<SimplicialDisc>(m, "Disc")
        .def(py::init([](std::vector<Triangle> triangles, std::vector<VertexId> boundary, bool flag) {
                 return SimplicialDisc::build(std::move(triangles), std::move(boundary), {.flag = flag});
             }),
             py::arg("triangles"), py::arg("boundary"), py::arg("flag") = false)
        .def_static("from_json", [](const py::object& o) { return disc_from_json(from_python(o)); })
        .def("to_json", [](const SimplicialDisc& D) { return to_python(disc_to_json(D)); })
        .def_property_readonly("vertex_count", &SimplicialDisc::vertex_count)
        .def_property_readonly("triangle_count", &SimplicialDisc::triangle_count)
        .def_property_readonly("triangles", &SimplicialDisc::triangles)
        .def_property_readonly("boundary", [](const SimplicialDisc& D) { return D.boundary().vertices; })
        .def("degree", &SimplicialDisc::degree)
        .def("is_interior", &SimplicialDisc::is_interior)
        .def("is_flag", &SimplicialDisc::is_flag)
        .def("skeleton", &SimplicialDisc::skeleton);

    m.def("is_k_large", &is_k_large, py::arg("X"), py::arg("k"));
    m.def("is_locally_k_large", &is_locally_k_large, py::arg("X"), py::arg("k"));
    m.def("is_locally_weakly_systolic", &is_locally_weakly_systolic, py::arg("X"));
    m.def(
        "is_m_located",
        [](const FlagComplex& X, int m) { return to_python(dwheel_report_json(X, is_m_located(X, m))); },
        py::arg("X"), py::arg("m"));
    m.def(
        "check_w5hat", [](const FlagComplex& X) { return to_python(five_wheel_report_json(X, check_w5hat(X))); },
        py::arg("X"));
    m.def(
        "check_disc_7_located",
        [](const SimplicialDisc& D) {
            return to_python(dwheel_report_json(D.skeleton(), check_disc_7_located(D)));
        },
        py::arg("D"));
    m.def("check_degree_sums", &check_degree_sums, py::arg("D"));

    m.def("wheel", &wheel, py::arg("k"));
    m.def("dwheel", &dwheel, py::arg("k"), py::arg("l"), py::arg("planar") = true);
    m.def("extended_five_wheel", &extended_five_wheel);
    m.def("cone", &cone, py::arg("X"));
    m.def("hex_disc", &hex_disc, py::arg("radius"));
    m.def("random_flag", &random_flag, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("random_7_located_disc", &random_7_located_disc, py::arg("size"), py::arg("seed"));

    m.def(
        "metrize", [](const SimplicialDisc& D) { return to_python(metric_report_json(metrize(D))); },
        py::arg("D"));
    m.def(
        "is_cat0", [](const SimplicialDisc& D) { return is_cat0(metrize(D)).cat0; }, py::arg("D"));
    m.def(
        "isoperimetric_bound", [](int n) { return isoperimetric_bound(n).value; }, py::arg("n"));
    m.def(
        "export_svg", [](const SimplicialDisc& D) { return export_svg(metrize(D)); }, py::arg("D"));

    m.def(
        "minimal_diagrams",
        [](const FlagComplex& X, const std::vector<std::string>& loop, int area_cap, int max_diagrams) {
            Cycle c;
            for (const auto& label : loop)
                c.vertices.push_back(X.id_of(label));
            OracleOptions options;
            options.max_diagrams = max_diagrams;
            return to_python(oracle_result_json(brute_force_min_diagram(shared(X), c, area_cap, options)));
        },
        py::arg("X"), py::arg("loop"), py::arg("area_cap") = 10, py::arg("max_diagrams") = 1000);
    m.def(
        "reduce",
        [](const py::object& diagram, const FlagComplex* target) {
            const DiscDiagram d = diagram_from_json(from_python(diagram), target ? shared(*target) : nullptr);
            const ReduceResult r = reduce(d);
            Json trace = Json::array();
            for (const auto& c : r.trace)
                trace.push_back(certificate_json(c));
            return to_python(Json{{"diagram", diagram_to_json(r.diagram)}, {"trace", std::move(trace)}});
        },
        py::arg("diagram"), py::arg("target") = nullptr);
}
