#include "addramsey/avoiders.hpp"
#include "addramsey/bounds.hpp"
#include "addramsey/cnf.hpp"
#include "addramsey/cube.hpp"
#include "addramsey/grid.hpp"
#include "addramsey/hypergraph.hpp"
#include "addramsey/io.hpp"
#include "addramsey/proof_trace.hpp"
#include "addramsey/rado.hpp"
#include "addramsey/tree.hpp"

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace addramsey;

namespace {

std::vector<std::uint8_t> to_colors(const std::vector<int>& v)
{
    std::vector<std::uint8_t> out;
    out.reserve(v.size());
    for (int c : v) {
        if (c < 1 || c > 255)
            throw std::invalid_argument("colors must be in 1..255");
        out.push_back(static_cast<std::uint8_t>(c));
    }
    return out;
}

template <class T>
std::vector<int> colors_of(const T& t)
{
    return {t.colors().begin(), t.colors().end()};
}

template <class Cert>
py::dict number_dict(const NumberResult<Cert>& r)
{
    py::dict d;
    d["kind"] = to_string(r.kind);
    d["value"] = r.value;
    d["nodes"] = r.nodes;
    d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
    return d;
}

std::string bound_str(const BoundValue& v) { return v.to_string(); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Additive Ramsey searches and verifiers";

    py::class_<SearchOptions>(m, "SearchOptions")
        .def(py::init([](unsigned threads) { return SearchOptions{threads}; }), py::arg("threads") = 1)
        .def_readwrite("threads", &SearchOptions::threads);

    m.def("default_budget", &default_budget);

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init([](int n, int r, const std::vector<int>& c) { return EdgeColoring(n, r, to_colors(c)); }),
             py::arg("n"), py::arg("r"), py::arg("colors"))
        .def_static("constant", &EdgeColoring::constant, py::arg("n"), py::arg("r"), py::arg("color") = 1)
        .def_static("from_rule", &EdgeColoring::from_rule)
        .def_property_readonly("n", &EdgeColoring::n)
        .def_property_readonly("r", &EdgeColoring::r)
        .def_property_readonly("colors", &colors_of<EdgeColoring>)
        .def("color", &EdgeColoring::color)
        .def("to_json", [](const EdgeColoring& c) { return to_json(c).dump(); })
        .def_static("from_json", [](const std::string& s) { return edge_coloring_from_json(Json::parse(s)); })
        .def(py::self == py::self);

    py::class_<GridColoring>(m, "GridColoring")
        .def(py::init([](int s, int r, const std::vector<int>& c) { return GridColoring(s, r, to_colors(c)); }),
             py::arg("side"), py::arg("r"), py::arg("colors"))
        .def_property_readonly("side", &GridColoring::side)
        .def_property_readonly("r", &GridColoring::r)
        .def_property_readonly("colors", &colors_of<GridColoring>)
        .def("color", &GridColoring::color)
        .def("to_json", [](const GridColoring& c) { return to_json(c).dump(); });

    py::class_<VertexColoring>(m, "VertexColoring")
        .def(py::init([](int n, int c, const std::vector<int>& v) { return VertexColoring(n, c, to_colors(v)); }),
             py::arg("n"), py::arg("c"), py::arg("colors"))
        .def_property_readonly("n", &VertexColoring::n)
        .def_property_readonly("c", &VertexColoring::c)
        .def_property_readonly("colors", &colors_of<VertexColoring>)
        .def("to_json", [](const VertexColoring& c) { return to_json(c).dump(); });

    py::class_<TreeColoring>(m, "TreeColoring")
        .def(py::init([](int k, int h, int c, const std::vector<int>& v) { return TreeColoring(k, h, c, to_colors(v)); }),
             py::arg("k"), py::arg("height"), py::arg("c"), py::arg("colors"))
        .def_property_readonly("k", &TreeColoring::k)
        .def_property_readonly("height", &TreeColoring::height)
        .def_property_readonly("c", &TreeColoring::c)
        .def_property_readonly("colors", &colors_of<TreeColoring>)
        .def("to_json", [](const TreeColoring& c) { return to_json(c).dump(); });

    py::class_<HilbertCube>(m, "HilbertCube")
        .def(py::init<std::int64_t, std::vector<std::int64_t>>(), py::arg("base"), py::arg("increments"))
        .def_property_readonly("base", &HilbertCube::base)
        .def_property_readonly("increments", &HilbertCube::increments)
        .def("elements", &HilbertCube::elements)
        .def("is_proper", &HilbertCube::is_proper)
        .def(py::self == py::self)
        .def("__repr__", [](const HilbertCube& c) {
            std::string s = "H(" + std::to_string(c.base()) + ";";
            for (auto d : c.increments())
                s += " " + std::to_string(d);
            return s + ")";
        });

    py::class_<GridWitness>(m, "GridWitness")
        .def_readonly("x", &GridWitness::x)
        .def_readonly("y", &GridWitness::y)
        .def_readonly("d", &GridWitness::d)
        .def_readonly("color", &GridWitness::color);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("property", &VerificationReport::property)
        .def_readonly("range", &VerificationReport::range)
        .def_readonly("passed", &VerificationReport::pass)
        .def_readonly("witness", &VerificationReport::witness)
        .def_readonly("checked", &VerificationReport::checked)
        .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); });

    m.def("ratio_avoider_coloring", [](std::int64_t a, std::int64_t b, int n) {
        return ratio_avoider_coloring(RatioEquation(a, b), n);
    });
    m.def(
        "ratio_star_check",
        [](std::int64_t a, std::int64_t b, int n, unsigned threads) {
            py::gil_scoped_release release;
            return ratio_star_check(RatioEquation(a, b), n, SearchOptions{threads});
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("threads") = 1);
    m.def("schur_avoider_coloring", [](std::vector<std::int64_t> coeffs, std::int64_t rhs, int n) {
        return schur_avoider_coloring(SchurEquation(std::move(coeffs), rhs), n);
    });
    m.def(
        "schur_star_check",
        [](std::vector<std::int64_t> coeffs, std::int64_t rhs, int n, unsigned threads) {
            SchurEquation eq(std::move(coeffs), rhs);
            py::gil_scoped_release release;
            return schur_star_check(eq, n, SearchOptions{threads});
        },
        py::arg("coeffs"), py::arg("rhs"), py::arg("n"), py::arg("threads") = 1);

    m.def("solution_hypergraph_stats", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p) {
        const auto h = build_solution_hypergraph(ModularTripleEquation(a, b, c, p));
        py::dict d;
        d["vertices"] = h.graph.vertex_count();
        d["edges"] = h.graph.edges().size();
        d["max_degree"] = h.graph.max_degree();
        return d;
    });
    m.def(
        "color_solution_hypergraph",
        [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p, int colors, std::uint64_t budget) {
            const auto h = build_solution_hypergraph(ModularTripleEquation(a, b, c, p));
            const auto r = color_hypergraph(h.graph, colors, budget);
            py::dict d;
            d["outcome"] = to_string(r.outcome);
            d["colors"] = r.colors;
            d["nodes"] = r.nodes;
            d["proper"] = r.outcome == ColoringOutcome::Found && is_proper_coloring(h.graph, r.colors);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"), py::arg("colors"), py::arg("budget") = default_budget());

    m.def(
        "find_mono_cube",
        [](const EdgeColoring& c, int k, unsigned threads) -> std::optional<HilbertCube> {
            py::gil_scoped_release release;
            return find_mono_cube(c, k, SearchOptions{threads}).cube;
        },
        py::arg("coloring"), py::arg("k"), py::arg("threads") = 1);
    m.def("is_monochromatic", [](const EdgeColoring& c, const HilbertCube& h) { return is_monochromatic(c, h); });
    m.def(
        "ramsey_cube_number",
        [](int r, int k, int n_max, std::uint64_t budget) { return number_dict(ramsey_cube_number(r, k, n_max, budget)); },
        py::arg("r"), py::arg("k"), py::arg("n_max"), py::arg("budget") = default_budget());
    m.def("export_cnf", [](int r, int k, int n) { return export_cnf(r, k, n).to_dimacs(); });
    m.def(
        "solve_dimacs",
        [](const std::string& text, std::uint64_t budget) {
            return std::string(to_string(solve_cnf(Cnf::parse_dimacs(text), budget).status));
        },
        py::arg("text"), py::arg("budget") = default_budget());

    m.def(
        "find_mono_grid",
        [](const GridColoring& g, int k, unsigned threads) {
            py::gil_scoped_release release;
            return find_mono_grid(g, k, SearchOptions{threads});
        },
        py::arg("grid"), py::arg("k"), py::arg("threads") = 1);
    m.def(
        "gw_number", [](int r, int k, int s_max, std::uint64_t budget) { return number_dict(gw_number(r, k, s_max, budget)); },
        py::arg("r"), py::arg("k"), py::arg("s_max"), py::arg("budget") = default_budget());
    m.def(
        "rado_helper_number", [](int t_max, std::uint64_t budget) { return number_dict(rado_helper_number(t_max, budget)); },
        py::arg("t_max"), py::arg("budget") = default_budget());
    m.def("find_rado_helper_solution", [](const VertexColoring& c) {
        return find_mono_distinct_solution(c, LinearPatternSystem::rado_helper());
    });

    m.def(
        "f_exact",
        [](int k, int c, int n_max, std::uint64_t budget) { return number_dict(f_exact(k, c, n_max, budget)); },
        py::arg("k"), py::arg("c"), py::arg("n_max"), py::arg("budget") = default_budget());
    m.def("is_balanced", [](const TreeColoring& t) { return find_balanced_star(t).has_value(); });
    m.def("f_bound", [](int k, int c) { return bound_str(f_recurrence_bound(k, c)); });
    m.def("f_closed_form_floor", [](int k, int c) { return bound_str(f_closed_form(k, c).closed_form_floor); });
    m.def("E_bound", [](int k, int c, int n) { return bound_str(E_bound(k, c, n)); });
    m.def("s_bound", [](int r, const std::string& stub) {
        const auto seq = s_bound(r, stub == "scaled" ? GwBound(gw_stub_scaled) : GwBound(gw_stub_identity));
        std::vector<std::string> out;
        for (const auto& v : seq.values)
            out.push_back(bound_str(v));
        return out;
    }, py::arg("r"), py::arg("stub") = "identity");

    m.def(
        "extract_cube",
        [](const EdgeColoring& chi, int k) {
            const auto r = extract_cube(chi, k);
            py::dict d;
            d["outcome"] = to_string(r.outcome);
            d["detail"] = r.detail;
            d["cube"] = r.cube ? py::cast(*r.cube) : py::none();
            d["color"] = r.color;
            d["trace"] = to_json(r.trace).dump();
            return d;
        },
        py::arg("coloring"), py::arg("k"));
}
