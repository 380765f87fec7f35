#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordram/core.hpp"
#include "ordram/draw.hpp"
#include "ordram/io.hpp"
#include "ordram/kneser.hpp"
#include "ordram/matchings.hpp"
#include "ordram/search.hpp"
#include "ordram/trees.hpp"

namespace py = pybind11;
using namespace ordram;

namespace {

using PyEdge = std::pair<int, int>;

Edge to_edge(const PyEdge& e) { return make_edge(e.first, e.second); }
PyEdge from_edge(const Edge& e) { return {e.lo, e.hi}; }

std::vector<PyEdge> from_edges(const std::vector<Edge>& es) {
    std::vector<PyEdge> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(from_edge(e));
    return out;
}

RelationConstraint constraint_arg(const std::optional<std::string>& family, const std::optional<std::string>& required) {
    if (family && required) fail(ErrorKind::InvalidArgument, "pass either constraint or required, not both");
    if (required) return RelationConstraint::require(parse_relation(*required));
    return parse_constraint(family ? *family : "any");
}

Certificate solve_matching(const OrderedColoring& c, const std::string& theorem, int n,
                           const std::optional<std::vector<int>>& part) {
    if (theorem == "14") return matchings::find_matching_noncrossing(c, n);
    if (theorem == "16") return matchings::find_matching_nonseparated(c, n);
    if (theorem == "11") return matchings::solve_r_star_2(c, n);
    if (theorem == "12") return matchings::solve_r_star_3(c, n);
    if (theorem == "17") return matchings::extract_nested_matching(c, n);
    if (theorem == "18") return matchings::extract_crossing_matching(c, n);
    if (theorem == "19") return matchings::extract_separated_matching(c, n);
    if (theorem == "9i" || theorem == "9ii") {
        if (!part) fail(ErrorKind::InvalidArgument, "theorem " + theorem + " needs the vertex set `part`");
        auto p = *part;
        std::sort(p.begin(), p.end());
        if (theorem == "9i") return matchings::find_nonnested_given_red_clique(c, p);
        std::vector<Vertex> q;
        for (int v = 1; v <= c.m(); ++v)
            if (!std::binary_search(p.begin(), p.end(), v)) q.push_back(v);
        return matchings::find_nonnested_given_blue_biclique(c, p, q);
    }
    fail(ErrorKind::InvalidArgument, "unknown theorem '" + theorem + "'");
}

}  // namespace

PYBIND11_MODULE(_ordram, m) {
    m.doc() = "Ordered Ramsey toolkit core";
    m.attr("__version__") = io::kToolVersion;

    static py::exception<Error> exc(m, "OrderedRamseyError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("classify_pair", [](const PyEdge& e, const PyEdge& f) {
        return std::string(to_string(classify_pair(to_edge(e), to_edge(f))));
    }, py::arg("e"), py::arg("f"), "Relation of two independent edges: crossing, nested or separated.");

    py::class_<OrderedColoring>(m, "Coloring")
        .def(py::init<int, int, int>(), py::arg("m"), py::arg("t") = 2, py::arg("fill") = 0)
        .def_property_readonly("m", &OrderedColoring::m)
        .def_property_readonly("t", &OrderedColoring::t)
        .def("color", [](const OrderedColoring& c, int i, int j) { return c.color(i, j); })
        .def("set", [](OrderedColoring& c, int i, int j, int col) { c.set(i, j, col); })
        .def("colors", [](const OrderedColoring& c) { return std::vector<int>(c.colors().begin(), c.colors().end()); })
        .def("color_class", [](const OrderedColoring& c, int col) { return from_edges(c.color_class(col)); })
        .def("to_json", [](const OrderedColoring& c) { return io::coloring_to_json(c).dump(); })
        .def_static("from_json", [](const std::string& text) { return io::coloring_from_json(io::parse_json(text)); })
        .def("__eq__", [](const OrderedColoring& a, const OrderedColoring& b) { return a == b; })
        .def("__repr__", [](const OrderedColoring& c) {
            return "<Coloring m=" + std::to_string(c.m()) + " t=" + std::to_string(c.t()) + ">";
        });

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("kind", [](const Certificate& c) { return std::string(to_string(c.kind)); })
        .def_property_readonly("edges", [](const Certificate& c) { return from_edges(c.edges); })
        .def_readonly("color", &Certificate::color)
        .def_property_readonly("constraint", [](const Certificate& c) { return c.constraint.describe(); })
        .def_readonly("source", &Certificate::source)
        .def("__len__", &Certificate::size)
        .def("to_json", [](const Certificate& c, int mm) { return io::certificate_to_json(c, mm).dump(); },
             py::arg("m") = 0)
        .def_static("from_json", [](const std::string& text) { return io::certificate_from_json(io::parse_json(text)); })
        .def("__repr__", [](const Certificate& c) {
            return "<Certificate " + std::string(to_string(c.kind)) + " " + c.constraint.describe() + " color=" +
                   std::to_string(c.color) + " size=" + std::to_string(c.size()) + ">";
        });

    m.def("validate", [](const OrderedColoring& c, const Certificate& cert) {
        const auto r = validate_certificate(c, cert);
        return py::make_tuple(r.ok, r.message);
    }, "Returns (ok, message).");

    m.def("find_spanning_tree", [](const OrderedColoring& c, const std::string& relation) {
        if (relation == "non-crossing") return trees::find_tree_noncrossing(c);
        if (relation == "non-nested") return trees::find_tree_nonnested(c);
        if (relation == "non-separated") return trees::find_tree_nonseparated(c);
        fail(ErrorKind::InvalidArgument, "relation must be non-crossing, non-nested or non-separated");
    }, py::arg("coloring"), py::arg("relation"));

    m.def("dense_nonseparated_subgraph", &trees::dense_nonseparated_subgraph);

    m.def("find_matching", &solve_matching, py::arg("coloring"), py::arg("theorem"), py::arg("n"),
          py::arg("part") = py::none(),
          "Runs a constructive matching solver; theorem is one of 14, 16, 9i, 9ii, 11, 12, 17, 18, 19.");

    m.def("construct", [](const std::string& name, int t, int n) { return matchings::construct_named(name, t, n); },
          py::arg("name"), py::arg("t") = 2, py::arg("n") = 2);
    m.def("construction_names", [] {
        std::vector<std::string> out;
        for (auto s : matchings::construction_names()) out.emplace_back(s);
        return out;
    });

    auto oracle = [](auto fn) {
        return [fn](const OrderedColoring& c, int color, const std::optional<std::string>& constraint,
                    const std::optional<std::string>& required) {
            const auto r = fn(c, constraint_arg(constraint, required), color);
            return py::make_tuple(r.size, r.witness);
        };
    };
    m.def("max_matching", oracle([](const OrderedColoring& c, const RelationConstraint& rc, int col) {
              return matchings::max_constrained_matching(c, rc, col);
          }), py::arg("coloring"), py::arg("color"), py::arg("constraint") = py::none(), py::arg("required") = py::none());
    m.def("max_subtree", oracle([](const OrderedColoring& c, const RelationConstraint& rc, int col) {
              return trees::max_constrained_subtree(c, rc, col);
          }), py::arg("coloring"), py::arg("color"), py::arg("constraint") = py::none(), py::arg("required") = py::none());
    m.def("max_subgraph", oracle([](const OrderedColoring& c, const RelationConstraint& rc, int col) {
              return trees::max_constrained_subgraph(c, rc, col);
          }), py::arg("coloring"), py::arg("color"), py::arg("constraint") = py::none(), py::arg("required") = py::none());

    m.def("random_coloring", &search::random_coloring, py::arg("m"), py::arg("t"), py::arg("seed"));

    m.def("ramsey_number", [](const std::string& family, std::vector<int> sizes, int max_m, int jobs) {
        search::RunOptions o;
        o.jobs = jobs;
        o.shards = jobs > 1 ? 4 * jobs : 1;
        py::gil_scoped_release release;
        const auto r = search::ramsey_number(search::make_query(family, std::move(sizes)), max_m, o);
        return std::make_pair(r.value, r.witness);
    }, py::arg("family"), py::arg("sizes"), py::arg("max_m") = 11, py::arg("jobs") = 1,
       "Returns (value or None, witness coloring on value-1 vertices or None).");

    m.def("verify_conjecture", [](const std::string& name, std::vector<int> sizes, int jobs, std::uint64_t budget) {
        search::RunOptions o;
        o.jobs = jobs;
        o.shards = jobs > 1 ? 4 * jobs : 1;
        o.budget = budget;
        py::gil_scoped_release release;
        const auto r = search::verify_conjecture(name, std::move(sizes), o);
        return std::make_tuple(r.m, std::string(search::to_string(r.result.verdict)), r.result.counterexample);
    }, py::arg("name"), py::arg("sizes"), py::arg("jobs") = 1, py::arg("budget") = 0,
       "Returns (m, verdict, counterexample or None).");

    m.def("kneser_vertices", [](int t) { return from_edges(kneser::build_g(t).vertices); });
    m.def("kneser_edges", [](int t) { return kneser::build_g(t).graph.edges(); },
          "Adjacent pairs of 0-based vertex indices.");
    m.def("kneser_chromatic_number", [](int t) {
        const auto r = kneser::chromatic_number(kneser::build_g(t).graph);
        return std::make_pair(r.k, r.colors);
    }, "Returns (chi, proper coloring).");
    m.def("kneser_criticality", [](int t) {
        const auto g = kneser::build_g(t);
        const auto r = kneser::criticality(g.graph);
        std::vector<std::tuple<PyEdge, int, bool>> rows;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            rows.emplace_back(from_edge(g.vertices[v]), r.chi_without[v], r.chi_without[v] < r.chi);
        return std::make_pair(r.chi, rows);
    }, "Returns (chi, [(vertex, chi without it, critical)]).");
    m.def("m2_from_edge_coloring", &kneser::m2_from_edge_coloring);

    m.def("draw_svg", [](const OrderedColoring& c, const std::string& style) {
        return draw::to_svg(draw::layout(c, draw::parse_style(style)));
    }, py::arg("coloring"), py::arg("style") = "convex");
    m.def("draw_edges_svg", [](int mm, const std::vector<PyEdge>& edges, const std::string& style) {
        std::vector<Edge> es;
        for (const auto& e : edges) es.push_back(to_edge(e));
        const std::vector<Color> colors(es.size(), 0);
        return draw::to_svg(draw::layout(mm, 1, es, colors, draw::parse_style(style)));
    }, py::arg("m"), py::arg("edges"), py::arg("style") = "convex");
}
