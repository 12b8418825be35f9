// Python bindings. Exposes the graph types, counting and decycling
// routines, the bracket calculus, and the synthesizer/verifier round trip.
// Arbitrary-precision integers cross the boundary as native Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>

#include "indpoly/certificate.hpp"
#include "indpoly/counting.hpp"
#include "indpoly/decycling.hpp"
#include "indpoly/io.hpp"
#include "indpoly/synth.hpp"
#include "indpoly/verify.hpp"

namespace py = pybind11;
using namespace indpoly;

namespace pybind11::detail {

// BigInt <-> Python int through the decimal string form, which both sides
// parse exactly at any magnitude.
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) {
            PyErr_Clear();
            return false;
        }
        value = BigInt(std::string(py::str(text)));
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using PyBracket = std::tuple<BigInt, BigInt, BigInt>;

PyBracket to_py(const Bracket& b) { return {b.value, b.a, b.b}; }

Bracket from_py(const PyBracket& t) {
    Bracket b;
    b.value = std::get<0>(t);
    b.a = std::get<1>(t);
    b.b = std::get<2>(t);
    return b;
}

std::vector<BigInt> poly_coeffs(const IntegerPolynomial& p) { return p.coefficients(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "independence polynomial toolkit: exact counting, decycling "
              "numbers, bracket calculus, and (k, q)-graph synthesis";

    py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "EdgeListError", PyExc_ValueError);
    py::register_exception<CertParseError>(m, "CertificateError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<RootedGraph>(m, "RootedGraph")
        .def(py::init<Graph, int>(), py::arg("graph"), py::arg("root"))
        .def_readonly("graph", &RootedGraph::graph)
        .def_readonly("root", &RootedGraph::root)
        .def("__repr__", [](const RootedGraph& g) {
            return "RootedGraph(n=" + std::to_string(g.graph.vertex_count()) +
                   ", root=" + std::to_string(g.root) + ")";
        });

    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_complete", &make_complete, py::arg("n"));
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("is_acyclic", &is_acyclic, py::arg("graph"));

    m.def(
        "independence_polynomial",
        [](const Graph& g) { return poly_coeffs(independence_polynomial(g)); }, py::arg("graph"),
        "Coefficient list of I(G;x), low degree first; the constant term "
        "counts the empty independent set.");
    m.def("value_at_minus_one", &value_at_minus_one, py::arg("graph"), "I(G;-1), exactly.");
    m.def("independence_number", &independence_number, py::arg("graph"));
    m.def(
        "brute_force_census",
        [](const Graph& g, int cap) { return poly_coeffs(brute_force_census(g, cap)); },
        py::arg("graph"), py::arg("max_vertices") = 25,
        "Independent-set counts by subset enumeration; independent check on "
        "the recursion.");

    m.def(
        "min_decycling",
        [](const Graph& g) {
            DecyclingResult res = min_decycling(g);
            return std::make_tuple(res.phi, res.witness);
        },
        py::arg("graph"),
        "Exact decycling number phi(G) and a minimum decycling set.");

    m.def("paste", &paste, py::arg("g"), py::arg("h"),
          "Identify the two roots into a single root vertex.");
    m.def("extend", &extend, py::arg("g"), py::arg("ell"),
          "Append a path of ell vertices at the root; the far end is the new root.");
    m.def(
        "compute_bracket", [](const RootedGraph& g) { return to_py(compute_bracket(g)); },
        py::arg("rooted"), "(I(G;-1), I(G-v;-1), I(G-N[v];-1)) at the root.");
    m.def(
        "paste_brackets",
        [](const PyBracket& x, const PyBracket& y) {
            return to_py(paste_brackets(from_py(x), from_py(y)));
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "extend_bracket",
        [](const PyBracket& x, int ell) { return to_py(extend_bracket(from_py(x), ell)); },
        py::arg("x"), py::arg("ell"));

    m.def(
        "synth",
        [](int k, const BigInt& q) {
            Certificate cert = synth(k, q);
            Realization real = realize(cert);
            return std::make_tuple(real.rooted, certificate_to_json(cert));
        },
        py::arg("k"), py::arg("q"),
        "Connected graph with decycling number k and I(G;-1) = q, plus its "
        "construction certificate as JSON. Raises BoundError when |q| > 2^k.");

    m.def(
        "verify_graph",
        [](const Graph& g, int k, const BigInt& q, const std::string& level, int oracle_cap) {
            VerifyOptions opts;
            opts.level = parse_verify_level(level);
            opts.oracle_cap = oracle_cap;
            Report report = verify_kq(g, k, q, opts);
            return std::make_tuple(report.passed(), report.text());
        },
        py::arg("graph"), py::arg("k"), py::arg("q"), py::arg("level") = "full",
        py::arg("oracle_cap") = 25, "Clause-by-clause (k, q)-graph check; returns (passed, report).");

    m.def(
        "verify_certificate",
        [](const std::string& json_text) {
            Report report = verify_certificate(certificate_from_json(json_text));
            return std::make_tuple(report.passed(), report.text());
        },
        py::arg("json_text"), "Validate a construction certificate; returns (passed, report).");

    m.def(
        "bound_sweep",
        [](int n_max, int trials, unsigned int seed) {
            Report report = bound_sweep(n_max, trials, seed);
            return std::make_tuple(report.passed(), report.text());
        },
        py::arg("n_max") = 10, py::arg("trials") = 200, py::arg("seed") = 1u,
        "Property sweep of |I(G;-1)| <= 2^phi(G) with exhaustive phi.");

    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            ParsedGraph pg = read_edge_list_string(text);
            return std::make_tuple(pg.graph, pg.root);
        },
        py::arg("text"), "Parse the edge-list format; returns (graph, optional root).");
    m.def(
        "format_edge_list",
        [](const Graph& g, std::optional<int> root) { return edge_list_string(g, root); },
        py::arg("graph"), py::arg("root") = std::nullopt);
}
