#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "egr/harness.hpp"
#include "egr/report.hpp"

namespace py = pybind11;
using namespace egr;

namespace {

RingContext make_context(const std::string& spec, long order_cap) {
    return analyze_ring(spec, order_cap);
}

py::dict verification_to_dict(const VerificationResult& r) {
    py::dict d;
    d["theorem"] = r.theorem_id;
    d["ring"] = r.ring_spec;
    d["hypothesis_satisfied"] = r.hypothesis_satisfied;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["verdict"] = to_string(r.verdict);
    d["counterexample"] = r.counterexample;
    d["note"] = r.note;
    return d;
}

} // namespace

PYBIND11_MODULE(_egr, m) {
    m.doc() = "essential annihilating-ideal graphs of finite commutative rings";
    m.attr("__version__") = kToolVersion;

    py::class_<RingContext>(m, "Ring")
        .def(py::init(&make_context), py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap)
        .def_property_readonly("order", [](const RingContext& c) { return c.ring->order(); })
        .def_property_readonly("spec", [](const RingContext& c) { return c.ring->spec().text(); })
        .def_property_readonly("ideal_count", [](const RingContext& c) { return c.lattice->size(); })
        .def_property_readonly("reduced",
                               [](const RingContext& c) {
                                   return c.lattice->nilradical_id() == c.lattice->zero_id();
                               })
        .def_property_readonly("vertex_count",
                               [](const RingContext& c) { return c.eg.vertex_count(); })
        .def_property_readonly("edge_count", [](const RingContext& c) { return c.eg.edge_count(); })
        .def("is_unit", [](const RingContext& c, int a) { return c.ring->is_unit(a); })
        .def("mul", [](const RingContext& c, int a, int b) { return c.ring->mul(a, b); })
        .def("add", [](const RingContext& c, int a, int b) { return c.ring->add(a, b); })
        .def("vertex_labels",
             [](const RingContext& c) {
                 std::vector<std::string> out;
                 for (int id : c.eg.vertex_ideals) out.push_back(c.lattice->label(id));
                 return out;
             })
        .def("edges", [](const RingContext& c) { return c.eg.graph.edges(); })
        .def("invariants",
             [](const RingContext& c, long node_budget) {
                 InvariantReport rep = compute_invariants(c.eg.graph, node_budget);
                 py::dict d;
                 d["omega"] = rep.omega;
                 d["omega_witness"] = rep.omega_witness;
                 d["chi"] = rep.chi;
                 d["twin_free_omega"] = rep.twin_free_omega;
                 d["delta"] = rep.delta;
                 d["edge_class"] = to_string(rep.edge.cls);
                 d["chi_prime"] = rep.edge.chi_prime;
                 d["overfull"] = rep.edge.overfull;
                 return d;
             },
             py::arg("node_budget") = kDefaultNodeBudget)
        .def("report_json",
             [](const RingContext& c, long node_budget) {
                 InvariantReport rep = compute_invariants(c.eg.graph, node_budget);
                 return report_document(c, rep).dump();
             },
             py::arg("node_budget") = kDefaultNodeBudget)
        .def("dot", [](const RingContext& c) { return to_dot(c.eg, *c.lattice); })
        .def("edge_list",
             [](const RingContext& c) {
                 std::ostringstream os;
                 write_edge_list(c.eg.graph, os);
                 return os.str();
             });

    m.def("threshold_n_for_t", &threshold_n_for_t, py::arg("t"));
    m.def("default_corpus", &default_corpus);
    m.def(
        "verify",
        [](const std::vector<std::string>& corpus, const std::vector<std::string>& tags) {
            std::vector<py::dict> out;
            for (const auto& r : run_suite(corpus, tags)) out.push_back(verification_to_dict(r));
            return out;
        },
        py::arg("corpus"), py::arg("tags") = std::vector<std::string>{});
}
