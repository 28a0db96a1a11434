#include "egr/report.hpp"

#include <algorithm>
#include <sstream>

namespace egr {

namespace {

ordered_json witness_labels(const RingContext& ctx, const std::vector<int>& verts) {
    ordered_json arr = ordered_json::array();
    for (int v : verts) arr.push_back(ctx.lattice->label(ctx.eg.vertex_ideals[std::size_t(v)]));
    return arr;
}

} // namespace

ordered_json ring_summary_json(const RingContext& ctx) {
    const auto& lat = *ctx.lattice;
    ordered_json gens = ordered_json::array();
    for (int e : lat.generators(lat.nilradical_id())) gens.push_back(lat.element_name(e));
    return ordered_json{
        {"order", ctx.ring->order()},
        {"reduced", lat.nilradical_id() == lat.zero_id()},
        {"ideal_count", lat.size()},
        {"min_count", lat.minimal_primes().size()},
        {"max_count", lat.maximal_ideals().size()},
        {"annihilating_count", ctx.eg.vertex_count()},
        {"nil_generators", gens},
    };
}

ordered_json graph_summary_json(const RingContext& ctx) {
    return ordered_json{
        {"vertices", ctx.eg.vertex_count()},
        {"edges", ctx.eg.edge_count()},
        {"max_degree", ctx.eg.graph.max_degree()},
    };
}

ordered_json invariants_json(const RingContext& ctx, const InvariantReport& rep) {
    ordered_json j{
        {"omega", rep.omega},
        {"omega_witness", witness_labels(ctx, rep.omega_witness)},
        {"chi", rep.chi},
        {"twin_free_omega", rep.twin_free_omega},
        {"twin_free_witness", witness_labels(ctx, rep.twin_free_witness)},
        {"delta", rep.delta},
        {"edge_class", to_string(rep.edge.cls)},
        {"overfull", rep.edge.overfull},
        {"class1_criterion_fired", rep.edge.class1_criterion},
        {"universal_vertex_path_fired", rep.edge.universal_vertex_path},
        {"search_stats",
         ordered_json{{"clique_nodes", rep.clique_nodes},
                      {"coloring_nodes", rep.coloring_nodes},
                      {"twin_nodes", rep.twin_nodes},
                      {"edge_nodes", rep.edge.nodes}}},
    };
    if (rep.edge.cls != EdgeClass::Undetermined)
        j["chi_prime"] = rep.edge.chi_prime;
    else
        j["edge_class_undetermined"] = true;
    return j;
}

ordered_json verification_json(const VerificationResult& r) {
    ordered_json j{
        {"theorem", r.theorem_id},
        {"ring", r.ring_spec},
        {"hypothesis_satisfied", r.hypothesis_satisfied},
        {"expected", r.expected},
        {"computed", r.computed},
        {"verdict", to_string(r.verdict)},
    };
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json lattice_json(const RingContext& ctx) {
    const auto& lat = *ctx.lattice;
    ordered_json ideals = ordered_json::array();
    for (int id = 0; id < lat.size(); ++id) {
        ordered_json gens = ordered_json::array();
        for (int e : lat.generators(id)) gens.push_back(lat.element_name(e));
        ideals.push_back(ordered_json{
            {"id", id},
            {"label", lat.label(id)},
            {"size", lat.ideal(id).members.count()},
            {"generators", gens},
            {"annihilator", lat.label(lat.annihilator(id))},
            {"essential", lat.is_essential(id)},
            {"nilpotent", lat.is_nilpotent(id)},
            {"minimal", std::find(lat.minimal_ideals().begin(), lat.minimal_ideals().end(), id) !=
                            lat.minimal_ideals().end()},
            {"maximal", std::find(lat.maximal_ideals().begin(), lat.maximal_ideals().end(), id) !=
                            lat.maximal_ideals().end()},
            {"prime", std::find(lat.minimal_primes().begin(), lat.minimal_primes().end(), id) !=
                          lat.minimal_primes().end()},
        });
    }
    return ordered_json{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"ring_spec", ctx.ring->spec().text()},
        {"ring_summary", ring_summary_json(ctx)},
        {"ideals", ideals},
    };
}

ordered_json graph_json(const RingContext& ctx) {
    ordered_json verts = ordered_json::array();
    for (int v = 0; v < ctx.eg.vertex_count(); ++v) {
        int id = ctx.eg.vertex_ideals[std::size_t(v)];
        verts.push_back(ordered_json{{"vertex", v}, {"ideal_id", id}, {"label", ctx.lattice->label(id)}});
    }
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : ctx.eg.graph.edges()) edges.push_back(ordered_json::array({u, v}));
    return ordered_json{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"ring_spec", ctx.ring->spec().text()},
        {"vertices", verts},
        {"edges", edges},
    };
}

ordered_json report_document(const RingContext& ctx, const InvariantReport& rep) {
    return ordered_json{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"ring_spec", ctx.ring->spec().text()},
        {"ring_summary", ring_summary_json(ctx)},
        {"graph_summary", graph_summary_json(ctx)},
        {"invariants", invariants_json(ctx, rep)},
        {"verifications", ordered_json::array()},
    };
}

std::string human_invariants(const RingContext& ctx, const InvariantReport& rep) {
    std::ostringstream os;
    const auto& lat = *ctx.lattice;
    os << "ring            " << ctx.ring->spec().text() << " (order " << ctx.ring->order() << ")\n";
    os << "reduced         " << (lat.nilradical_id() == lat.zero_id() ? "yes" : "no") << "\n";
    os << "ideals          " << lat.size() << "  |Min| " << lat.minimal_primes().size()
       << "  |Max| " << lat.maximal_ideals().size() << "\n";
    os << "graph           |V| " << ctx.eg.vertex_count() << "  |E| " << ctx.eg.edge_count()
       << "  Delta " << rep.delta << "\n";
    if (ctx.eg.vertex_count() == 0) os << "note            empty graph (no annihilating ideals)\n";
    os << "omega           " << rep.omega << "\n";
    os << "chi             " << rep.chi << "\n";
    os << "twin-free omega " << rep.twin_free_omega << "\n";
    os << "edge class      " << to_string(rep.edge.cls);
    if (rep.edge.cls != EdgeClass::Undetermined) os << "  chi' " << rep.edge.chi_prime;
    os << "\n";
    os << "overfull        " << (rep.edge.overfull ? "yes" : "no") << "\n";
    return os.str();
}

std::string human_verification_line(const VerificationResult& r) {
    std::ostringstream os;
    os << "[" << to_string(r.verdict) << "] " << r.theorem_id << " on " << r.ring_spec << ": ";
    if (r.verdict == Verdict::VacuousHypothesis)
        os << r.note;
    else
        os << r.computed;
    if (r.verdict == Verdict::Fail && !r.counterexample.empty())
        os << " | counterexample: " << r.counterexample;
    return os.str();
}

std::string human_lattice(const RingContext& ctx) {
    const auto& lat = *ctx.lattice;
    std::ostringstream os;
    os << "ideals of " << ctx.ring->spec().text() << " (" << lat.size() << " total)\n";
    for (int id = 0; id < lat.size(); ++id) {
        os << "  " << id << "  " << lat.label(id) << "  size " << lat.ideal(id).members.count()
           << "  Ann " << lat.label(lat.annihilator(id))
           << (lat.is_essential(id) ? "  essential" : "")
           << (lat.is_nilpotent(id) ? "  nilpotent" : "") << "\n";
    }
    return os.str();
}

} // namespace egr
