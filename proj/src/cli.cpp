#include "egr/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "egr/errors.hpp"
#include "egr/report.hpp"

namespace egr {

namespace {

std::vector<std::string> load_corpus(const std::string& corpus_arg, const std::string& inline_spec) {
    if (!inline_spec.empty()) return {inline_spec};
    std::string path = corpus_arg;
    if (path == "default" || path.empty()) {
        const char* env = std::getenv("EGR_CORPUS");
        if (env && *env)
            path = env;
        else
            return default_corpus();
    }
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read corpus file: " + path);
    std::stringstream body;
    body << in.rdbuf();
    return parse_corpus(body.str());
}

std::vector<long> parse_long_csv(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

std::vector<std::string> parse_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"essential annihilating-ideal graph toolkit"};
    app.require_subcommand(1);

    long order_cap = kDefaultOrderCap;
    long node_budget = kDefaultNodeBudget;
    app.add_option("--order-cap", order_cap, "maximum ring order");
    app.add_option("--node-budget", node_budget, "search node budget for edge coloring");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "emit the graph of a ring");
    std::string graph_spec, graph_format = "edgelist";
    graph_cmd->add_option("spec", graph_spec, "ring spec, e.g. \"Z/9 x Z/25\"")->required();
    graph_cmd->add_option("--format", graph_format, "dot | json | edgelist")
        ->check(CLI::IsMember({"dot", "json", "edgelist"}));
    bool hash_labels = false;
    graph_cmd->add_flag("--hash-labels", hash_labels, "label vertices by bit-vector hash");

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "compute exact graph invariants");
    std::string inv_spec;
    bool inv_json = false, inv_timing = false;
    inv_cmd->add_option("spec", inv_spec, "ring spec")->required();
    inv_cmd->add_flag("--json", inv_json, "JSON report");
    inv_cmd->add_flag("--timing", inv_timing, "include per-phase timings in the JSON report");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "replay the theorems on concrete rings");
    std::string ver_spec, ver_corpus, ver_tags;
    bool ver_json = false;
    ver_cmd->add_option("spec", ver_spec, "single ring spec (instead of a corpus)");
    ver_cmd->add_option("--corpus", ver_corpus, "corpus file path, or 'default'");
    ver_cmd->add_option("--tags", ver_tags, "comma-separated theorem tags");
    ver_cmd->add_flag("--json", ver_json, "JSON results");

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "minimal n for the Class 1 inequality");
    std::string thr_t;
    thr_cmd->add_option("--t", thr_t, "comma-separated even t values")->required();

    // lattice
    auto* lat_cmd = app.add_subcommand("lattice", "dump the ideal lattice of a ring");
    std::string lat_spec;
    bool lat_json = false;
    lat_cmd->add_option("spec", lat_spec, "ring spec")->required();
    lat_cmd->add_flag("--json", lat_json, "JSON dump");

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*graph_cmd) {
            RingContext ctx = analyze_ring(graph_spec, order_cap);
            if (graph_format == "edgelist")
                write_edge_list(ctx.eg.graph, out);
            else if (graph_format == "dot")
                out << to_dot(ctx.eg, *ctx.lattice, hash_labels);
            else
                out << graph_json(ctx).dump(2) << "\n";
            return 0;
        }
        if (*inv_cmd) {
            namespace chrono = std::chrono;
            auto t0 = chrono::steady_clock::now();
            RingContext ctx = analyze_ring(inv_spec, order_cap);
            auto t1 = chrono::steady_clock::now();
            InvariantReport rep = compute_invariants(ctx.eg.graph, node_budget);
            auto t2 = chrono::steady_clock::now();
            if (inv_json) {
                ordered_json doc = report_document(ctx, rep);
                if (inv_timing) {
                    doc["timing_ms"] = ordered_json{
                        {"analyze", chrono::duration_cast<chrono::milliseconds>(t1 - t0).count()},
                        {"solve", chrono::duration_cast<chrono::milliseconds>(t2 - t1).count()},
                    };
                }
                out << doc.dump(2) << "\n";
            } else {
                out << human_invariants(ctx, rep);
            }
            return 0;
        }
        if (*ver_cmd) {
            auto corpus = load_corpus(ver_corpus, ver_spec);
            auto results = run_suite(corpus, parse_csv(ver_tags), order_cap);
            int fails = 0;
            for (const auto& r : results)
                if (r.verdict == Verdict::Fail) ++fails;
            if (ver_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& r : results) arr.push_back(verification_json(r));
                out << ordered_json{{"schema", kSchemaVersion},
                                    {"tool_version", kToolVersion},
                                    {"results", arr},
                                    {"fail_count", fails}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& r : results) out << human_verification_line(r) << "\n";
                out << (fails == 0 ? "all verifications passed" : "FAILURES: " + std::to_string(fails))
                    << "\n";
            }
            return fails == 0 ? 0 : 1;
        }
        if (*thr_cmd) {
            for (long t : parse_long_csv(thr_t)) out << t << " " << threshold_n_for_t(t) << "\n";
            return 0;
        }
        if (*lat_cmd) {
            RingContext ctx = analyze_ring(lat_spec, order_cap);
            if (lat_json)
                out << lattice_json(ctx).dump(2) << "\n";
            else
                out << human_lattice(ctx);
            return 0;
        }
    } catch (const OrderCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const LatticeCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace egr
