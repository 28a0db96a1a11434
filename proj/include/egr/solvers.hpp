#ifndef EGR_SOLVERS_HPP
#define EGR_SOLVERS_HPP

#include <string>
#include <vector>

#include "egr/graph.hpp"

namespace egr {

constexpr long kDefaultNodeBudget = 100000000;

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices;   // sorted ascending
    long nodes = 0;              // search nodes expanded
};

/// Exact maximum clique: branch and bound with greedy-coloring upper bounds,
/// vertices ordered by descending degree (ties by index).
CliqueResult clique_number(const SimpleGraph& g);

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;     // vertex -> color, 0-based
    long nodes = 0;
};

/// Exact chromatic number, independent of the clique solver's value except as
/// a lower bound: DSATUR greedy upper bound, then exact k-colorability
/// backtracking for each k between the bounds.
ColoringResult chromatic_number(const SimpleGraph& g);

/// Exact twin-free clique number via the true-twin quotient graph.
CliqueResult twin_free_clique_number(const SimpleGraph& g);
/// Direct subset enumeration; intended as a cross-check for n <= 20.
CliqueResult twin_free_clique_brute(const SimpleGraph& g);

bool is_overfull(const SimpleGraph& g);

/// Sufficient condition for Class 1: every maximum-degree vertex has a
/// neighbor v with Delta - deg(v) + 2 > (number of maximum-degree vertices).
bool class1_sufficient(const SimpleGraph& g);

enum class EdgeClass { Class1, Class2, Undetermined };

std::string to_string(EdgeClass c);

struct EdgeClassResult {
    EdgeClass cls = EdgeClass::Undetermined;
    int chi_prime = -1;                     // Delta or Delta+1 when determined
    std::vector<std::pair<int, int>> witness_edges;
    std::vector<int> witness_colors;        // parallel to witness_edges when present
    bool universal_vertex_path = false;
    bool class1_criterion = false;
    bool overfull = false;
    long nodes = 0;
};

/// Decision cascade: universal-vertex/overfull reduction, then the Class 1
/// sufficient criterion, then overfull, then exhaustive Delta-edge-coloring
/// search within node_budget.
EdgeClassResult edge_chromatic_class(const SimpleGraph& g, long node_budget = kDefaultNodeBudget);

/// Backtracking k-edge-coloring: 1 = found (colors filled), 0 = impossible,
/// -1 = node budget exhausted. Edges tried most-constrained-first when
/// `by_degree`, in natural order otherwise.
int edge_color_search(const SimpleGraph& g, int k, std::vector<std::pair<int, int>>& edges,
                      std::vector<int>& colors, long node_budget, long& nodes,
                      bool by_degree = true);

// witness validation, independent of the solvers above
bool validate_clique(const SimpleGraph& g, const std::vector<int>& verts);
bool validate_coloring(const SimpleGraph& g, const std::vector<int>& colors, int k);
bool validate_edge_coloring(const SimpleGraph& g, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>& colors, int k);
bool validate_twin_free_clique(const SimpleGraph& g, const std::vector<int>& verts);

struct InvariantReport {
    int omega = 0;
    std::vector<int> omega_witness;
    int chi = 0;
    std::vector<int> chi_witness;
    int twin_free_omega = 0;
    std::vector<int> twin_free_witness;
    int delta = 0;
    EdgeClassResult edge;
    long clique_nodes = 0, coloring_nodes = 0, twin_nodes = 0;
};

InvariantReport compute_invariants(const SimpleGraph& g, long node_budget = kDefaultNodeBudget);

} // namespace egr

#endif
