#ifndef EGR_GRAPH_HPP
#define EGR_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "egr/bitset.hpp"
#include "egr/lattice.hpp"

namespace egr {

/// Plain undirected graph on vertices 0..n-1 with dense bitset adjacency.
/// Shared by the essential annihilating-ideal graph and synthetic inputs.
struct SimpleGraph {
    int n = 0;
    std::vector<Bitset> adj;

    explicit SimpleGraph(int nverts = 0) : n(nverts), adj(std::size_t(nverts), Bitset(std::size_t(nverts))) {}

    void add_edge(int u, int v) {
        adj[std::size_t(u)].set(std::size_t(v));
        adj[std::size_t(v)].set(std::size_t(u));
    }
    bool has_edge(int u, int v) const { return adj[std::size_t(u)].test(std::size_t(v)); }
    int degree(int v) const { return int(adj[std::size_t(v)].count()); }
    int max_degree() const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
};

/// Edge-list text format: "n m" header then one "u v" line per edge, 0-based.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(const SimpleGraph& g, std::ostream& out);

/// The essential annihilating-ideal graph of a ring: vertices are the nonzero
/// ideals with nonzero annihilator; I–J is an edge iff Ann(IJ) is essential.
struct EGGraph {
    std::vector<int> vertex_ideals;  // lattice canonical ids, canonical order
    SimpleGraph graph;

    int vertex_count() const { return graph.n; }
    long edge_count() const { return graph.edge_count(); }
};

std::vector<int> annihilating_vertices(const IdealLattice& lattice);
EGGraph build_eg(const IdealLattice& lattice);

/// Partition of the vertices by closed neighborhood N[v].
struct TwinPartition {
    std::vector<std::vector<int>> classes;   // each sorted ascending
    std::vector<int> class_of;               // vertex -> class index
};

TwinPartition true_twin_partition(const SimpleGraph& g);

struct Shape {
    enum class Tag { Empty, Complete, CompleteBipartite, Star, Other };
    Tag tag = Tag::Other;
    int m = 0, n = 0;   // Complete(n); Star(n) = K_{1,n}; CompleteBipartite(m,n), m <= n

    std::string to_string() const;
};

/// Exact structural match; precedence Empty > Complete > Star > CompleteBipartite > Other.
Shape detect_shape(const SimpleGraph& g);

bool is_bipartite(const SimpleGraph& g);

std::string to_dot(const EGGraph& g, const IdealLattice& lattice, bool hash_labels = false);

} // namespace egr

#endif
