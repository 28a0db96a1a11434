#include "egr/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "egr/errors.hpp"

namespace egr {

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

long SimpleGraph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = adj[std::size_t(u)].next_set(std::size_t(u) + 1); v >= 0;
             v = adj[std::size_t(u)].next_set(std::size_t(v) + 1))
            out.emplace_back(u, v);
    return out;
}

SimpleGraph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw InvalidParameter("edge list must start with 'n m'");
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw InvalidParameter("truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InvalidParameter("bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(const SimpleGraph& g, std::ostream& out) {
    out << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> annihilating_vertices(const IdealLattice& lattice) {
    std::vector<int> out;
    for (int id = 0; id < lattice.size(); ++id) {
        if (id == lattice.zero_id()) continue;
        if (lattice.annihilator(id) != lattice.zero_id()) out.push_back(id);
    }
    return out;
}

EGGraph build_eg(const IdealLattice& lattice) {
    EGGraph eg;
    eg.vertex_ideals = annihilating_vertices(lattice);
    const int n = int(eg.vertex_ideals.size());
    eg.graph = SimpleGraph(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            int prod = lattice.product(eg.vertex_ideals[std::size_t(i)],
                                       eg.vertex_ideals[std::size_t(j)]);
            if (lattice.is_essential(lattice.annihilator(prod)))
                eg.graph.add_edge(i, j);
        }
    }
    return eg;
}

TwinPartition true_twin_partition(const SimpleGraph& g) {
    TwinPartition tp;
    tp.class_of.assign(std::size_t(g.n), -1);
    for (int v = 0; v < g.n; ++v) {
        if (tp.class_of[std::size_t(v)] >= 0) continue;
        Bitset closed_v = g.adj[std::size_t(v)];
        closed_v.set(std::size_t(v));
        int cid = int(tp.classes.size());
        tp.classes.emplace_back();
        for (int u = v; u < g.n; ++u) {
            if (tp.class_of[std::size_t(u)] >= 0) continue;
            Bitset closed_u = g.adj[std::size_t(u)];
            closed_u.set(std::size_t(u));
            if (closed_u == closed_v) {
                tp.class_of[std::size_t(u)] = cid;
                tp.classes.back().push_back(u);
            }
        }
    }
    return tp;
}

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> color(std::size_t(g.n), -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[std::size_t(s)] >= 0) continue;
        color[std::size_t(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.adj[std::size_t(u)].for_each([&](int v) {
                if (color[std::size_t(v)] < 0) {
                    color[std::size_t(v)] = 1 - color[std::size_t(u)];
                    stack.push_back(v);
                }
            });
        }
    }
    for (auto [u, v] : g.edges())
        if (color[std::size_t(u)] == color[std::size_t(v)]) return false;
    return true;
}

std::string Shape::to_string() const {
    switch (tag) {
        case Tag::Empty: return "Empty";
        case Tag::Complete: return "Complete(" + std::to_string(n) + ")";
        case Tag::Star: return "Star(" + std::to_string(n) + ")";
        case Tag::CompleteBipartite:
            return "CompleteBipartite(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Tag::Other: return "Other";
    }
    return "Other";
}

Shape detect_shape(const SimpleGraph& g) {
    Shape s;
    if (g.n == 0) {
        s.tag = Shape::Tag::Empty;
        return s;
    }
    bool complete = true;
    for (int v = 0; v < g.n && complete; ++v)
        if (g.degree(v) != g.n - 1) complete = false;
    if (complete) {
        s.tag = Shape::Tag::Complete;
        s.n = g.n;
        return s;
    }
    // complete bipartite: 2-colorable, connected, every cross pair adjacent
    std::vector<int> side(std::size_t(g.n), -1);
    side[0] = 0;
    std::vector<int> stack{0};
    int reached = 1;
    bool ok = true;
    while (!stack.empty() && ok) {
        int u = stack.back();
        stack.pop_back();
        g.adj[std::size_t(u)].for_each([&](int v) {
            if (side[std::size_t(v)] < 0) {
                side[std::size_t(v)] = 1 - side[std::size_t(u)];
                stack.push_back(v);
                ++reached;
            } else if (side[std::size_t(v)] == side[std::size_t(u)]) {
                ok = false;
            }
        });
    }
    if (ok && reached == g.n) {
        int a = 0, b = 0;
        for (int v = 0; v < g.n; ++v) (side[std::size_t(v)] == 0 ? a : b)++;
        bool full = true;
        for (int u = 0; u < g.n && full; ++u)
            for (int v = 0; v < g.n && full; ++v)
                if (side[std::size_t(u)] != side[std::size_t(v)] && !g.has_edge(u, v)) full = false;
        if (full && a > 0 && b > 0) {
            int lo = std::min(a, b), hi = std::max(a, b);
            if (lo == 1) {
                s.tag = Shape::Tag::Star;
                s.n = hi;
            } else {
                s.tag = Shape::Tag::CompleteBipartite;
                s.m = lo;
                s.n = hi;
            }
            return s;
        }
    }
    s.tag = Shape::Tag::Other;
    return s;
}

std::string to_dot(const EGGraph& g, const IdealLattice& lattice, bool hash_labels) {
    std::ostringstream os;
    os << "graph eg {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        int id = g.vertex_ideals[std::size_t(v)];
        std::string lbl = hash_labels
                              ? std::to_string(lattice.ideal(id).members.hash())
                              : lattice.label(id);
        os << "  v" << v << " [label=\"" << lbl << "\"];\n";
    }
    for (auto [u, v] : g.graph.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace egr
