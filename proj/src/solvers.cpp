#include "egr/solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace egr {

namespace {

// ---- maximum clique branch and bound ----

class CliqueSolver {
public:
    explicit CliqueSolver(const SimpleGraph& g) : g_(g) {
        order_.resize(std::size_t(g.n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            if (da != db) return da > db;
            return a < b;
        });
    }

    CliqueResult solve() {
        std::vector<int> current;
        expand(order_, current);
        std::sort(best_set_.begin(), best_set_.end());
        return {int(best_set_.size()), best_set_, nodes_};
    }

private:
    // greedy coloring of cand in the given order; returns per-vertex bound
    std::vector<int> color_bounds(const std::vector<int>& cand) const {
        std::vector<int> bound(cand.size());
        std::vector<Bitset> classes;  // vertices per color class
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g_.adj[std::size_t(v)])) ++c;
            if (c == classes.size()) classes.emplace_back(std::size_t(g_.n));
            classes[c].set(std::size_t(v));
            bound[i] = int(c) + 1;
        }
        return bound;
    }

    void expand(const std::vector<int>& cand, std::vector<int>& current) {
        ++nodes_;
        if (cand.empty()) {
            if (int(current.size()) > int(best_set_.size())) best_set_ = current;
            return;
        }
        // reorder candidates by greedy color class so bounds are nondecreasing
        std::vector<int> ordered = cand;
        auto bound = color_bounds(ordered);
        std::vector<std::size_t> idx(ordered.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return bound[a] < bound[b]; });

        for (std::size_t k = idx.size(); k-- > 0;) {
            int v = ordered[idx[k]];
            if (int(current.size()) + bound[idx[k]] <= int(best_set_.size())) return;
            current.push_back(v);
            std::vector<int> next;
            for (std::size_t j = 0; j < k; ++j) {
                int u = ordered[idx[j]];
                if (g_.adj[std::size_t(v)].test(std::size_t(u))) next.push_back(u);
            }
            expand(next, current);
            current.pop_back();
        }
    }

    const SimpleGraph& g_;
    std::vector<int> order_;
    std::vector<int> best_set_;
    long nodes_ = 0;
};

// ---- exact k-coloring (DSATUR-style backtracking) ----

class KColorSolver {
public:
    KColorSolver(const SimpleGraph& g, int k) : g_(g), k_(k) {}

    bool solve(std::vector<int>& out, long& nodes) {
        colors_.assign(std::size_t(g_.n), -1);
        bool ok = recurse(0, 0);
        nodes += nodes_;
        if (ok) out = colors_;
        return ok;
    }

private:
    bool recurse(int assigned, int max_used) {
        ++nodes_;
        if (assigned == g_.n) return true;
        // pick uncolored vertex with maximum saturation, ties by degree then id
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (colors_[std::size_t(v)] >= 0) continue;
            uint64_t mask = 0;
            g_.adj[std::size_t(v)].for_each([&](int u) {
                if (colors_[std::size_t(u)] >= 0) mask |= uint64_t{1} << colors_[std::size_t(u)];
            });
            int sat = std::popcount(mask);
            int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t used = 0;
        g_.adj[std::size_t(pick)].for_each([&](int u) {
            if (colors_[std::size_t(u)] >= 0) used |= uint64_t{1} << colors_[std::size_t(u)];
        });
        int limit = std::min(k_, max_used + 1);   // fresh colors are interchangeable
        for (int c = 0; c < limit; ++c) {
            if (used & (uint64_t{1} << c)) continue;
            colors_[std::size_t(pick)] = c;
            if (recurse(assigned + 1, std::max(max_used, c + 1))) return true;
            colors_[std::size_t(pick)] = -1;
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::vector<int> colors_;
    long nodes_ = 0;
};

std::vector<int> dsatur_greedy(const SimpleGraph& g, int& ncolors) {
    std::vector<int> colors(std::size_t(g.n), -1);
    ncolors = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colors[std::size_t(v)] >= 0) continue;
            uint64_t mask = 0;
            g.adj[std::size_t(v)].for_each([&](int u) {
                if (colors[std::size_t(u)] >= 0) mask |= uint64_t{1} << colors[std::size_t(u)];
            });
            int sat = std::popcount(mask);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t used = 0;
        g.adj[std::size_t(pick)].for_each([&](int u) {
            if (colors[std::size_t(u)] >= 0) used |= uint64_t{1} << colors[std::size_t(u)];
        });
        int c = 0;
        while (used & (uint64_t{1} << c)) ++c;
        colors[std::size_t(pick)] = c;
        ncolors = std::max(ncolors, c + 1);
    }
    return colors;
}

} // namespace

CliqueResult clique_number(const SimpleGraph& g) {
    if (g.n == 0) return {};
    return CliqueSolver(g).solve();
}

ColoringResult chromatic_number(const SimpleGraph& g) {
    ColoringResult r;
    if (g.n == 0) return r;
    int lb = clique_number(g).size;
    int ub = 0;
    std::vector<int> best = dsatur_greedy(g, ub);
    for (int k = lb; k < ub; ++k) {
        std::vector<int> attempt;
        if (KColorSolver(g, k).solve(attempt, r.nodes)) {
            r.chi = k;
            r.colors = attempt;
            return r;
        }
    }
    r.chi = ub;
    r.colors = best;
    return r;
}

CliqueResult twin_free_clique_number(const SimpleGraph& g) {
    TwinPartition tp = true_twin_partition(g);
    const int q = int(tp.classes.size());
    SimpleGraph quotient(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < i; ++j)
            if (g.has_edge(tp.classes[std::size_t(i)][0], tp.classes[std::size_t(j)][0]))
                quotient.add_edge(i, j);
    CliqueResult qr = clique_number(quotient);
    CliqueResult out;
    out.size = qr.size;
    out.nodes = qr.nodes;
    for (int c : qr.vertices) out.vertices.push_back(tp.classes[std::size_t(c)][0]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

CliqueResult twin_free_clique_brute(const SimpleGraph& g) {
    TwinPartition tp = true_twin_partition(g);
    CliqueResult best;
    const int n = g.n;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t{1} << v)) verts.push_back(v);
        if (int(verts.size()) <= best.size) continue;
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i)
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (!g.has_edge(verts[i], verts[j])) ok = false;
                if (tp.class_of[std::size_t(verts[i])] == tp.class_of[std::size_t(verts[j])]) ok = false;
            }
        if (ok) {
            best.size = int(verts.size());
            best.vertices = verts;
        }
    }
    return best;
}

bool is_overfull(const SimpleGraph& g) {
    return g.edge_count() > long(g.n / 2) * g.max_degree();
}

bool class1_sufficient(const SimpleGraph& g) {
    const int delta = g.max_degree();
    int max_count = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == delta) ++max_count;
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != delta) continue;
        bool found = false;
        for (int v = g.adj[std::size_t(u)].first_set(); v >= 0;
             v = g.adj[std::size_t(u)].next_set(std::size_t(v) + 1))
            if (delta - g.degree(v) + 2 > max_count) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

int edge_color_search(const SimpleGraph& g, int k, std::vector<std::pair<int, int>>& edges,
                      std::vector<int>& colors, long node_budget, long& nodes, bool by_degree) {
    edges = g.edges();
    if (by_degree) {
        std::stable_sort(edges.begin(), edges.end(), [&](auto a, auto b) {
            return g.degree(a.first) + g.degree(a.second) >
                   g.degree(b.first) + g.degree(b.second);
        });
    }
    const std::size_t m = edges.size();
    colors.assign(m, -1);
    if (m == 0) return 1;
    if (k <= 0) return 0;
    if (k > 62) k = 62;  // avail masks are 64-bit; never needed at desk scale

    std::vector<uint64_t> avail(std::size_t(g.n), (k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1));
    std::vector<int> uncolored(std::size_t(g.n), 0);
    for (auto [u, v] : edges) {
        ++uncolored[std::size_t(u)];
        ++uncolored[std::size_t(v)];
    }

    long local_nodes = 0;

    std::function<int(std::size_t, int)> rec = [&](std::size_t e, int max_used) -> int {
        if (++local_nodes > node_budget) return -1;
        if (e == m) return 1;
        auto [u, v] = edges[e];
        uint64_t both = avail[std::size_t(u)] & avail[std::size_t(v)];
        uint64_t limit_mask = (max_used + 1 >= 64) ? ~uint64_t{0}
                                                   : (uint64_t{1} << (max_used + 1)) - 1;
        both &= limit_mask;   // fresh color classes are interchangeable
        while (both) {
            int c = std::countr_zero(both);
            both &= both - 1;
            avail[std::size_t(u)] &= ~(uint64_t{1} << c);
            avail[std::size_t(v)] &= ~(uint64_t{1} << c);
            --uncolored[std::size_t(u)];
            --uncolored[std::size_t(v)];
            bool feasible = uncolored[std::size_t(u)] <= std::popcount(avail[std::size_t(u)]) &&
                            uncolored[std::size_t(v)] <= std::popcount(avail[std::size_t(v)]);
            int res = 0;
            if (feasible) {
                colors[e] = c;
                res = rec(e + 1, std::max(max_used, c + 1));
            }
            avail[std::size_t(u)] |= uint64_t{1} << c;
            avail[std::size_t(v)] |= uint64_t{1} << c;
            ++uncolored[std::size_t(u)];
            ++uncolored[std::size_t(v)];
            if (res != 0) {
                if (res < 0) colors[e] = -1;
                return res;
            }
            colors[e] = -1;
        }
        return 0;
    };

    int res = rec(0, 0);
    nodes += local_nodes;
    return res;
}

std::string to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Class1: return "Class1";
        case EdgeClass::Class2: return "Class2";
        case EdgeClass::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

EdgeClassResult edge_chromatic_class(const SimpleGraph& g, long node_budget) {
    EdgeClassResult r;
    const int delta = g.max_degree();
    r.overfull = is_overfull(g);

    bool universal = false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) { universal = true; break; }

    if (universal) {
        // Plantholt: with a universal vertex, Class 2 iff overfull
        r.universal_vertex_path = true;
        r.cls = r.overfull ? EdgeClass::Class2 : EdgeClass::Class1;
        r.chi_prime = r.overfull ? delta + 1 : delta;
        return r;
    }
    if (class1_sufficient(g)) {
        r.class1_criterion = true;
        r.cls = EdgeClass::Class1;
        r.chi_prime = delta;
        return r;
    }
    if (r.overfull) {
        r.cls = EdgeClass::Class2;
        r.chi_prime = delta + 1;
        return r;
    }
    // vertex-major edge order keeps consecutive edges sharing endpoints, which
    // propagates the availability masks much harder than a degree sort
    int res = edge_color_search(g, delta, r.witness_edges, r.witness_colors, node_budget / 2,
                                r.nodes, false);
    if (res == -1)
        res = edge_color_search(g, delta, r.witness_edges, r.witness_colors,
                                node_budget - node_budget / 2, r.nodes, true);
    if (res == 1) {
        r.cls = EdgeClass::Class1;
        r.chi_prime = delta;
    } else if (res == 0) {
        r.cls = EdgeClass::Class2;
        r.chi_prime = delta + 1;
        r.witness_edges.clear();
        r.witness_colors.clear();
    } else {
        r.cls = EdgeClass::Undetermined;
        r.chi_prime = -1;
        r.witness_edges.clear();
        r.witness_colors.clear();
    }
    return r;
}

bool validate_clique(const SimpleGraph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.n) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    }
    return true;
}

bool validate_coloring(const SimpleGraph& g, const std::vector<int>& colors, int k) {
    if (int(colors.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (colors[std::size_t(v)] < 0 || colors[std::size_t(v)] >= k) return false;
    for (auto [u, v] : g.edges())
        if (colors[std::size_t(u)] == colors[std::size_t(v)]) return false;
    return true;
}

bool validate_edge_coloring(const SimpleGraph& g, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>& colors, int k) {
    if (edges.size() != colors.size()) return false;
    if (long(edges.size()) != g.edge_count()) return false;
    std::vector<uint64_t> used(std::size_t(g.n), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int c = colors[i];
        if (!g.has_edge(u, v) || c < 0 || c >= k) return false;
        uint64_t bit = uint64_t{1} << c;
        if ((used[std::size_t(u)] & bit) || (used[std::size_t(v)] & bit)) return false;
        used[std::size_t(u)] |= bit;
        used[std::size_t(v)] |= bit;
    }
    return true;
}

bool validate_twin_free_clique(const SimpleGraph& g, const std::vector<int>& verts) {
    if (!validate_clique(g, verts)) return false;
    TwinPartition tp = true_twin_partition(g);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (tp.class_of[std::size_t(verts[i])] == tp.class_of[std::size_t(verts[j])])
                return false;
    return true;
}

InvariantReport compute_invariants(const SimpleGraph& g, long node_budget) {
    InvariantReport rep;
    CliqueResult cq = clique_number(g);
    rep.omega = cq.size;
    rep.omega_witness = cq.vertices;
    rep.clique_nodes = cq.nodes;

    ColoringResult col = chromatic_number(g);
    rep.chi = col.chi;
    rep.chi_witness = col.colors;
    rep.coloring_nodes = col.nodes;

    CliqueResult tf = twin_free_clique_number(g);
    rep.twin_free_omega = tf.size;
    rep.twin_free_witness = tf.vertices;
    rep.twin_nodes = tf.nodes;

    rep.delta = g.max_degree();
    rep.edge = edge_chromatic_class(g, node_budget);
    return rep;
}

} // namespace egr
