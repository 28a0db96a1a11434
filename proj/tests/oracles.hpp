// Naive exhaustive solvers used only as test oracles. Kept deliberately
// independent of the production search code paths.
#ifndef EGR_TEST_ORACLES_HPP
#define EGR_TEST_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "egr/graph.hpp"

namespace egr::oracle {

// maximum clique by subset enumeration, n <= 20
inline int clique_brute(const SimpleGraph& g) {
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << g.n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (mask & (uint32_t{1} << v)) verts.push_back(v);
        if (int(verts.size()) <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!g.has_edge(verts[i], verts[j])) { ok = false; break; }
        if (ok) best = int(verts.size());
    }
    return best;
}

inline bool k_colorable_brute(const SimpleGraph& g, int k, std::vector<int>& colors, int v) {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) && colors[std::size_t(u)] == c) { ok = false; break; }
        if (!ok) continue;
        colors[std::size_t(v)] = c;
        if (k_colorable_brute(g, k, colors, v + 1)) return true;
    }
    return false;
}

// chromatic number by plain vertex-order backtracking
inline int chromatic_brute(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> colors(std::size_t(g.n), -1);
        if (k_colorable_brute(g, k, colors, 0)) return k;
    }
}

// twin-free clique number by subset enumeration, n <= 20
inline int twin_free_brute(const SimpleGraph& g) {
    TwinPartition tp = true_twin_partition(g);
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << g.n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (mask & (uint32_t{1} << v)) verts.push_back(v);
        if (int(verts.size()) <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                if (!g.has_edge(verts[i], verts[j]) ||
                    tp.class_of[std::size_t(verts[i])] == tp.class_of[std::size_t(verts[j])]) {
                    ok = false;
                    break;
                }
            }
        if (ok) best = int(verts.size());
    }
    return best;
}

// k-edge-colorability by plain edge-order backtracking (natural edge order)
inline bool k_edge_colorable_brute(const SimpleGraph& g, int k) {
    auto edges = g.edges();
    std::vector<uint64_t> used(std::size_t(g.n), 0);
    // prune: a vertex with more uncolored incident edges than free colors is stuck
    std::vector<int> uncolored(std::size_t(g.n), 0);
    for (auto [u, v] : edges) {
        ++uncolored[std::size_t(u)];
        ++uncolored[std::size_t(v)];
    }
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = i;

    std::function<bool(std::size_t, int)> rec = [&](std::size_t e, int max_used) -> bool {
        if (e == edges.size()) return true;
        auto [u, v] = edges[order[e]];
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            uint64_t bit = uint64_t{1} << c;
            if ((used[std::size_t(u)] & bit) || (used[std::size_t(v)] & bit)) continue;
            used[std::size_t(u)] |= bit;
            used[std::size_t(v)] |= bit;
            --uncolored[std::size_t(u)];
            --uncolored[std::size_t(v)];
            auto free_colors = [&](int w) {
                return k - std::popcount(used[std::size_t(w)]);
            };
            bool feasible = uncolored[std::size_t(u)] <= free_colors(u) &&
                            uncolored[std::size_t(v)] <= free_colors(v);
            bool done = feasible && rec(e + 1, std::max(max_used, c + 1));
            used[std::size_t(u)] &= ~bit;
            used[std::size_t(v)] &= ~bit;
            ++uncolored[std::size_t(u)];
            ++uncolored[std::size_t(v)];
            if (done) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// edge chromatic class via Vizing's dichotomy: Class 1 iff Delta-edge-colorable
inline bool class1_brute(const SimpleGraph& g) {
    return k_edge_colorable_brute(g, g.max_degree());
}

} // namespace egr::oracle

#endif
