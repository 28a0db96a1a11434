#include <doctest.h>

#include <random>

#include "egr/harness.hpp"
#include "egr/solvers.hpp"
#include "oracles.hpp"

using namespace egr;

namespace {

SimpleGraph eg_of(const char* spec) {
    return analyze_ring(spec).eg.graph;
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("clique number") {
    CHECK(clique_number(SimpleGraph(0)).size == 0);
    CHECK(clique_number(eg_of("Z/36")).size == 5);
    CHECK(clique_number(eg_of("Z/12")).size == 3);
    CliqueResult r = clique_number(eg_of("Z/12"));
    CHECK(validate_clique(eg_of("Z/12"), r.vertices));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(SimpleGraph(0)).chi == 0);
    CHECK(chromatic_number(eg_of("Z/36")).chi == 5);
    CHECK(chromatic_number(cycle(5)).chi == 3);
    CHECK(chromatic_number(eg_of("Z/8")).chi == 2);
    ColoringResult c = chromatic_number(cycle(5));
    CHECK(validate_coloring(cycle(5), c.colors, c.chi));
}

TEST_CASE("twin-free clique number") {
    CHECK(twin_free_clique_number(eg_of("Z/2 x Z/2")).size == 1);
    CHECK(twin_free_clique_number(eg_of("Z/30")).size == 3);
    // in Z/4 x Z/3 every ideal supported on the first factor is a universal
    // vertex, so those vertices are mutual twins and at most one is usable
    CHECK(twin_free_clique_number(eg_of("Z/4 x Z/3")).size == 2);
    CHECK(twin_free_clique_number(eg_of("Z/4 x Z/9")).size == 3);
    auto tf = twin_free_clique_number(eg_of("Z/30"));
    CHECK(validate_twin_free_clique(eg_of("Z/30"), tf.vertices));
}

TEST_CASE("overfull") {
    SimpleGraph eg925 = eg_of("Z/9 x Z/25");
    CHECK(eg925.n == 7);
    CHECK(eg925.edge_count() == 19);
    CHECK(eg925.max_degree() == 6);
    CHECK(is_overfull(eg925));       // 19 > 3*6

    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    CHECK_FALSE(is_overfull(k2));    // 1 > 1 fails

    CHECK_FALSE(is_overfull(eg_of("Z/30")));
}

TEST_CASE("class 1 sufficient criterion") {
    CHECK(class1_sufficient(eg_of("Z/2 x Z/3 x Z/5")));

    SimpleGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK_FALSE(class1_sufficient(k3));   // 2-2+2 = 2, not > 3

    SimpleGraph star(4);
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    CHECK(class1_sufficient(star));       // 3-1+2 = 4 > 1
}

TEST_CASE("edge chromatic class cascade") {
    EdgeClassResult r = edge_chromatic_class(eg_of("Z/9 x Z/25"));
    CHECK(r.cls == EdgeClass::Class2);
    CHECK(r.chi_prime == 7);
    CHECK(r.universal_vertex_path);
    CHECK(r.overfull);

    r = edge_chromatic_class(eg_of("Z/2 x Z/3 x Z/5"));
    CHECK(r.cls == EdgeClass::Class1);
    CHECK(r.chi_prime == 3);

    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    r = edge_chromatic_class(k2);
    CHECK(r.cls == EdgeClass::Class1);
    CHECK(r.chi_prime == 1);

    // odd cycle reaches the exhaustive search and is Class 2
    r = edge_chromatic_class(cycle(5));
    CHECK(r.cls == EdgeClass::Class2);
    CHECK(r.chi_prime == 3);

    // even cycle is Class 1 with an edge-coloring witness
    r = edge_chromatic_class(cycle(6));
    CHECK(r.cls == EdgeClass::Class1);
    CHECK(validate_edge_coloring(cycle(6), r.witness_edges, r.witness_colors, 2));

    // tiny budget surfaces Undetermined rather than a wrong answer
    SimpleGraph petersen(10);
    int outer[5] = {0, 1, 2, 3, 4}, inner[5] = {5, 6, 7, 8, 9};
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(outer[i], outer[(i + 1) % 5]);
        petersen.add_edge(inner[i], inner[(i + 2) % 5]);
        petersen.add_edge(outer[i], inner[i]);
    }
    r = edge_chromatic_class(petersen, 1);
    CHECK(r.cls == EdgeClass::Undetermined);
    r = edge_chromatic_class(petersen);
    CHECK(r.cls == EdgeClass::Class2);   // classical
}

TEST_CASE("solvers agree with brute-force oracles on random graphs") {
    std::mt19937 rng(12345);
    const double probs[3] = {0.2, 0.5, 0.8};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 10);
        SimpleGraph g = random_graph(rng, n, probs[trial % 3]);
        CAPTURE(trial);
        CHECK(clique_number(g).size == oracle::clique_brute(g));
        CHECK(chromatic_number(g).chi == oracle::chromatic_brute(g));
        CHECK(twin_free_clique_number(g).size == oracle::twin_free_brute(g));
        EdgeClassResult ec = edge_chromatic_class(g);
        REQUIRE(ec.cls != EdgeClass::Undetermined);
        CHECK((ec.cls == EdgeClass::Class1) == oracle::class1_brute(g));
    }
}

TEST_CASE("twin-free quotient agrees with direct enumeration on corpus graphs") {
    for (const char* spec : {"Z/8", "Z/12", "Z/30", "Z/36", "Z/2 x Z/2", "Z/4 x Z/9"}) {
        SimpleGraph g = eg_of(spec);
        if (g.n > 20) continue;
        CHECK(twin_free_clique_number(g).size == twin_free_clique_brute(g).size);
    }
}

TEST_CASE("adding an edge never decreases omega or chi") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = random_graph(rng, 8, 0.4);
        int u = int(rng() % 8), v = int(rng() % 8);
        if (u == v || g.has_edge(u, v)) continue;
        SimpleGraph h = g;
        h.add_edge(u, v);
        CHECK(clique_number(h).size >= clique_number(g).size);
        CHECK(chromatic_number(h).chi >= chromatic_number(g).chi);
    }
}

TEST_CASE("deterministic witnesses") {
    SimpleGraph g = eg_of("Z/36");
    auto a = clique_number(g), b = clique_number(g);
    CHECK(a.vertices == b.vertices);
    auto ca = chromatic_number(g), cb = chromatic_number(g);
    CHECK(ca.colors == cb.colors);
}

TEST_CASE("omega equals chi on corpus graphs (weak perfectness)") {
    for (const char* spec : {"Z/6", "Z/8", "Z/12", "Z/30", "Z/36", "Z/72", "Z/4 x Z/9",
                             "Z/9 x Z/25", "GF(4) x GF(9)"}) {
        SimpleGraph g = eg_of(spec);
        CHECK(clique_number(g).size == chromatic_number(g).chi);
    }
}
