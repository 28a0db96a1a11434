#include <doctest.h>

#include <set>

#include "egr/ring.hpp"

using namespace egr;

TEST_CASE("parser accepts the grammar") {
    RingSpec s = parse_ring_spec("Z/36");
    CHECK(s.kind == RingSpec::Kind::ZMod);
    CHECK(s.modulus == 36);

    s = parse_ring_spec("Z/9 x Z/25");
    CHECK(s.kind == RingSpec::Kind::Product);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].modulus == 9);
    CHECK(s.factors[1].modulus == 25);
    CHECK(s.text() == "Z/9 x Z/25");

    s = parse_ring_spec("GF(9)");
    CHECK(s.kind == RingSpec::Kind::GaloisField);

    s = parse_ring_spec("Z/2[x]/(x^2+x+1)");
    CHECK(s.kind == RingSpec::Kind::QuotientPoly);
    CHECK(s.poly == std::vector<long>{1, 1, 1});

    s = parse_ring_spec("Z/3[x]/(x^2) x Z/2");
    CHECK(s.kind == RingSpec::Kind::Product);
    CHECK(s.factors[0].kind == RingSpec::Kind::QuotientPoly);
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_ring_spec("GF(6)"), InvalidParameter);
    CHECK_THROWS_AS(parse_ring_spec("Z/1"), InvalidParameter);
    CHECK_THROWS_AS(parse_ring_spec("Z/4[x]/(2x^2+1)"), InvalidParameter);  // not monic
    CHECK_THROWS_AS(parse_ring_spec("Q/4"), SyntaxError);
    CHECK_THROWS_AS(parse_ring_spec("Z/6 x"), SyntaxError);
    CHECK_THROWS_AS(parse_ring_spec("Z/6 junk"), SyntaxError);
    CHECK_THROWS_AS(parse_ring_spec(""), SyntaxError);
}

TEST_CASE("Z/n arithmetic") {
    FiniteRing r = build_ring("Z/6");
    CHECK(r.order() == 6);
    CHECK(r.one() == 1);
    CHECK(r.mul(2, 3) == 0);
    CHECK(r.add(4, 5) == 3);
    CHECK(r.neg(2) == 4);
}

TEST_CASE("units in Z/12") {
    FiniteRing r = build_ring("Z/12");
    CHECK(r.is_unit(5));
    CHECK_FALSE(r.is_unit(4));
    CHECK_FALSE(r.is_unit(0));
}

static void check_ring_axioms(const FiniteRing& r) {
    const int n = r.order();
    for (int a = 0; a < n; ++a) {
        CHECK(r.mul(a, r.one()) == a);
        CHECK(r.mul(a, 0) == 0);
        for (int b = 0; b < n; ++b) {
            CHECK(r.mul(a, b) == r.mul(b, a));
            for (int c = 0; c < n; ++c) {
                CHECK(r.mul(a, r.mul(b, c)) == r.mul(r.mul(a, b), c));
                CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
            }
        }
    }
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
    for (const char* spec : {"Z/8", "GF(9)", "Z/4 x Z/3", "Z/2[x]/(x^3)", "Z/6[x]/(x^2+1)"})
        check_ring_axioms(build_ring(spec));
}

TEST_CASE("GF(q) is a field with cyclic multiplicative group") {
    for (long q : {4L, 8L, 9L, 25L, 27L}) {
        FiniteRing f = build_ring("GF(" + std::to_string(q) + ")");
        CHECK(f.order() == q);
        for (int a = 1; a < f.order(); ++a) CHECK(f.is_unit(a));
        // some element has multiplicative order q-1
        bool found = false;
        for (int a = 1; a < f.order() && !found; ++a) {
            int t = a, ord = 1;
            while (t != f.one()) { t = f.mul(t, a); ++ord; }
            if (ord == q - 1) found = true;
        }
        CHECK(found);
    }
    FiniteRing f9 = build_ring("GF(9)");
    CHECK(f9.characteristic() == 3);
}

TEST_CASE("CRT: Z/mn isomorphic to Z/m x Z/n for coprime m, n") {
    for (auto [m, n] : {std::pair{4, 9}, {2, 3}, {8, 27}, {5, 12}}) {
        FiniteRing big = build_ring("Z/" + std::to_string(m * n));
        FiniteRing prod = build_ring("Z/" + std::to_string(m) + " x Z/" + std::to_string(n));
        auto phi = [&](int a) { return prod.index_of({a % m, a % n}); };
        // phi is a bijective ring homomorphism
        std::set<int> image;
        for (int a = 0; a < big.order(); ++a) image.insert(phi(a));
        CHECK(int(image.size()) == big.order());
        CHECK(phi(big.one()) == prod.one());
        for (int a = 0; a < big.order(); ++a)
            for (int b = 0; b < big.order(); ++b) {
                CHECK(phi(big.add(a, b)) == prod.add(phi(a), phi(b)));
                CHECK(phi(big.mul(a, b)) == prod.mul(phi(a), phi(b)));
            }
    }
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(build_ring("Z/70000"), OrderCapExceeded);
    CHECK_THROWS_AS(build_ring("Z/300 x Z/300"), OrderCapExceeded);
    CHECK_NOTHROW(build_ring("Z/70000", 100000));
}

TEST_CASE("deterministic indexing") {
    FiniteRing a = build_ring("Z/4 x Z/9");
    FiniteRing b = build_ring("Z/4 x Z/9");
    CHECK(a.one() == b.one());
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y) CHECK(a.mul(x, y) == b.mul(x, y));
}

TEST_CASE("first irreducible polynomial is deterministic and irreducible") {
    // x^2+x+1 is the only monic irreducible quadratic over GF(2)
    CHECK(first_irreducible_poly(2, 2) == std::vector<long>{1, 1, 1});
    // over GF(3): x^2+1 is irreducible and lexicographically first
    CHECK(first_irreducible_poly(3, 2) == std::vector<long>{1, 0, 1});
}
