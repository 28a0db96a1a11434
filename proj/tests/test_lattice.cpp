#include <doctest.h>

#include <algorithm>
#include <set>

#include "egr/lattice.hpp"

using namespace egr;

namespace {

std::set<int> members(const IdealLattice& lat, int id) {
    std::set<int> out;
    lat.ideal(id).members.for_each([&](int i) { out.insert(i); });
    return out;
}

} // namespace

TEST_CASE("principal ideals") {
    FiniteRing z12 = build_ring("Z/12");
    CHECK(principal_ideal(z12, 8).to_indices() == std::vector<int>{0, 4, 8});
    CHECK(principal_ideal(z12, 0).to_indices() == std::vector<int>{0});

    FiniteRing gf4 = build_ring("GF(4)");
    CHECK(principal_ideal(gf4, 2).count() == 4);  // nonzero element generates the field
}

TEST_CASE("ideal counts") {
    auto count = [](const char* spec) {
        FiniteRing ring = build_ring(spec);
        return IdealLattice(ring).size();
    };
    CHECK(count("Z/12") == 6);   // one per divisor
    CHECK(count("GF(9)") == 2);
    CHECK(count("Z/2 x Z/2") == 4);
    CHECK(count("Z/30") == 8);
}

TEST_CASE("sum, intersection, product in Z/12") {
    FiniteRing ring = build_ring("Z/12");
    IdealLattice lat(ring);
    int i2 = lat.principal(2), i3 = lat.principal(3), i4 = lat.principal(4), i6 = lat.principal(6);
    CHECK(lat.product(i2, i3) == i6);
    CHECK(lat.sum(i4, i6) == i2);
    CHECK(lat.intersection(i2, lat.unit_id()) == i2);
    CHECK(lat.product(i3, lat.zero_id()) == lat.zero_id());
    CHECK(lat.intersection(i4, i6) == lat.zero_id());
}

TEST_CASE("ideal ops reject foreign bit-vectors") {
    FiniteRing z12 = build_ring("Z/12");
    FiniteRing z8 = build_ring("Z/8");
    CHECK_THROWS_AS(ideal_sum_sets(z12, principal_ideal(z12, 2), principal_ideal(z8, 2)),
                    RingMismatch);
}

TEST_CASE("annihilators in Z/12") {
    FiniteRing ring = build_ring("Z/12");
    IdealLattice lat(ring);
    CHECK(lat.annihilator(lat.principal(4)) == lat.principal(3));
    CHECK(lat.annihilator(lat.unit_id()) == lat.zero_id());
    CHECK(lat.annihilator(lat.zero_id()) == lat.unit_id());
}

TEST_CASE("essentiality in Z/12") {
    FiniteRing ring = build_ring("Z/12");
    IdealLattice lat(ring);
    CHECK(lat.is_essential(lat.principal(2)));
    CHECK(lat.is_essential(lat.unit_id()));
    CHECK_FALSE(lat.is_essential(lat.principal(4)));
    CHECK_FALSE(lat.is_essential(lat.zero_id()));
    // socle of Z/12 is (4)+(6) = (2)
    CHECK(lat.socle_id() == lat.principal(2));
}

TEST_CASE("nilpotency") {
    FiniteRing z8 = build_ring("Z/8");
    IdealLattice l8(z8);
    CHECK(l8.is_nilpotent(l8.principal(2)));
    CHECK(l8.is_nilpotent(l8.zero_id()));

    FiniteRing z12 = build_ring("Z/12");
    IdealLattice l12(z12);
    CHECK_FALSE(l12.is_nilpotent(l12.principal(4)));
}

TEST_CASE("derived structures") {
    FiniteRing z36 = build_ring("Z/36");
    IdealLattice l36(z36);
    CHECK(l36.nilradical_id() == l36.principal(6));
    CHECK(l36.maximal_ideals().size() == 2);
    std::set<int> maxi(l36.maximal_ideals().begin(), l36.maximal_ideals().end());
    CHECK(maxi == std::set<int>{l36.principal(2), l36.principal(3)});

    FiniteRing z30 = build_ring("Z/30");
    IdealLattice l30(z30);
    CHECK(l30.nilradical_id() == l30.zero_id());

    FiniteRing z8 = build_ring("Z/8");
    IdealLattice l8(z8);
    CHECK(l8.socle_id() == l8.principal(4));

    // Z/12: zero divisors are the non-units
    FiniteRing z12 = build_ring("Z/12");
    IdealLattice l12(z12);
    CHECK(l12.zero_divisors().to_indices() == std::vector<int>{0, 2, 3, 4, 6, 8, 9, 10});
}

// lemma-style invariants over a small corpus
TEST_CASE("nilpotent iff contained in nilradical; essential annihilator iff nilpotent") {
    for (const char* spec : {"Z/12", "Z/16", "Z/30", "Z/36", "Z/4 x Z/9", "Z/2[x]/(x^3)",
                             "Z/3[x]/(x^2) x Z/2"}) {
        FiniteRing ring = build_ring(spec);
        IdealLattice lat(ring);
        const Bitset& nil = lat.ideal(lat.nilradical_id()).members;
        for (int id = 0; id < lat.size(); ++id) {
            bool nilpotent = lat.is_nilpotent(id);
            CHECK(nilpotent == lat.ideal(id).members.subset_of(nil));
            CHECK(nilpotent == lat.is_essential(lat.annihilator(id)));
            CHECK(lat.is_essential(id) == lat.is_essential(id, true));
        }
    }
}

TEST_CASE("primes equal maximal ideals; nilradical is their intersection") {
    for (const char* spec : {"Z/12", "Z/36", "Z/30", "GF(9)", "Z/4 x Z/3", "Z/2 x Z/2 x Z/2"}) {
        FiniteRing ring = build_ring(spec);
        IdealLattice lat(ring);
        std::set<int> primes(lat.minimal_primes().begin(), lat.minimal_primes().end());
        std::set<int> maxi(lat.maximal_ideals().begin(), lat.maximal_ideals().end());
        CHECK(primes == maxi);
        Bitset meet = lat.ideal(lat.unit_id()).members;
        for (int p : lat.minimal_primes()) meet &= lat.ideal(p).members;
        CHECK(lat.id_of(meet) == lat.nilradical_id());
    }
}

TEST_CASE("socle equals the intersection of all essential ideals") {
    for (const char* spec : {"Z/12", "Z/8", "Z/36", "Z/4 x Z/9", "Z/30"}) {
        FiniteRing ring = build_ring(spec);
        IdealLattice lat(ring);
        Bitset meet = lat.ideal(lat.unit_id()).members;
        for (int id = 0; id < lat.size(); ++id)
            if (lat.is_essential(id, true)) meet &= lat.ideal(id).members;
        CHECK(lat.id_of(meet) == lat.socle_id());
    }
}

TEST_CASE("canonical order and labels") {
    FiniteRing ring = build_ring("Z/12");
    IdealLattice lat(ring);
    // ordered by (size, lex): (0), (6), (4), (3), (2), R
    std::vector<std::size_t> sizes;
    for (int id = 0; id < lat.size(); ++id) sizes.push_back(lat.ideal(id).members.count());
    CHECK(std::is_sorted(sizes.begin(), sizes.end()));
    CHECK(lat.label(lat.zero_id()) == "(0)");
    CHECK(lat.label(lat.unit_id()) == "R");
    CHECK(lat.label(lat.principal(6)) == "(6)");
    CHECK(members(lat, lat.principal(6)) == std::set<int>{0, 6});
}
