#ifndef EGR_LATTICE_HPP
#define EGR_LATTICE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "egr/bitset.hpp"
#include "egr/ring.hpp"

namespace egr {

constexpr long kDefaultIdealCap = 100000;

/// Principal ideal Ra = { r*a : r in R } as a membership bit-vector.
Bitset principal_ideal(const FiniteRing& ring, int a);

/// Sum I + J = { i + j } (both arguments must be ideals of `ring`).
Bitset ideal_sum_sets(const FiniteRing& ring, const Bitset& I, const Bitset& J);

/// Product IJ = additive closure of { ab : a in I, b in J }.
Bitset ideal_product_sets(const FiniteRing& ring, const Bitset& I, const Bitset& J);

/// Ann(I) = { r : rI = 0 }.
Bitset annihilator_set(const FiniteRing& ring, const Bitset& I);

struct Ideal {
    Bitset members;
    int canonical_id = -1;
};

/// Complete enumeration of the ideals of a finite commutative ring, with
/// derived structure (socle, nilradical, minimal/maximal ideals, primes).
/// Ideals are ordered canonically by (popcount, lexicographic bit-vector)
/// and referred to by their canonical id.
class IdealLattice {
public:
    explicit IdealLattice(const FiniteRing& ring, long ideal_cap = kDefaultIdealCap);
    explicit IdealLattice(FiniteRing&&, long = kDefaultIdealCap) = delete;

    const FiniteRing& ring() const { return *ring_; }
    int size() const { return int(ideals_.size()); }
    const Ideal& ideal(int id) const { return ideals_[std::size_t(id)]; }
    const std::vector<Ideal>& all_ideals() const { return ideals_; }

    int zero_id() const { return zero_id_; }
    int unit_id() const { return unit_id_; }
    int socle_id() const { return socle_id_; }
    int nilradical_id() const { return nilradical_id_; }
    const std::vector<int>& minimal_ideals() const { return minimal_ids_; }
    const std::vector<int>& maximal_ideals() const { return maximal_ids_; }
    const std::vector<int>& minimal_primes() const { return min_prime_ids_; }

    /// id of an enumerated ideal, or -1 when the set is not in the lattice
    int id_of(const Bitset& members) const;

    int sum(int i, int j) const;
    int intersection(int i, int j) const;
    int product(int i, int j) const;
    int annihilator(int i) const;
    int principal(int element) const;

    /// Essential: nonzero intersection with every nonzero ideal.
    /// Fast path tests Soc(R) ⊆ I; `definitional` forces the full scan.
    bool is_essential(int i, bool definitional = false) const;
    bool is_nilpotent(int i) const;   // I^k = 0 for some k, by iterated powers
    bool is_prime(int i) const;

    Bitset zero_divisors() const;     // element set { r : exists s != 0 with rs = 0 }
    Bitset nilpotent_elements() const;

    /// Greedy minimal generating set (element indices, smallest-first).
    std::vector<int> generators(int id) const;
    /// Human-readable label, e.g. "(0)", "(6)", "(2,3)"; "R" for the whole ring.
    std::string label(int id) const;
    std::string element_name(int element) const;

private:
    const FiniteRing* ring_;
    std::vector<Ideal> ideals_;
    std::unordered_map<std::size_t, std::vector<int>> by_hash_;
    int zero_id_ = -1, unit_id_ = -1, socle_id_ = -1, nilradical_id_ = -1;
    std::vector<int> minimal_ids_, maximal_ids_, min_prime_ids_;
    mutable std::vector<int> annihilator_cache_;
    mutable std::vector<signed char> nilpotent_cache_;
};

} // namespace egr

#endif
