#include "egr/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "egr/errors.hpp"

namespace egr {

namespace {

void check_same_ring(const FiniteRing& ring, const Bitset& I) {
    if (I.size() != std::size_t(ring.order()))
        throw RingMismatch("ideal bit-vector does not belong to this ring");
}

// Additive closure of a set already closed under multiplication by R.
Bitset additive_closure(const FiniteRing& ring, const Bitset& seed) {
    Bitset out = seed;
    out.set(0);
    std::vector<int> members = out.to_indices();
    std::vector<int> frontier = members;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int f : frontier) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                int s = ring.add(f, members[i]);
                if (!out.test(std::size_t(s))) {
                    out.set(std::size_t(s));
                    next.push_back(s);
                }
            }
        }
        for (int x : next) members.push_back(x);
        frontier = std::move(next);
    }
    return out;
}

} // namespace

Bitset principal_ideal(const FiniteRing& ring, int a) {
    Bitset out(std::size_t(ring.order()));
    for (int r = 0; r < ring.order(); ++r)
        out.set(std::size_t(ring.mul(r, a)));
    return out;
}

Bitset ideal_sum_sets(const FiniteRing& ring, const Bitset& I, const Bitset& J) {
    check_same_ring(ring, I);
    check_same_ring(ring, J);
    Bitset out(std::size_t(ring.order()));
    auto is = I.to_indices();
    auto js = J.to_indices();
    for (int a : is)
        for (int b : js)
            out.set(std::size_t(ring.add(a, b)));
    return out;
}

Bitset ideal_product_sets(const FiniteRing& ring, const Bitset& I, const Bitset& J) {
    check_same_ring(ring, I);
    check_same_ring(ring, J);
    Bitset seed(std::size_t(ring.order()));
    auto is = I.to_indices();
    auto js = J.to_indices();
    for (int a : is)
        for (int b : js)
            seed.set(std::size_t(ring.mul(a, b)));
    return additive_closure(ring, seed);
}

Bitset annihilator_set(const FiniteRing& ring, const Bitset& I) {
    check_same_ring(ring, I);
    Bitset out(std::size_t(ring.order()));
    auto is = I.to_indices();
    for (int r = 0; r < ring.order(); ++r) {
        bool kills = true;
        for (int a : is)
            if (ring.mul(r, a) != 0) { kills = false; break; }
        if (kills) out.set(std::size_t(r));
    }
    return out;
}

IdealLattice::IdealLattice(const FiniteRing& ring, long ideal_cap) : ring_(&ring) {
    const int n = ring.order();

    // principal ideals, deduplicated
    std::unordered_map<std::size_t, std::vector<Bitset>> seen;
    std::vector<Bitset> found;
    auto try_insert = [&](const Bitset& b) -> bool {
        auto& bucket = seen[b.hash()];
        for (const auto& x : bucket)
            if (x == b) return false;
        bucket.push_back(b);
        found.push_back(b);
        return true;
    };
    for (int a = 0; a < n; ++a)
        try_insert(principal_ideal(ring, a));

    // closure under pairwise sum; every ideal of a finite ring is a finite
    // sum of principal ideals, so this reaches all of them
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Bitset s = ideal_sum_sets(ring, found[i], found[j]);
            if (try_insert(s) && long(found.size()) > ideal_cap)
                throw LatticeCapExceeded("ideal count exceeds cap " + std::to_string(ideal_cap));
        }
    }

    std::sort(found.begin(), found.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.lex_less(b);
    });

    ideals_.resize(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        ideals_[i].members = std::move(found[i]);
        ideals_[i].canonical_id = int(i);
        by_hash_[ideals_[i].members.hash()].push_back(int(i));
    }
    annihilator_cache_.assign(ideals_.size(), -1);
    nilpotent_cache_.assign(ideals_.size(), -1);

    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        std::size_t c = ideals_[i].members.count();
        if (c == 1) zero_id_ = int(i);
        if (c == std::size_t(n)) unit_id_ = int(i);
    }

    // minimal / maximal by inclusion
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        if (int(i) == zero_id_) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < ideals_.size(); ++j) {
            if (j == i || int(j) == zero_id_) continue;
            if (ideals_[j].members.subset_of(ideals_[i].members) &&
                ideals_[j].members != ideals_[i].members) { minimal = false; break; }
        }
        if (minimal) minimal_ids_.push_back(int(i));
    }
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        if (int(i) == unit_id_) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < ideals_.size(); ++j) {
            if (j == i || int(j) == unit_id_) continue;
            if (ideals_[i].members.subset_of(ideals_[j].members) &&
                ideals_[j].members != ideals_[i].members) { maximal = false; break; }
        }
        if (maximal) maximal_ids_.push_back(int(i));
    }

    // socle = sum of minimal ideals
    {
        Bitset soc = ideals_[std::size_t(zero_id_)].members;
        for (int id : minimal_ids_)
            soc = ideal_sum_sets(ring, soc, ideals_[std::size_t(id)].members);
        socle_id_ = id_of(soc);
    }

    // nilradical from element-wise nilpotency
    nilradical_id_ = id_of(nilpotent_elements());

    // minimal primes: primes minimal under inclusion
    std::vector<int> primes;
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (is_prime(int(i))) primes.push_back(int(i));
    for (int p : primes) {
        bool minimal = true;
        for (int q : primes) {
            if (q == p) continue;
            if (ideals_[std::size_t(q)].members.subset_of(ideals_[std::size_t(p)].members)) {
                minimal = false;
                break;
            }
        }
        if (minimal) min_prime_ids_.push_back(p);
    }
}

int IdealLattice::id_of(const Bitset& members) const {
    auto it = by_hash_.find(members.hash());
    if (it == by_hash_.end()) return -1;
    for (int id : it->second)
        if (ideals_[std::size_t(id)].members == members) return id;
    return -1;
}

int IdealLattice::sum(int i, int j) const {
    return id_of(ideal_sum_sets(*ring_, ideals_[std::size_t(i)].members,
                                ideals_[std::size_t(j)].members));
}

int IdealLattice::intersection(int i, int j) const {
    return id_of(ideals_[std::size_t(i)].members & ideals_[std::size_t(j)].members);
}

int IdealLattice::product(int i, int j) const {
    return id_of(ideal_product_sets(*ring_, ideals_[std::size_t(i)].members,
                                    ideals_[std::size_t(j)].members));
}

int IdealLattice::annihilator(int i) const {
    int& cached = annihilator_cache_[std::size_t(i)];
    if (cached < 0)
        cached = id_of(annihilator_set(*ring_, ideals_[std::size_t(i)].members));
    return cached;
}

int IdealLattice::principal(int element) const {
    return id_of(principal_ideal(*ring_, element));
}

bool IdealLattice::is_essential(int i, bool definitional) const {
    const Bitset& I = ideals_[std::size_t(i)].members;
    if (!definitional)
        return ideals_[std::size_t(socle_id_)].members.subset_of(I);
    if (i == zero_id_) return false;
    for (std::size_t j = 0; j < ideals_.size(); ++j) {
        if (int(j) == zero_id_) continue;
        Bitset meet = I & ideals_[j].members;
        meet.reset(0);
        if (meet.none()) return false;
    }
    return true;
}

bool IdealLattice::is_nilpotent(int i) const {
    signed char& cached = nilpotent_cache_[std::size_t(i)];
    if (cached >= 0) return cached != 0;
    // iterate I^k; the chain I ⊇ I² ⊇ ... stabilizes in a finite ring
    int power = i;
    while (true) {
        if (power == zero_id_) { cached = 1; return true; }
        int next = product(power, i);
        if (next == power) { cached = 0; return false; }
        power = next;
    }
}

bool IdealLattice::is_prime(int i) const {
    if (i == unit_id_) return false;
    const Bitset& P = ideals_[std::size_t(i)].members;
    const int n = ring_->order();
    // transversal of the cosets of P; ab mod P depends only on the cosets
    std::vector<int> reps;
    std::vector<char> visited(std::size_t(n), 0);
    auto pmembers = P.to_indices();
    for (int e = 0; e < n; ++e) {
        if (visited[std::size_t(e)]) continue;
        if (!P.test(std::size_t(e))) reps.push_back(e);
        for (int p : pmembers) visited[std::size_t(ring_->add(e, p))] = 1;
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b)
            if (P.test(std::size_t(ring_->mul(reps[a], reps[b])))) return false;
    return true;
}

Bitset IdealLattice::zero_divisors() const {
    const int n = ring_->order();
    Bitset out((std::size_t(n)));
    for (int r = 0; r < n; ++r) {
        for (int s = 1; s < n; ++s)
            if (ring_->mul(r, s) == 0) { out.set(std::size_t(r)); break; }
    }
    return out;
}

Bitset IdealLattice::nilpotent_elements() const {
    const int n = ring_->order();
    Bitset out((std::size_t(n)));
    for (int a = 0; a < n; ++a)
        if (ring_->is_nilpotent_element(a)) out.set(std::size_t(a));
    return out;
}

std::vector<int> IdealLattice::generators(int id) const {
    const Bitset& target = ideals_[std::size_t(id)].members;
    std::vector<int> gens;
    Bitset span(std::size_t(ring_->order()));
    span.set(0);
    while (span != target) {
        int e = -1;
        for (int x = target.first_set(); x >= 0; x = target.next_set(std::size_t(x) + 1))
            if (!span.test(std::size_t(x))) { e = x; break; }
        gens.push_back(e);
        span = ideal_sum_sets(*ring_, span, principal_ideal(*ring_, e));
    }
    return gens;
}

std::string IdealLattice::element_name(int element) const {
    const auto& radices = ring_->radices();
    if (radices.size() == 1) return std::to_string(element);
    auto c = ring_->coords(element);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

std::string IdealLattice::label(int id) const {
    if (id == zero_id_) return "(0)";
    if (id == unit_id_) return "R";
    std::ostringstream os;
    os << "(";
    auto gens = generators(id);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << element_name(gens[i]);
    }
    os << ")";
    return os.str();
}

} // namespace egr
