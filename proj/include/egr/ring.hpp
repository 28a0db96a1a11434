#ifndef EGR_RING_HPP
#define EGR_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "egr/errors.hpp"

namespace egr {

/// Abstract syntax tree for a ring specification.
/// Grammar (ASCII): ring := atom ( " x " atom )*
///                  atom := "Z/" nat | "GF(" nat ")" | "Z/" nat "[x]/(" poly ")"
struct RingSpec {
    enum class Kind { ZMod, GaloisField, QuotientPoly, Product };

    Kind kind = Kind::ZMod;
    long modulus = 0;            // ZMod n, GF q, or QuotientPoly base n
    std::vector<long> poly;      // QuotientPoly modulus, poly[i] = coefficient of x^i, monic
    std::vector<RingSpec> factors;

    std::string text() const;    // canonical textual form
    void validate() const;       // throws InvalidParameter on bad parameters
};

RingSpec parse_ring_spec(const std::string& text);

constexpr long kDefaultOrderCap = 65536;

/// A finite commutative unital ring with elements indexed 0..|R|-1.
/// Index 0 is the additive identity. The additive group is the mixed-radix
/// product of radices(); addition is always componentwise in that coordinate
/// system, only multiplication depends on the ring structure.
class FiniteRing {
public:
    int order() const { return order_; }
    int one() const { return one_; }
    const std::vector<int>& radices() const { return radices_; }
    const RingSpec& spec() const { return spec_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * order_ + b];
        return mul_fn_(a, b);
    }

    std::vector<int> coords(int index) const;
    int index_of(const std::vector<int>& c) const;

    bool is_unit(int a) const;
    int characteristic() const;  // additive order of 1

    // a^k with a^0 = 1
    int pow(int a, long k) const;

    bool is_nilpotent_element(int a) const;

private:
    friend FiniteRing build_ring(const RingSpec&, long);

    int order_ = 1;
    int one_ = 0;
    std::vector<int> radices_;
    std::vector<int> strides_;
    RingSpec spec_;
    std::vector<int> mul_table_;                 // populated when order <= table cap
    std::function<int(int, int)> mul_fn_;        // fallback above the table cap
};

FiniteRing build_ring(const RingSpec& spec, long order_cap = kDefaultOrderCap);

inline FiniteRing build_ring(const std::string& text, long order_cap = kDefaultOrderCap) {
    return build_ring(parse_ring_spec(text), order_cap);
}

/// Lexicographically first monic irreducible polynomial of degree k over Z/p,
/// little-endian coefficients (used for GF(p^k) construction; exposed for tests).
std::vector<long> first_irreducible_poly(long p, int k);

/// q = p^k with p prime, k >= 1; returns {p, k} or throws InvalidParameter.
std::pair<long, int> factor_prime_power(long q);

} // namespace egr

#endif
