#ifndef EGR_BITSET_HPP
#define EGR_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <bit>
#include <vector>
#include <functional>

namespace egr {

// Fixed-size bit vector used for ideal membership sets and graph adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset operator&(const Bitset& o) const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // true iff this is a subset of o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Canonical order: ascending element index, absent-before-present.
    // Used (after popcount) to order ideals deterministically.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < nbits_; ++i) {
            bool a = test(i), b = o.test(i);
            if (a != b) return !a;
        }
        return false;
    }

    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // next set bit at position >= from, or -1
    int next_set(std::size_t from) const {
        if (from >= nbits_) return -1;
        std::size_t wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = first_set(); i >= 0; i = next_set(std::size_t(i) + 1)) f(i);
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (uint64_t w : words_)
            h = h * 0x9e3779b97f4a7c15ull + std::hash<uint64_t>{}(w);
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace egr

#endif
