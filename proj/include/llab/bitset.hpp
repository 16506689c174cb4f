#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "llab/errors.hpp"

namespace llab {

/// Fixed-capacity bitset used for squarefree monomial supports and
/// simplicial faces. Two machine words cover every desk-scale variable
/// set this library targets; construction beyond kMaxBits throws.
class Bitset {
public:
    static constexpr int kMaxBits = 128;

    Bitset() : w_{0, 0} {}

    static Bitset empty_set() { return Bitset(); }

    static void check_width(int nbits) {
        if (nbits < 0 || nbits > kMaxBits)
            throw WidthExceeded("variable set of size " + std::to_string(nbits) +
                                " exceeds supported width " + std::to_string(kMaxBits));
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool subset_of(const Bitset& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool intersects(const Bitset& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    Bitset operator|(const Bitset& o) const { return Bitset(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
    Bitset operator&(const Bitset& o) const { return Bitset(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
    /// Set difference.
    Bitset operator-(const Bitset& o) const { return Bitset(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }

    Bitset with(int i) const { Bitset b = *this; b.set(i); return b; }
    Bitset without(int i) const { Bitset b = *this; b.reset(i); return b; }

    /// Indices of set bits, ascending.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int word = 0; word < 2; ++word) {
            std::uint64_t w = w_[word];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(64 * word + b);
                w &= w - 1;
            }
        }
        return out;
    }

    /// Number of set bits strictly below position i.
    int rank_below(int i) const {
        int word = i >> 6, bit = i & 63;
        int c = 0;
        for (int k = 0; k < word; ++k) c += std::popcount(w_[k]);
        if (bit > 0) c += std::popcount(w_[word] << (64 - bit));
        return c;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Total order: by cardinality, then lexicographic on positions
    /// (lowest set bit first). Used for deterministic generator orderings.
    std::strong_ordering operator<=>(const Bitset& o) const {
        if (int c = count(), d = o.count(); c != d) return c <=> d;
        // Colexicographic on the reversed words equals lex on positions.
        std::uint64_t a0 = reverse_bits(w_[0]), b0 = reverse_bits(o.w_[0]);
        if (a0 != b0) return b0 <=> a0;
        std::uint64_t a1 = reverse_bits(w_[1]), b1 = reverse_bits(o.w_[1]);
        return b1 <=> a1;
    }

    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }

private:
    Bitset(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}

    static std::uint64_t reverse_bits(std::uint64_t v) {
        v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
        v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
        v = ((v >> 4) & 0x0f0f0f0f0f0f0f0full) | ((v & 0x0f0f0f0f0f0f0f0full) << 4);
        v = ((v >> 8) & 0x00ff00ff00ff00ffull) | ((v & 0x00ff00ff00ff00ffull) << 8);
        v = ((v >> 16) & 0x0000ffff0000ffffull) | ((v & 0x0000ffff0000ffffull) << 16);
        return (v >> 32) | (v << 32);
    }

    std::array<std::uint64_t, 2> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// All subsets of `sup`, in increasing (cardinality, lex) order.
std::vector<Bitset> subsets_of(const Bitset& sup);

} // namespace llab
