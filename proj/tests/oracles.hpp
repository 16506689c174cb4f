#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// computation paths: transversals by full subset enumeration, ranks by dense
// elimination over exact rationals, homology assembled from those ranks.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "llab/bitset.hpp"
#include "llab/field.hpp"
#include "llab/ideal.hpp"
#include "llab/poset.hpp"
#include "llab/simplicial.hpp"

namespace oracles {

inline std::vector<llab::IsotoneMap> brute_hom(const llab::Poset& poset, int n) {
    const int m = poset.size();
    std::vector<llab::IsotoneMap> out;
    std::vector<int> vals(static_cast<std::size_t>(m), 1);
    while (true) {
        llab::IsotoneMap phi{vals};
        if (llab::is_isotone(poset, n, phi)) out.push_back(phi);
        int i = m - 1;
        while (i >= 0 && vals[static_cast<std::size_t>(i)] == n) vals[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++vals[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<llab::Bitset> brute_transversals(const std::vector<llab::Bitset>& gens,
                                                    int nvars) {
    std::vector<llab::Bitset> hits;
    llab::Bitset all;
    for (int v = 0; v < nvars; ++v) all.set(v);
    for (const auto& s : llab::subsets_of(all)) {
        bool transversal = true;
        for (const auto& g : gens)
            if (!s.intersects(g)) {
                transversal = false;
                break;
            }
        if (transversal) hits.push_back(s);
    }
    // keep the minimal ones
    std::vector<llab::Bitset> out;
    for (const auto& s : hits) {
        bool minimal = true;
        for (const auto& t : hits)
            if (t != s && t.subset_of(s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int brute_rank_q(std::vector<std::vector<boost::multiprecision::cpp_rational>> m) {
    using boost::multiprecision::cpp_rational;
    int rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            cpp_rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int brute_rank_p(std::vector<std::vector<long long>> m, unsigned p) {
    int rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    auto norm = [&](long long v) {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && norm(m[pivot][col]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        // pivot inverse by brute force
        long long inv = 1;
        for (long long x = 1; x < static_cast<long long>(p); ++x)
            if (norm(m[row][col]) * x % p == 1) inv = x;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            long long f = norm(m[r][col]) * inv % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = norm(m[r][c] - f * norm(m[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int brute_rank(const std::vector<std::vector<long long>>& m, const llab::CoefficientField& k) {
    if (k.kind() == llab::CoefficientField::Kind::prime)
        return brute_rank_p(m, k.characteristic());
    std::vector<std::vector<boost::multiprecision::cpp_rational>> q;
    q.reserve(m.size());
    for (const auto& row : m) q.emplace_back(row.begin(), row.end());
    return brute_rank_q(std::move(q));
}

/// Reduced homology dimensions (index s holds dim H~_{s-1}) from dense
/// boundary matrices.
inline std::vector<int> brute_homology(const llab::SimplicialComplex& complex,
                                       const llab::CoefficientField& k) {
    if (complex.is_void()) return {};
    auto by_size = complex.faces_by_size();
    const int top = static_cast<int>(by_size.size());
    std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int s = 1; s < top; ++s) {
        const auto& rows = by_size[static_cast<std::size_t>(s - 1)];
        const auto& cols = by_size[static_cast<std::size_t>(s)];
        if (rows.empty() || cols.empty()) continue;
        std::vector<std::vector<long long>> m(rows.size(),
                                              std::vector<long long>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int sign = 1;
            for (int v : cols[c].elements()) {
                llab::Bitset f = cols[c].without(v);
                auto it = std::lower_bound(rows.begin(), rows.end(), f);
                m[static_cast<std::size_t>(it - rows.begin())][c] = sign;
                sign = -sign;
            }
        }
        ranks[static_cast<std::size_t>(s)] = brute_rank(m, k);
    }
    std::vector<int> dims(static_cast<std::size_t>(top), 0);
    for (int s = 0; s < top; ++s)
        dims[static_cast<std::size_t>(s)] =
            static_cast<int>(by_size[static_cast<std::size_t>(s)].size()) -
            ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s) + 1];
    return dims;
}

/// SplitMix64: deterministic test randomness.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

/// Random antichain of squarefree monomials over nvars variables.
inline std::vector<llab::Bitset> random_gens(Rng& rng, int nvars, int count, int max_support) {
    std::vector<llab::Bitset> gens;
    for (int g = 0; g < count; ++g) {
        llab::Bitset b;
        int sz = 1 + rng.below(max_support);
        for (int t = 0; t < sz; ++t) b.set(rng.below(nvars));
        gens.push_back(b);
    }
    return llab::minimalize(std::move(gens));
}

/// Small named posets used across the tests.
inline llab::Poset vee() {
    return llab::poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
}
inline llab::Poset wedge() {
    return llab::poset_from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}

inline std::vector<llab::Poset> small_posets(int max_size) {
    std::vector<llab::Poset> out;
    out.push_back(llab::chain_poset(1));
    if (max_size >= 2) {
        out.push_back(llab::chain_poset(2));
        out.push_back(llab::antichain_poset(2));
    }
    if (max_size >= 3) {
        out.push_back(llab::chain_poset(3));
        out.push_back(llab::antichain_poset(3));
        out.push_back(vee());
        out.push_back(wedge());
        out.push_back(llab::poset_from_covers({"a", "b", "c"}, {{"a", "b"}}));
    }
    return out;
}

} // namespace oracles
