#pragma once

#include <map>
#include <string>
#include <vector>

#include "llab/bitset.hpp"

namespace llab {

/// Exponent vector over a fixed variable list. Squarefree multidegrees are
/// 0/1 vectors; the dehomogenized (strongly stable) side uses general ones.
using ExpVec = std::vector<int>;

ExpVec expvec_of_bitset(const Bitset& b, int nvars);
int total_degree(const ExpVec& e);
bool expvec_leq(const ExpVec& a, const ExpVec& b);
ExpVec expvec_add(const ExpVec& a, const ExpVec& b);

/// Multigraded Betti numbers: fine entries (homological index, multidegree)
/// and the coarse view aggregated by total degree.
struct BettiTable {
    std::map<std::pair<int, ExpVec>, long long> fine;

    void add(int i, const ExpVec& deg, long long count) {
        if (count != 0) fine[{i, deg}] += count;
    }

    std::map<std::pair<int, int>, long long> coarse() const {
        std::map<std::pair<int, int>, long long> out;
        for (const auto& [key, c] : fine) out[{key.first, total_degree(key.second)}] += c;
        return out;
    }

    /// Total Betti numbers by homological index, starting at 0.
    std::vector<long long> ranks() const {
        std::vector<long long> out;
        for (const auto& [key, c] : fine) {
            if (key.first >= static_cast<int>(out.size()))
                out.resize(static_cast<std::size_t>(key.first) + 1, 0);
            out[static_cast<std::size_t>(key.first)] += c;
        }
        return out;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

std::string betti_to_string(const BettiTable& t);

} // namespace llab
