#include "llab/betti.hpp"

#include <algorithm>

namespace llab {

ExpVec expvec_of_bitset(const Bitset& b, int nvars) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    for (int v : b.elements()) e[static_cast<std::size_t>(v)] = 1;
    return e;
}

int total_degree(const ExpVec& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

bool expvec_leq(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::string betti_to_string(const BettiTable& t) {
    std::string s = "coarse {";
    bool first = true;
    for (const auto& [key, c] : t.coarse()) {
        if (!first) s += ", ";
        first = false;
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
             "):" + std::to_string(c);
    }
    s += "}";
    return s;
}

} // namespace llab
