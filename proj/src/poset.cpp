#include "llab/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace llab {

int Poset::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    throw UnknownElement("unknown poset element '" + name + "'");
}

bool Poset::is_antichain() const {
    for (int p = 0; p < size(); ++p)
        for (int q = 0; q < size(); ++q)
            if (p != q && leq(p, q)) return false;
    return true;
}

bool Poset::is_chain() const {
    for (int p = 0; p < size(); ++p)
        for (int q = 0; q < size(); ++q)
            if (!leq(p, q) && !leq(q, p)) return false;
    return true;
}

Poset poset_from_covers(const std::vector<std::string>& names,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
    Bitset::check_width(static_cast<int>(names.size()));
    Poset poset;
    poset.names_ = names;
    const int m = poset.size();
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < m; ++i) {
        if (!idx.emplace(names[static_cast<std::size_t>(i)], i).second)
            throw Error("duplicate element name '" + names[static_cast<std::size_t>(i)] + "'");
    }

    std::vector<Bitset> up(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) up[static_cast<std::size_t>(i)].set(i);
    for (const auto& [a, b] : covers) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw UnknownElement("unknown poset element '" + a + "'");
        if (ib == idx.end()) throw UnknownElement("unknown poset element '" + b + "'");
        up[static_cast<std::size_t>(ia->second)].set(ib->second);
    }
    // Reflexive-transitive closure.
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (up[static_cast<std::size_t>(i)].test(k))
                up[static_cast<std::size_t>(i)] =
                    up[static_cast<std::size_t>(i)] | up[static_cast<std::size_t>(k)];
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (up[static_cast<std::size_t>(p)].test(q) && up[static_cast<std::size_t>(q)].test(p))
                throw CycleDetected("elements '" + names[static_cast<std::size_t>(p)] + "' and '" +
                                    names[static_cast<std::size_t>(q)] +
                                    "' are in a cycle; relation is not antisymmetric");

    poset.up_ = up;
    poset.down_.assign(static_cast<std::size_t>(m), Bitset());
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            if (up[static_cast<std::size_t>(p)].test(q)) poset.down_[static_cast<std::size_t>(q)].set(p);
    return poset;
}

Poset chain_poset(int m, const std::string& prefix) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    for (int i = 1; i < m; ++i)
        covers.emplace_back(prefix + std::to_string(i), prefix + std::to_string(i + 1));
    return poset_from_covers(names, covers);
}

Poset antichain_poset(int m, const std::string& prefix) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    return poset_from_covers(names, {});
}

bool is_isotone(const Poset& poset, int n, const IsotoneMap& phi) {
    if (static_cast<int>(phi.values.size()) != poset.size()) return false;
    for (int v : phi.values)
        if (v < 1 || v > n) return false;
    for (int p = 0; p < poset.size(); ++p)
        for (int q = 0; q < poset.size(); ++q)
            if (poset.leq(p, q) && phi(p) > phi(q)) return false;
    return true;
}

bool pointwise_leq(const IsotoneMap& a, const IsotoneMap& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] > b.values[i]) return false;
    return true;
}

namespace {

void enum_hom_rec(const Poset& poset, int n, std::vector<int>& vals, int p,
                  std::vector<IsotoneMap>& out) {
    const int m = poset.size();
    if (p == m) {
        out.push_back(IsotoneMap{vals});
        return;
    }
    for (int v = 1; v <= n; ++v) {
        bool ok = true;
        for (int q = 0; q < p && ok; ++q) {
            if (poset.leq(q, p) && vals[static_cast<std::size_t>(q)] > v) ok = false;
            if (poset.leq(p, q) && v > vals[static_cast<std::size_t>(q)]) ok = false;
        }
        if (!ok) continue;
        vals[static_cast<std::size_t>(p)] = v;
        enum_hom_rec(poset, n, vals, p + 1, out);
    }
    vals[static_cast<std::size_t>(p)] = 0;
}

} // namespace

std::vector<IsotoneMap> enum_hom(const Poset& poset, int n) {
    if (n < 1) throw Error("chain length must be at least 1");
    std::vector<IsotoneMap> out;
    std::vector<int> vals(static_cast<std::size_t>(poset.size()), 0);
    enum_hom_rec(poset, n, vals, 0, out);
    return out;
}

IsotoneMap phi_minus(const Poset& poset, const IsotoneMap& phi) {
    IsotoneMap out;
    out.values.resize(phi.values.size());
    for (int p = 0; p < poset.size(); ++p) {
        int v = 1;
        for (int q : poset.strictly_below(p).elements()) v = std::max(v, phi(q));
        out.values[static_cast<std::size_t>(p)] = v;
    }
    return out;
}

IsotoneMap phi_plus(const Poset& poset, int n, const IsotoneMap& phi) {
    IsotoneMap out;
    out.values.resize(phi.values.size());
    for (int p = 0; p < poset.size(); ++p) {
        int v = n;
        for (int q : poset.strictly_above(p).elements()) v = std::min(v, phi(q));
        out.values[static_cast<std::size_t>(p)] = v;
    }
    return out;
}

IsotoneMap upper_normalize(const Poset& poset, int n, const IsotoneMap& phi) {
    return phi_plus(poset, n, phi_minus(poset, phi));
}

bool is_upper_normal(const Poset& poset, int n, const IsotoneMap& phi) {
    return upper_normalize(poset, n, phi) == phi;
}

bool PosetIdeal::contains(const IsotoneMap& phi) const {
    return std::binary_search(members_.begin(), members_.end(), phi);
}

std::vector<IsotoneMap> PosetIdeal::complement() const {
    std::vector<IsotoneMap> out;
    for (const auto& phi : enum_hom(poset_, n_))
        if (!contains(phi)) out.push_back(phi);
    return out;
}

bool PosetIdeal::is_full() const {
    std::size_t total = enum_hom(poset_, n_).size();
    return members_.size() == total;
}

PosetIdeal poset_ideal(const Poset& poset, int n, const std::vector<IsotoneMap>& gens) {
    for (const auto& g : gens)
        if (!is_isotone(poset, n, g))
            throw NotIsotone("poset ideal generator is not an isotone map into [" +
                             std::to_string(n) + "]");
    PosetIdeal ideal;
    ideal.poset_ = poset;
    ideal.n_ = n;
    for (const auto& phi : enum_hom(poset, n)) {
        for (const auto& g : gens) {
            if (pointwise_leq(phi, g)) {
                ideal.members_.push_back(phi);
                break;
            }
        }
    }
    for (const auto& phi : ideal.members_) {
        bool maximal = true;
        for (const auto& psi : ideal.members_)
            if (phi != psi && pointwise_leq(phi, psi)) {
                maximal = false;
                break;
            }
        if (maximal) ideal.maximal_.push_back(phi);
    }
    return ideal;
}

PosetIdeal full_hom_ideal(const Poset& poset, int n) {
    IsotoneMap top;
    top.values.assign(static_cast<std::size_t>(poset.size()), n);
    return poset_ideal(poset, n, {top});
}

IsotoneMap hull(const PosetIdeal& ideal) {
    if (ideal.empty()) throw EmptyIdeal("hull of the empty poset ideal");
    IsotoneMap mu;
    mu.values.assign(static_cast<std::size_t>(ideal.poset().size()), 1);
    for (const auto& phi : ideal.members())
        for (std::size_t p = 0; p < mu.values.size(); ++p)
            mu.values[p] = std::max(mu.values[p], phi.values[p]);
    return mu;
}

} // namespace llab
