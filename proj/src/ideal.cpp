#include "llab/ideal.hpp"

#include <algorithm>

namespace llab {

VarSet VarSet::full(const Poset& poset, int n) {
    if (n < 1) throw Error("chain length must be at least 1");
    Bitset::check_width(poset.size() * n);
    VarSet v;
    v.poset_ = poset;
    v.n_ = n;
    v.lookup_.assign(static_cast<std::size_t>(poset.size() * n), -1);
    for (int p = 0; p < poset.size(); ++p)
        for (int i = 1; i <= n; ++i) {
            v.lookup_[static_cast<std::size_t>(p * n + i - 1)] = static_cast<int>(v.vars_.size());
            v.vars_.emplace_back(p, i);
        }
    return v;
}

VarSet VarSet::restricted(const Poset& poset, int n, const IsotoneMap& mu) {
    if (!is_isotone(poset, n, mu))
        throw NotIsotone("restriction bound must be an isotone map into [" + std::to_string(n) + "]");
    VarSet v;
    v.poset_ = poset;
    v.n_ = n;
    v.lookup_.assign(static_cast<std::size_t>(poset.size() * n), -1);
    for (int p = 0; p < poset.size(); ++p)
        for (int i = 1; i <= mu(p); ++i) {
            v.lookup_[static_cast<std::size_t>(p * n + i - 1)] = static_cast<int>(v.vars_.size());
            v.vars_.emplace_back(p, i);
        }
    Bitset::check_width(v.size());
    return v;
}

std::string VarSet::var_name(int k) const {
    auto [p, i] = vars_[static_cast<std::size_t>(k)];
    return "x_{" + poset_.name(p) + "," + std::to_string(i) + "}";
}

Bitset VarSet::all_vars() const {
    Bitset b;
    for (int k = 0; k < size(); ++k) b.set(k);
    return b;
}

std::string monomial_name(const VarSet& vars, const SqfMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (int k : m.elements()) {
        if (!s.empty()) s += "*";
        s += vars.var_name(k);
    }
    return s;
}

std::vector<SqfMonomial> minimalize(std::vector<SqfMonomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<SqfMonomial> out;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& h : out)
            if (h.subset_of(g)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(g);
    }
    return out;
}

SqfMonomialIdeal::SqfMonomialIdeal(VarSet vars, std::vector<SqfMonomial> gens)
    : vars_(std::move(vars)), gens_(minimalize(std::move(gens))) {}

bool SqfMonomialIdeal::contains(const SqfMonomial& m) const {
    for (const auto& g : gens_)
        if (g.subset_of(m)) return true;
    return false;
}

SqfMonomial graph_monomial(const VarSet& vars, const IsotoneMap& phi) {
    SqfMonomial m;
    for (int p = 0; p < vars.poset().size(); ++p) {
        int k = vars.index(p, phi(p));
        if (k < 0)
            throw Error("graph of the map leaves the (restricted) variable set");
        m.set(k);
    }
    return m;
}

SqfMonomialIdeal coletterplace_ideal(const PosetIdeal& ideal) {
    VarSet vars = VarSet::full(ideal.poset(), ideal.n());
    std::vector<SqfMonomial> gens;
    gens.reserve(ideal.size());
    for (const auto& phi : ideal.members()) gens.push_back(graph_monomial(vars, phi));
    return SqfMonomialIdeal(std::move(vars), std::move(gens));
}

namespace {

void multichains_rec(const Poset& poset, int n, int k, int prev, std::vector<int>& chain,
                     std::vector<std::vector<int>>& out) {
    if (k == n) {
        out.push_back(chain);
        return;
    }
    for (int p = 0; p < poset.size(); ++p) {
        if (prev >= 0 && !poset.leq(prev, p)) continue;
        chain.push_back(p);
        multichains_rec(poset, n, k + 1, p, chain, out);
        chain.pop_back();
    }
}

} // namespace

SqfMonomialIdeal letterplace_ideal(int n, const Poset& poset) {
    VarSet vars = VarSet::full(poset, n);
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    multichains_rec(poset, n, 0, -1, chain, chains);
    std::vector<SqfMonomial> gens;
    for (const auto& c : chains) {
        SqfMonomial m;
        for (int k = 0; k < n; ++k) m.set(vars.index(c[static_cast<std::size_t>(k)], k + 1));
        gens.push_back(m);
    }
    return SqfMonomialIdeal(std::move(vars), std::move(gens));
}

SqfMonomialIdeal bpn_ideal(const Poset& poset, int n) {
    VarSet vars = VarSet::full(poset, n);
    std::vector<SqfMonomial> gens;
    for (int p = 0; p < poset.size(); ++p)
        for (int q = 0; q < poset.size(); ++q) {
            if (!poset.less(p, q)) continue;
            for (int i = 2; i <= n; ++i)
                for (int j = 1; j < i; ++j) {
                    SqfMonomial m;
                    m.set(vars.index(p, i));
                    m.set(vars.index(q, j));
                    gens.push_back(m);
                }
        }
    return SqfMonomialIdeal(std::move(vars), std::move(gens));
}

SqfMonomialIdeal bJ_ideal(const PosetIdeal& ideal) {
    VarSet vars = VarSet::full(ideal.poset(), ideal.n());
    std::vector<SqfMonomial> gens = bpn_ideal(ideal.poset(), ideal.n()).gens();
    for (const auto& phi : ideal.complement()) gens.push_back(graph_monomial(vars, phi));
    return SqfMonomialIdeal(std::move(vars), std::move(gens));
}

SqfMonomialIdeal alexander_dual(const SqfMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw ZeroIdeal("Alexander dual of the zero ideal is the unit ideal; rejected");
    if (ideal.is_unit())
        throw UnitIdeal("Alexander dual of the unit ideal is the zero ideal; rejected");

    // Berge's algorithm: fold the generators into the running antichain of
    // minimal transversals.
    std::vector<Bitset> trans = {Bitset()};
    for (const auto& g : ideal.gens()) {
        std::vector<Bitset> next;
        for (const auto& t : trans) {
            if (t.intersects(g)) {
                next.push_back(t);
            } else {
                for (int v : g.elements()) next.push_back(t.with(v));
            }
        }
        trans = minimalize(std::move(next));
    }
    return SqfMonomialIdeal(ideal.vars(), std::move(trans));
}

SqfMonomialIdeal sum(const SqfMonomialIdeal& a, const SqfMonomialIdeal& b) {
    if (a.vars() != b.vars()) throw Error("ideal sum requires a common variable set");
    std::vector<SqfMonomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return SqfMonomialIdeal(a.vars(), std::move(gens));
}

SqfMonomialIdeal intersect(const SqfMonomialIdeal& a, const SqfMonomialIdeal& b) {
    if (a.vars() != b.vars()) throw Error("ideal intersection requires a common variable set");
    std::vector<SqfMonomial> gens;
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) gens.push_back(g | h);
    return SqfMonomialIdeal(a.vars(), std::move(gens));
}

} // namespace llab
