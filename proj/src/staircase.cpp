#include "llab/staircase.hpp"

namespace llab {

SqfMonomial t_star_lower(const VarSet& vars, const IsotoneMap& phi) {
    const Poset& poset = vars.poset();
    SqfMonomial m;
    IsotoneMap lo = phi_minus(poset, phi);
    for (int p = 0; p < poset.size(); ++p)
        for (int i = lo(p); i <= phi(p); ++i) {
            int k = vars.index(p, i);
            if (k < 0) throw Error("T_* leaves the (restricted) variable set");
            m.set(k);
        }
    return m;
}

SqfMonomial t_star_upper(const VarSet& vars, const IsotoneMap& psi) {
    const Poset& poset = vars.poset();
    SqfMonomial m;
    IsotoneMap hi = phi_plus(poset, vars.n(), psi);
    for (int p = 0; p < poset.size(); ++p)
        for (int i = psi(p); i <= hi(p); ++i) {
            int k = vars.index(p, i);
            if (k < 0) throw Error("T^* leaves the (restricted) variable set");
            m.set(k);
        }
    return m;
}

SimplicialComplex staircase_complex(const Poset& poset, int n) {
    return complex_of_ideal(bpn_ideal(poset, n));
}

std::vector<FaceInterval> interval_decomposition(const PosetIdeal& ideal) {
    VarSet vars = VarSet::full(ideal.poset(), ideal.n());
    std::vector<FaceInterval> out;
    out.reserve(ideal.size());
    for (const auto& phi : ideal.members())
        out.push_back(FaceInterval{phi, graph_monomial(vars, phi), t_star_lower(vars, phi)});
    return out;
}

bool is_in_LJB(const VarSet& vars, const SqfMonomial& a, const PosetIdeal& ideal) {
    const Poset& poset = vars.poset();
    IsotoneMap top;
    top.values.assign(static_cast<std::size_t>(poset.size()), 0);
    for (int k : a.elements()) {
        auto [p, i] = vars.var(k);
        top.values[static_cast<std::size_t>(p)] = std::max(top.values[static_cast<std::size_t>(p)], i);
    }
    for (int v : top.values)
        if (v == 0) return false; // projection to P not surjective
    if (!is_isotone(poset, vars.n(), top)) return false;
    if (!ideal.contains(top)) return false;
    // No bistrict pairs (p,i), (q,j) with p < q and i > j.
    auto elems = a.elements();
    for (int k1 : elems)
        for (int k2 : elems) {
            auto [p, i] = vars.var(k1);
            auto [q, j] = vars.var(k2);
            if (poset.less(p, q) && i > j) return false;
        }
    return true;
}

} // namespace llab
