#include "llab/stable.hpp"

#include <algorithm>
#include <map>

namespace llab {

StableIdeal::StableIdeal(int d, int n, std::vector<ExpVec> monomials) : d_(d), n_(n) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    for (const auto& u : monomials) {
        if (static_cast<int>(u.size()) != n)
            throw NotStronglyStable("monomial over a different variable count");
        int deg = 0;
        for (int e : u) {
            if (e < 0) throw NotStronglyStable("negative exponent");
            deg += e;
        }
        if (deg != d)
            throw NotStronglyStable("ideal is not generated in the single degree " +
                                    std::to_string(d));
    }
    monomials_ = std::move(monomials);
    for (const auto& u : monomials_) {
        for (int j = 1; j < n_; ++j) {
            if (u[static_cast<std::size_t>(j)] == 0) continue;
            for (int i = 0; i < j; ++i) {
                ExpVec swapped = u;
                --swapped[static_cast<std::size_t>(j)];
                ++swapped[static_cast<std::size_t>(i)];
                if (!contains_monomial(swapped))
                    throw NotStronglyStable("exchange x_" + std::to_string(j + 1) + " -> x_" +
                                            std::to_string(i + 1) + " leaves the ideal");
            }
        }
    }
}

bool StableIdeal::contains_monomial(const ExpVec& u) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), u);
}

ExpVec monomial_of_map(const IsotoneMap& phi, int n) {
    ExpVec u(static_cast<std::size_t>(n), 0);
    for (int v : phi.values) ++u[static_cast<std::size_t>(v - 1)];
    return u;
}

IsotoneMap map_of_monomial(const ExpVec& u) {
    IsotoneMap phi;
    for (std::size_t j = 0; j < u.size(); ++j)
        for (int t = 0; t < u[j]; ++t) phi.values.push_back(static_cast<int>(j) + 1);
    return phi;
}

namespace {
void require_increasing_chain(const Poset& poset) {
    if (!poset.is_chain()) throw NotAChain("the poset must be a chain");
    for (int p = 0; p + 1 < poset.size(); ++p)
        if (!poset.leq(p, p + 1))
            throw NotAChain("the chain must be declared in increasing order");
}
} // namespace

StableIdeal stable_from_posetideal(const PosetIdeal& ideal) {
    require_increasing_chain(ideal.poset());
    std::vector<ExpVec> mons;
    mons.reserve(ideal.size());
    for (const auto& phi : ideal.members()) mons.push_back(monomial_of_map(phi, ideal.n()));
    return StableIdeal(ideal.poset().size(), ideal.n(), std::move(mons));
}

PosetIdeal posetideal_from_stable(const StableIdeal& ideal) {
    Poset chain = chain_poset(ideal.degree());
    std::vector<IsotoneMap> gens;
    gens.reserve(ideal.monomials().size());
    for (const auto& u : ideal.monomials()) gens.push_back(map_of_monomial(u));
    return poset_ideal(chain, ideal.nvars(), gens);
}

int pt_of(const IsotoneMap& phi, int j) {
    const int d = static_cast<int>(phi.values.size());
    if (j < 1 || j >= phi(d - 1))
        throw OutOfRange("j must satisfy 1 <= j < phi(d)");
    for (int p = 1; p <= d; ++p) {
        int prev = (p == 1) ? 1 : phi(p - 2);
        if (prev <= j && j < phi(p - 1)) return p;
    }
    throw OutOfRange("no position for j = " + std::to_string(j));
}

namespace {

std::string stable_label(const IsotoneMap& phi, const std::vector<int>& js) {
    std::string s = "m_phi=(";
    for (std::size_t i = 0; i < phi.values.size(); ++i)
        s += (i ? "," : "") + std::to_string(phi.values[i]);
    s += ") js=(";
    for (std::size_t i = 0; i < js.size(); ++i) s += (i ? "," : "") + std::to_string(js[i]);
    return s + ")";
}

ExpVec gen_degree(const StableIdeal& ideal, const IsotoneMap& phi, const std::vector<int>& js) {
    ExpVec deg = monomial_of_map(phi, ideal.nvars());
    for (int j : js) ++deg[static_cast<std::size_t>(j - 1)];
    return deg;
}

struct StableSkeleton {
    std::vector<std::vector<EKGenerator>> by_index;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::pair<int, int>> position;
    MultigradedComplex complex;
};

// The generator set shared by the EK and co-letterplace resolutions: one
// pair (m_phi; j_1..j_i) per generator and subset of [1, phi(d)-1].
StableSkeleton stable_skeleton(const StableIdeal& ideal) {
    StableSkeleton s;
    for (int j = 1; j <= ideal.nvars(); ++j)
        s.complex.var_names.push_back("x_" + std::to_string(j));
    for (const auto& u : ideal.monomials()) {
        IsotoneMap phi = map_of_monomial(u);
        int top = phi(ideal.degree() - 1);
        std::vector<std::vector<int>> subsets = {{}};
        for (int j = 1; j < top; ++j) {
            std::size_t sz = subsets.size();
            for (std::size_t t = 0; t < sz; ++t) {
                auto with = subsets[t];
                with.push_back(j);
                subsets.push_back(std::move(with));
            }
        }
        for (auto& js : subsets) {
            int i = static_cast<int>(js.size());
            if (i >= static_cast<int>(s.by_index.size()))
                s.by_index.resize(static_cast<std::size_t>(i) + 1);
            s.by_index[static_cast<std::size_t>(i)].push_back(EKGenerator{phi, js});
        }
    }
    for (auto& gens : s.by_index)
        std::sort(gens.begin(), gens.end(), [](const EKGenerator& a, const EKGenerator& b) {
            return std::tie(a.phi.values, a.js) < std::tie(b.phi.values, b.js);
        });
    s.complex.modules.resize(s.by_index.size());
    for (std::size_t i = 0; i < s.by_index.size(); ++i) {
        for (const auto& g : s.by_index[i]) {
            s.position.emplace(std::make_pair(g.phi.values, g.js),
                               std::make_pair(static_cast<int>(i),
                                              static_cast<int>(s.complex.modules[i].size())));
            GenTag tag;
            tag.phi = g.phi.values;
            for (int j : g.js) tag.pairs.emplace_back(pt_of(g.phi, j), j);
            s.complex.modules[i].push_back(
                FreeGen{stable_label(g.phi, g.js), gen_degree(ideal, g.phi, g.js), std::move(tag)});
        }
    }
    s.complex.diffs.resize(s.by_index.empty() ? 0 : s.by_index.size() - 1);
    return s;
}

std::vector<int> erase_at(const std::vector<int>& js, std::size_t t) {
    std::vector<int> out = js;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(t));
    return out;
}

std::pair<int, int> position_of(const StableSkeleton& s, const std::vector<int>& phi,
                                const std::vector<int>& js) {
    auto it = s.position.find({phi, js});
    if (it == s.position.end()) throw Error("differential target is not a generator");
    return it->second;
}

} // namespace

MultigradedComplex ek_resolution(const StableIdeal& ideal) {
    StableSkeleton s = stable_skeleton(ideal);
    const int d = ideal.degree();
    const int n = ideal.nvars();
    for (std::size_t i = 1; i < s.by_index.size(); ++i) {
        for (std::size_t col = 0; col < s.by_index[i].size(); ++col) {
            const EKGenerator& g = s.by_index[i][col];
            for (std::size_t t0 = 0; t0 < g.js.size(); ++t0) {
                const int t = static_cast<int>(t0) + 1; // 1-based
                const int jt = g.js[t0];
                const int sign_t = (t % 2 == 0) ? 1 : -1;
                std::vector<int> rest = erase_at(g.js, t0);
                // del: (-1)^t x_{j_t} (m_phi; ... ^j_t ...)
                {
                    auto pos = position_of(s, g.phi.values, rest);
                    ExpVec mono(static_cast<std::size_t>(n), 0);
                    mono[static_cast<std::size_t>(jt - 1)] = 1;
                    s.complex.diffs[i - 1].push_back(
                        DiffEntry{pos.second, static_cast<int>(col), sign_t, mono});
                }
                // -mu: -(-1)^t x_{phi(d)} (m_{phi^2_t}; ... ^j_t ...); an
                // ill-defined summand (remaining js reaching phi^2_t(d))
                // counts as zero.
                {
                    int pt = pt_of(g.phi, jt);
                    IsotoneMap phi2;
                    phi2.values.resize(static_cast<std::size_t>(d));
                    for (int r = 1; r <= d; ++r) {
                        if (r < pt) phi2.values[static_cast<std::size_t>(r - 1)] = g.phi(r - 1);
                        else if (r == pt) phi2.values[static_cast<std::size_t>(r - 1)] = jt;
                        else phi2.values[static_cast<std::size_t>(r - 1)] = g.phi(r - 2);
                    }
                    if (rest.empty() || rest.back() < phi2(d - 1)) {
                        auto pos = position_of(s, phi2.values, rest);
                        ExpVec mono(static_cast<std::size_t>(n), 0);
                        mono[static_cast<std::size_t>(g.phi(d - 1) - 1)] = 1;
                        s.complex.diffs[i - 1].push_back(
                            DiffEntry{pos.second, static_cast<int>(col), -sign_t, mono});
                    }
                }
            }
        }
    }
    return s.complex;
}

MultigradedComplex colp_resolution(const StableIdeal& ideal) {
    StableSkeleton s = stable_skeleton(ideal);
    const int n = ideal.nvars();
    for (std::size_t i = 1; i < s.by_index.size(); ++i) {
        for (std::size_t col = 0; col < s.by_index[i].size(); ++col) {
            const EKGenerator& g = s.by_index[i][col];
            for (std::size_t t0 = 0; t0 < g.js.size(); ++t0) {
                const int t = static_cast<int>(t0) + 1;
                const int jt = g.js[t0];
                const int pt = pt_of(g.phi, jt);
                std::vector<int> rest = erase_at(g.js, t0);
                // del': (-1)^{p_t+t} x_{j_t} (m_phi; ... ^j_t ...)
                {
                    int sign = ((pt + t) % 2 == 0) ? 1 : -1;
                    auto pos = position_of(s, g.phi.values, rest);
                    ExpVec mono(static_cast<std::size_t>(n), 0);
                    mono[static_cast<std::size_t>(jt - 1)] = 1;
                    s.complex.diffs[i - 1].push_back(
                        DiffEntry{pos.second, static_cast<int>(col), sign, mono});
                }
                // mu': (-1)^{p_t+t-1} x_{phi(p_t)} (m_{phi^1_t}; ... ^j_t ...),
                // only when j_t is maximal among the js below phi(p_t)
                // (j_{i+1} taken as +infinity).
                bool in_dprime = (t0 + 1 == g.js.size()) || (g.js[t0 + 1] >= g.phi(pt - 1));
                if (in_dprime) {
                    IsotoneMap phi1 = g.phi;
                    phi1.values[static_cast<std::size_t>(pt - 1)] = jt;
                    auto pos = position_of(s, phi1.values, rest);
                    int sign = ((pt + t - 1) % 2 == 0) ? 1 : -1;
                    ExpVec mono(static_cast<std::size_t>(n), 0);
                    mono[static_cast<std::size_t>(g.phi(pt - 1) - 1)] = 1;
                    s.complex.diffs[i - 1].push_back(
                        DiffEntry{pos.second, static_cast<int>(col), sign, mono});
                }
            }
        }
    }
    return s.complex;
}

MultigradedComplex dehomogenize(const MultigradedComplex& complex) {
    // Recover d and n from the generator tags and the variable count.
    int d = 0;
    for (const auto& mod : complex.modules) {
        if (!mod.empty()) {
            d = static_cast<int>(mod.front().tag.phi.size());
            break;
        }
    }
    if (d == 0) throw Error("dehomogenize requires a co-letterplace resolution over a chain");
    if (complex.var_names.size() % static_cast<std::size_t>(d) != 0)
        throw Error("variable count is not a multiple of the chain length");
    const int n = static_cast<int>(complex.var_names.size()) / d;

    MultigradedComplex out;
    for (int j = 1; j <= n; ++j) out.var_names.push_back("x_" + std::to_string(j));
    out.modules.resize(complex.modules.size());
    out.diffs.resize(complex.diffs.size());
    for (std::size_t i = 0; i < complex.modules.size(); ++i) {
        for (const auto& g : complex.modules[i]) {
            IsotoneMap phi{g.tag.phi};
            std::vector<int> js;
            for (const auto& [p, j] : g.tag.pairs) js.push_back(j);
            std::sort(js.begin(), js.end());
            ExpVec deg(static_cast<std::size_t>(n), 0);
            for (std::size_t k = 0; k < g.degree.size(); ++k)
                if (g.degree[k]) ++deg[k % static_cast<std::size_t>(n)];
            GenTag tag;
            tag.phi = g.tag.phi;
            for (int j : js) tag.pairs.emplace_back(pt_of(phi, j), j);
            out.modules[i].push_back(FreeGen{stable_label(phi, js), std::move(deg), std::move(tag)});
        }
    }
    for (std::size_t i = 0; i < complex.diffs.size(); ++i) {
        for (const auto& e : complex.diffs[i]) {
            ExpVec mono(static_cast<std::size_t>(n), 0);
            for (std::size_t k = 0; k < e.mono.size(); ++k)
                if (e.mono[k]) mono[k % static_cast<std::size_t>(n)] += e.mono[k];
            out.diffs[i].push_back(DiffEntry{e.row, e.col, e.coeff, std::move(mono)});
        }
    }
    return out;
}

namespace {
std::map<std::string, int> label_index(const std::vector<FreeGen>& gens) {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < gens.size(); ++i) out.emplace(gens[i].label, static_cast<int>(i));
    return out;
}

using EntryKey = std::pair<std::string, std::string>; // (row label, col label)

std::map<EntryKey, std::pair<long long, ExpVec>> entry_map(const MultigradedComplex& c,
                                                           std::size_t i) {
    std::map<EntryKey, std::pair<long long, ExpVec>> out;
    for (const auto& e : c.diffs[i]) {
        EntryKey key{c.modules[i][static_cast<std::size_t>(e.row)].label,
                     c.modules[i + 1][static_cast<std::size_t>(e.col)].label};
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, std::make_pair(static_cast<long long>(e.coeff), e.mono));
        } else {
            if (it->second.second != e.mono) throw Error("mixed monomials on one matrix entry");
            it->second.first += e.coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.first == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}
} // namespace

bool complexes_equal_by_label(const MultigradedComplex& a, const MultigradedComplex& b) {
    if (a.var_names != b.var_names) return false;
    if (a.modules.size() != b.modules.size() || a.diffs.size() != b.diffs.size()) return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i) {
        if (a.modules[i].size() != b.modules[i].size()) return false;
        auto la = label_index(a.modules[i]);
        auto lb = label_index(b.modules[i]);
        if (la.size() != a.modules[i].size() || lb.size() != b.modules[i].size()) return false;
        for (const auto& [label, ia] : la) {
            auto it = lb.find(label);
            if (it == lb.end()) return false;
            if (a.modules[i][static_cast<std::size_t>(ia)].degree !=
                b.modules[i][static_cast<std::size_t>(it->second)].degree)
                return false;
        }
    }
    for (std::size_t i = 0; i < a.diffs.size(); ++i)
        if (entry_map(a, i) != entry_map(b, i)) return false;
    return true;
}

bool differentials_differ(const MultigradedComplex& a, const MultigradedComplex& b) {
    if (a.diffs.size() != b.diffs.size()) return true;
    for (std::size_t i = 0; i < a.diffs.size(); ++i)
        if (entry_map(a, i) != entry_map(b, i)) return true;
    return false;
}

} // namespace llab
