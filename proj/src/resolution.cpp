#include "llab/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace llab {

std::vector<long long> MultigradedComplex::ranks() const {
    std::vector<long long> out;
    out.reserve(modules.size());
    for (const auto& m : modules) out.push_back(static_cast<long long>(m.size()));
    return out;
}

bool MultigradedComplex::homogeneous() const {
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        for (const auto& e : diffs[i]) {
            const ExpVec& col_deg = modules[i + 1][static_cast<std::size_t>(e.col)].degree;
            const ExpVec& row_deg = modules[i][static_cast<std::size_t>(e.row)].degree;
            if (col_deg != expvec_add(row_deg, e.mono)) return false;
        }
    }
    return true;
}

int sign_exponent(int var, const Bitset& support) { return support.rank_below(var); }

namespace {

ExpVec unit_mono(int nvars, int var) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return e;
}

std::string set_label(const VarSet& vars, const Bitset& b) {
    std::string s = "{";
    bool first = true;
    for (int k : b.elements()) {
        if (!first) s += ",";
        first = false;
        auto [p, i] = vars.var(k);
        s += "(" + vars.poset().name(p) + "," + std::to_string(i) + ")";
    }
    return s + "}";
}

std::string phi_label(const IsotoneMap& phi) {
    std::string s = "phi=(";
    for (std::size_t i = 0; i < phi.values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(phi.values[i]);
    }
    return s + ")";
}

} // namespace

MultigradedComplex coletterplace_resolution(const PosetIdeal& ideal) {
    if (ideal.empty()) throw EmptyPosetIdeal("resolution of the empty co-letterplace ideal");
    const Poset& poset = ideal.poset();
    VarSet vars = VarSet::full(poset, ideal.n());
    const int nv = vars.size();

    struct Entry {
        Bitset a;
        IsotoneMap phi;
        Bitset d;
    };
    std::vector<std::vector<Entry>> by_index;
    for (const auto& phi : ideal.members()) {
        Bitset gamma = graph_monomial(vars, phi);
        Bitset extra = t_star_lower(vars, phi) - gamma;
        for (const auto& d : subsets_of(extra)) {
            int i = d.count();
            if (i >= static_cast<int>(by_index.size())) by_index.resize(static_cast<std::size_t>(i) + 1);
            by_index[static_cast<std::size_t>(i)].push_back(Entry{gamma | d, phi, d});
        }
    }
    for (auto& entries : by_index)
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& x, const Entry& y) { return x.a < y.a; });

    MultigradedComplex c;
    for (int k = 0; k < nv; ++k) c.var_names.push_back(vars.var_name(k));
    std::unordered_map<Bitset, std::pair<int, int>, BitsetHash> position;
    c.modules.resize(by_index.size());
    for (std::size_t i = 0; i < by_index.size(); ++i) {
        for (const auto& e : by_index[i]) {
            GenTag tag;
            tag.phi = e.phi.values;
            for (int k : e.d.elements()) tag.pairs.push_back(vars.var(k));
            FreeGen gen{phi_label(e.phi) + " D=" + set_label(vars, e.d),
                        expvec_of_bitset(e.a, nv), std::move(tag)};
            position.emplace(e.a, std::make_pair(static_cast<int>(i),
                                                 static_cast<int>(c.modules[i].size())));
            c.modules[i].push_back(std::move(gen));
        }
    }

    c.diffs.resize(by_index.size() > 0 ? by_index.size() - 1 : 0);
    std::vector<int> fiber_count(static_cast<std::size_t>(poset.size()));
    for (std::size_t i = 1; i < by_index.size(); ++i) {
        for (std::size_t col = 0; col < by_index[i].size(); ++col) {
            const Bitset& a = by_index[i][col].a;
            std::fill(fiber_count.begin(), fiber_count.end(), 0);
            for (int k : a.elements()) ++fiber_count[static_cast<std::size_t>(vars.var(k).first)];
            for (int k : a.elements()) {
                if (fiber_count[static_cast<std::size_t>(vars.var(k).first)] < 2) continue;
                auto it = position.find(a.without(k));
                if (it == position.end() || it->second.first != static_cast<int>(i) - 1)
                    throw Error("admissible sets are not closed under the differential");
                int coeff = (sign_exponent(k, a) % 2 == 0) ? 1 : -1;
                c.diffs[i - 1].push_back(
                    DiffEntry{it->second.second, static_cast<int>(col), coeff, unit_mono(nv, k)});
            }
        }
    }
    return c;
}

namespace {

// Shared face-to-generator layout for the enriched cochain complex and its
// boundary-filtered version: module j holds the kept faces of size d+1-j.
MultigradedComplex cochain_complex_on(const SimplicialComplex& complex,
                                      const std::vector<Bitset>& kept_faces) {
    const int nv = complex.num_vertices();
    const int d = complex.dim();
    Bitset all;
    for (int v = 0; v < nv; ++v) all.set(v);

    std::vector<std::vector<Bitset>> by_size(static_cast<std::size_t>(d) + 2);
    for (const auto& f : kept_faces) by_size[static_cast<std::size_t>(f.count())].push_back(f);
    for (auto& faces : by_size) std::sort(faces.begin(), faces.end());

    std::unordered_map<Bitset, int, BitsetHash> pos;
    MultigradedComplex c;
    for (int v = 0; v < nv; ++v) c.var_names.push_back(complex.vertex_names()[static_cast<std::size_t>(v)]);

    int top_j = -1;
    for (int j = 0; j <= d + 1; ++j)
        if (!by_size[static_cast<std::size_t>(d + 1 - j)].empty()) top_j = j;
    c.modules.resize(static_cast<std::size_t>(top_j) + 1);
    for (int j = 0; j <= top_j; ++j) {
        for (const auto& f : by_size[static_cast<std::size_t>(d + 1 - j)]) {
            pos.emplace(f, static_cast<int>(c.modules[static_cast<std::size_t>(j)].size()));
            std::string label = "F={";
            bool first = true;
            for (int v : f.elements()) {
                if (!first) label += ",";
                first = false;
                label += complex.vertex_names()[static_cast<std::size_t>(v)];
            }
            label += "}";
            c.modules[static_cast<std::size_t>(j)].push_back(
                FreeGen{std::move(label), expvec_of_bitset(all - f, nv), GenTag{}});
        }
    }

    c.diffs.resize(static_cast<std::size_t>(top_j >= 0 ? top_j : 0));
    for (int j = 1; j <= top_j; ++j) {
        const auto& cols = by_size[static_cast<std::size_t>(d + 1 - j)];
        for (std::size_t col = 0; col < cols.size(); ++col) {
            const Bitset& f = cols[col];
            for (int v = 0; v < nv; ++v) {
                if (f.test(v)) continue;
                auto it = pos.find(f.with(v));
                if (it == pos.end()) continue;
                int coeff = (sign_exponent(v, f) % 2 == 0) ? 1 : -1;
                c.diffs[static_cast<std::size_t>(j - 1)].push_back(
                    DiffEntry{it->second, static_cast<int>(col), coeff, unit_mono(nv, v)});
            }
        }
    }
    return c;
}

} // namespace

MultigradedComplex enriched_cochain(const SimplicialComplex& complex) {
    if (complex.is_void()) throw Error("enriched cochain complex of the void complex");
    return cochain_complex_on(complex, complex.all_faces());
}

MultigradedComplex ball_resolution(const SimplicialComplex& complex, const CoefficientField& k) {
    BallCertificate cert = is_homology_ball(complex, k);
    if (!cert.is_ball) throw NotABall("ball resolution requires a certified homology ball");

    std::unordered_set<Bitset, BitsetHash> boundary_faces;
    for (const auto& f : cert.boundary.all_faces()) boundary_faces.insert(f);
    std::vector<Bitset> interior;
    for (const auto& f : complex.all_faces())
        if (!boundary_faces.count(f)) interior.push_back(f);

    MultigradedComplex c = cochain_complex_on(complex, interior);

    // Normalize index-0 signs along the facet adjacency graph so that the
    // augmentation e_F -> m_{F^c} kills every first syzygy. Consistency is
    // exactly orientability of the ball over k.
    if (c.modules.size() >= 2) {
        const std::size_t nfacets = c.modules[0].size();
        std::vector<std::vector<std::pair<int, int>>> by_col(c.modules[1].size());
        for (const auto& e : c.diffs[0])
            by_col[static_cast<std::size_t>(e.col)].emplace_back(e.row, e.coeff);
        std::vector<int> eps(nfacets, 0);
        for (std::size_t root = 0; root < nfacets; ++root) {
            if (eps[root] != 0) continue;
            eps[root] = 1;
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& colents : by_col) {
                    if (colents.size() != 2) continue;
                    auto [r1, c1] = colents[0];
                    auto [r2, c2] = colents[1];
                    int e1 = eps[static_cast<std::size_t>(r1)];
                    int e2 = eps[static_cast<std::size_t>(r2)];
                    if (e1 != 0 && e2 == 0) {
                        eps[static_cast<std::size_t>(r2)] = -e1 * c1 * c2;
                        changed = true;
                    } else if (e2 != 0 && e1 == 0) {
                        eps[static_cast<std::size_t>(r1)] = -e2 * c1 * c2;
                        changed = true;
                    } else if (e1 != 0 && e2 != 0 && c1 * e1 + c2 * e2 != 0) {
                        throw CertificationFailed(
                            "homology ball admits no consistent orientation over " + k.name());
                    }
                }
            }
        }
        for (auto& e : c.diffs[0])
            if (eps[static_cast<std::size_t>(e.row)] < 0) e.coeff = -e.coeff;
    }
    return c;
}

std::vector<long long> ball_resolution_ranks(const FVector& ball, const FVector& boundary) {
    std::vector<long long> out;
    const int top = static_cast<int>(ball.counts.size()) - 1; // faces of size `top` are facets
    for (int size = top; size >= 0; --size) {
        long long b = size < static_cast<int>(boundary.counts.size())
                          ? boundary.counts[static_cast<std::size_t>(size)]
                          : 0;
        out.push_back(ball.counts[static_cast<std::size_t>(size)] - b);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

MultigradedComplex taylor_complex(const VarSet& vars, const std::vector<SqfMonomial>& gens) {
    const int r = static_cast<int>(gens.size());
    const int nv = vars.size();
    MultigradedComplex c;
    for (int k = 0; k < nv; ++k) c.var_names.push_back(vars.var_name(k));
    if (r == 0) return c;

    // Subsets of the generator index set, grouped by cardinality.
    std::vector<std::vector<std::vector<int>>> by_card(static_cast<std::size_t>(r) + 1);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (!cur.empty()) by_card[cur.size()].push_back(cur);
        for (int i = start; i < r; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    auto lcm_of = [&](const std::vector<int>& s) {
        Bitset b;
        for (int i : s) b = b | gens[static_cast<std::size_t>(i)];
        return b;
    };

    std::map<std::vector<int>, int> pos;
    c.modules.resize(static_cast<std::size_t>(r));
    for (int card = 1; card <= r; ++card) {
        for (const auto& s : by_card[static_cast<std::size_t>(card)]) {
            pos.emplace(s, static_cast<int>(c.modules[static_cast<std::size_t>(card - 1)].size()));
            std::string label = "T={";
            for (std::size_t i = 0; i < s.size(); ++i)
                label += (i ? "," : "") + std::to_string(s[i]);
            label += "}";
            c.modules[static_cast<std::size_t>(card - 1)].push_back(
                FreeGen{std::move(label), expvec_of_bitset(lcm_of(s), nv), GenTag{}});
        }
    }
    c.diffs.resize(static_cast<std::size_t>(r - 1));
    for (int card = 2; card <= r; ++card) {
        const auto& sets = by_card[static_cast<std::size_t>(card)];
        for (const auto& s : sets) {
            int col = pos.at(s);
            Bitset big = lcm_of(s);
            for (std::size_t t = 0; t < s.size(); ++t) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
                Bitset small = lcm_of(sub);
                int coeff = (t % 2 == 0) ? 1 : -1;
                c.diffs[static_cast<std::size_t>(card - 2)].push_back(
                    DiffEntry{pos.at(sub), col, coeff, expvec_of_bitset(big - small, nv)});
            }
        }
    }
    return c;
}

bool verify_d_squared(const MultigradedComplex& complex) {
    for (std::size_t i = 0; i + 1 < complex.diffs.size(); ++i) {
        std::vector<std::vector<DiffEntry>> inner_by_col(complex.modules[i + 1].size());
        for (const auto& e : complex.diffs[i]) inner_by_col[static_cast<std::size_t>(e.col)].push_back(e);
        std::vector<std::vector<DiffEntry>> outer_by_col(complex.modules[i + 2].size());
        for (const auto& e : complex.diffs[i + 1]) outer_by_col[static_cast<std::size_t>(e.col)].push_back(e);

        for (const auto& outer : outer_by_col) {
            std::map<std::pair<int, ExpVec>, long long> acc;
            for (const auto& e2 : outer)
                for (const auto& e1 : inner_by_col[static_cast<std::size_t>(e2.row)])
                    acc[{e1.row, expvec_add(e1.mono, e2.mono)}] +=
                        static_cast<long long>(e1.coeff) * e2.coeff;
            for (const auto& [key, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

bool is_minimal(const MultigradedComplex& complex) {
    for (const auto& d : complex.diffs)
        for (const auto& e : d)
            if (e.coeff != 0 && total_degree(e.mono) == 0) return false;
    return true;
}

namespace {

bool all_squarefree(const MultigradedComplex& c, const std::vector<ExpVec>& gens) {
    for (const auto& mod : c.modules)
        for (const auto& g : mod)
            for (int x : g.degree)
                if (x > 1) return false;
    for (const auto& g : gens)
        for (int x : g)
            if (x > 1) return false;
    return true;
}

struct StrandChecker {
    const MultigradedComplex& c;
    const std::vector<ExpVec>& gens;
    const CoefficientField& k;
    // diffs grouped by source column, duplicate (row,col) entries merged
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> by_col;
    std::vector<std::vector<int>> rowmap; // scratch: global row -> local row, per module
    // squarefree fast path: degrees as bitsets
    bool squarefree = false;
    std::vector<std::vector<Bitset>> deg_bits;
    std::vector<Bitset> gen_bits;

    explicit StrandChecker(const MultigradedComplex& c_, const std::vector<ExpVec>& gens_,
                           const CoefficientField& k_, bool squarefree_)
        : c(c_), gens(gens_), k(k_), squarefree(squarefree_) {
        by_col.resize(c.diffs.size());
        for (std::size_t i = 0; i < c.diffs.size(); ++i) {
            std::vector<std::map<int, long long>> merged(c.modules[i + 1].size());
            for (const auto& e : c.diffs[i]) merged[static_cast<std::size_t>(e.col)][e.row] += e.coeff;
            by_col[i].resize(merged.size());
            for (std::size_t col = 0; col < merged.size(); ++col)
                for (const auto& [row, v] : merged[col])
                    if (v != 0) by_col[i][col].emplace_back(row, v);
        }
        rowmap.resize(c.modules.size());
        for (std::size_t i = 0; i < c.modules.size(); ++i)
            rowmap[i].assign(c.modules[i].size(), -1);
        if (squarefree) {
            deg_bits.resize(c.modules.size());
            for (std::size_t i = 0; i < c.modules.size(); ++i)
                for (const auto& g : c.modules[i]) deg_bits[i].push_back(bits_of(g.degree));
            for (const auto& g : gens) gen_bits.push_back(bits_of(g));
        }
    }

    static Bitset bits_of(const ExpVec& e) {
        Bitset b;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) b.set(static_cast<int>(v));
        return b;
    }

    bool ideal_contains(const ExpVec& b) const {
        for (const auto& g : gens)
            if (expvec_leq(g, b)) return true;
        return false;
    }

    // Exactness of the strand at multidegree b, with H_0 of dimension 1
    // exactly when x^b lies in the ideal.
    bool check(const ExpVec& b) {
        Bitset bb = squarefree ? bits_of(b) : Bitset();
        const std::size_t len = c.modules.size();
        std::vector<std::vector<int>> active(len);
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t g = 0; g < c.modules[i].size(); ++g) {
                bool in = squarefree ? deg_bits[i][g].subset_of(bb)
                                     : expvec_leq(c.modules[i][g].degree, b);
                if (in) {
                    rowmap[i][g] = static_cast<int>(active[i].size());
                    active[i].push_back(static_cast<int>(g));
                }
            }
        }
        std::vector<int> r(len + 1, 0);
        for (std::size_t i = 0; i + 1 < len; ++i) {
            if (active[i + 1].empty() || active[i].empty()) continue;
            SparseIntMatrix m;
            m.rows = static_cast<int>(active[i].size());
            for (int g : active[i + 1]) {
                std::vector<std::pair<int, long long>> col;
                for (const auto& [row, v] : by_col[i][static_cast<std::size_t>(g)])
                    col.emplace_back(rowmap[i][static_cast<std::size_t>(row)], v);
                std::sort(col.begin(), col.end());
                m.add_column(std::move(col));
            }
            r[i + 1] = rank(m, k);
        }
        bool contains;
        if (squarefree) {
            contains = false;
            for (const auto& g : gen_bits)
                if (g.subset_of(bb)) {
                    contains = true;
                    break;
                }
        } else {
            contains = ideal_contains(b);
        }
        bool ok = true;
        int h0 = static_cast<int>(active[0].size()) - r[1];
        if (h0 != (contains ? 1 : 0)) ok = false;
        for (std::size_t i = 1; i < len && ok; ++i)
            if (static_cast<int>(active[i].size()) - r[i] - r[i + 1] != 0) ok = false;
        for (std::size_t i = 0; i < len; ++i)
            for (int g : active[i]) rowmap[i][static_cast<std::size_t>(g)] = -1;
        return ok;
    }
};

} // namespace

bool verify_resolves(const MultigradedComplex& complex, const std::vector<ExpVec>& gens,
                     const CoefficientField& k) {
    const std::size_t nv = complex.var_names.size();
    for (const auto& g : gens)
        if (g.size() != nv) throw Error("ideal generators over a different variable set");
    if (!complex.homogeneous()) return false;

    bool empty = true;
    for (const auto& m : complex.modules) empty = empty && m.empty();
    if (empty) return gens.empty();

    // Minimal generators of the ideal must coincide with the index-0 degrees
    // up to divisibility: every degree lies in the ideal and every minimal
    // generator appears as a degree.
    std::vector<ExpVec> min_gens;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (h != g && expvec_leq(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) min_gens.push_back(g);
    }
    for (const auto& gen : complex.modules[0]) {
        bool inside = false;
        for (const auto& g : gens)
            if (expvec_leq(g, gen.degree)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    for (const auto& g : min_gens) {
        bool found = false;
        for (const auto& gen : complex.modules[0])
            if (gen.degree == g) {
                found = true;
                break;
            }
        if (!found) return false;
    }

    // Augmentation e_g -> x^{deg g} composed with d_1 must vanish; by
    // homogeneity this is a scalar condition per column.
    if (complex.modules.size() >= 2) {
        std::vector<long long> colsum(complex.modules[1].size(), 0);
        for (const auto& e : complex.diffs[0]) colsum[static_cast<std::size_t>(e.col)] += e.coeff;
        for (long long v : colsum)
            if (v != 0) return false;
    }

    const bool squarefree = all_squarefree(complex, gens);
    StrandChecker checker(complex, gens, k, squarefree);

    if (squarefree) {
        Bitset u;
        for (const auto& mod : complex.modules)
            for (const auto& g : mod)
                for (std::size_t v = 0; v < nv; ++v)
                    if (g.degree[v]) u.set(static_cast<int>(v));
        for (const auto& g : gens)
            for (std::size_t v = 0; v < nv; ++v)
                if (g[v]) u.set(static_cast<int>(v));
        for (const auto& b : subsets_of(u))
            if (!checker.check(expvec_of_bitset(b, static_cast<int>(nv)))) return false;
        return true;
    }

    // General multidegrees: sweep the divisor box of all degrees involved.
    ExpVec box(nv, 0);
    for (const auto& mod : complex.modules)
        for (const auto& g : mod)
            for (std::size_t v = 0; v < nv; ++v) box[v] = std::max(box[v], g.degree[v]);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nv; ++v) box[v] = std::max(box[v], g[v]);
    long long cells = 1;
    for (std::size_t v = 0; v < nv; ++v) {
        cells *= box[v] + 1;
        if (cells > 2'000'000) throw Error("multidegree box too large to sweep");
    }
    ExpVec b(nv, 0);
    while (true) {
        if (!checker.check(b)) return false;
        std::size_t v = 0;
        while (v < nv && b[v] == box[v]) b[v++] = 0;
        if (v == nv) break;
        ++b[v];
    }
    return true;
}

bool verify_resolves(const MultigradedComplex& complex, const SqfMonomialIdeal& ideal,
                     const CoefficientField& k) {
    std::vector<ExpVec> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) gens.push_back(expvec_of_bitset(g, ideal.vars().size()));
    return verify_resolves(complex, gens, k);
}

BettiTable betti_table(const MultigradedComplex& complex) {
    if (!is_minimal(complex)) throw NotMinimal("Betti table of a non-minimal complex");
    BettiTable t;
    for (std::size_t i = 0; i < complex.modules.size(); ++i)
        for (const auto& g : complex.modules[i]) t.add(static_cast<int>(i), g.degree, 1);
    return t;
}

} // namespace llab
