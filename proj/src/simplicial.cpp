#include "llab/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace llab {

namespace {
std::vector<Bitset> maximalize(std::vector<Bitset> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Bitset> out;
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        bool contained = false;
        for (const auto& f : out)
            if (it->subset_of(f)) {
                contained = true;
                break;
            }
        if (!contained) out.push_back(*it);
    }
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     std::vector<Bitset> facets)
    : vertex_names_(std::move(vertex_names)), facets_(maximalize(std::move(facets))) {}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.count() != dim() + 1) return false;
    return true;
}

bool SimplicialComplex::is_face(const Bitset& f) const {
    for (const auto& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<Bitset> SimplicialComplex::all_faces() const {
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& f : facets_)
        for (const auto& s : subsets_of(f)) seen.insert(s);
    std::vector<Bitset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Bitset>> SimplicialComplex::faces_by_size() const {
    std::vector<std::vector<Bitset>> by_size(static_cast<std::size_t>(dim() + 2 >= 0 ? dim() + 2 : 0));
    for (const auto& f : all_faces()) by_size[static_cast<std::size_t>(f.count())].push_back(f);
    return by_size;
}

std::string fvector_to_string(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(f.counts[i]);
    }
    return s + ")";
}

SimplicialComplex complex_of_ideal(const SqfMonomialIdeal& ideal) {
    if (ideal.is_unit()) throw UnitIdeal("the unit ideal has no Stanley-Reisner complex");
    // Facets are the complements of the minimal transversals of the
    // generator supports.
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
    Bitset all = ideal.vars().all_vars();
    std::vector<Bitset> facets;
    facets.reserve(trans.size());
    for (const auto& t : trans) facets.push_back(all - t);
    std::vector<std::string> names;
    for (int k = 0; k < ideal.vars().size(); ++k) names.push_back(ideal.vars().var_name(k));
    return SimplicialComplex(std::move(names), std::move(facets));
}

std::vector<Bitset> minimal_nonfaces(const SimplicialComplex& complex) {
    // Breadth-first over the face poset: a minimal nonface has all proper
    // subsets faces, so it is an extension of a face by one vertex.
    std::unordered_set<Bitset, BitsetHash> faces;
    for (const auto& f : complex.all_faces()) faces.insert(f);
    const int nv = complex.num_vertices();
    std::vector<Bitset> out;
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> frontier = complex.all_faces();
    if (complex.is_void()) {
        out.push_back(Bitset());
        return out;
    }
    for (const auto& f : frontier) {
        for (int v = 0; v < nv; ++v) {
            if (f.test(v)) continue;
            Bitset cand = f.with(v);
            if (faces.count(cand) || seen.count(cand)) continue;
            bool minimal = true;
            for (int w : cand.elements())
                if (!faces.count(cand.without(w))) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                seen.insert(cand);
                out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SqfMonomialIdeal sr_ideal(const SimplicialComplex& complex, const VarSet& vars) {
    if (vars.size() != complex.num_vertices())
        throw Error("variable set does not match the complex's vertex set");
    return SqfMonomialIdeal(vars, minimal_nonfaces(complex));
}

FVector f_vector(const SimplicialComplex& complex) {
    if (complex.is_void()) throw Error("f-vector of the void complex");
    FVector f;
    for (const auto& sized : complex.faces_by_size())
        f.counts.push_back(static_cast<long long>(sized.size()));
    return f;
}

SimplicialComplex link(const SimplicialComplex& complex, const Bitset& face) {
    if (!complex.is_face(face)) throw NotAFace("link of a non-face");
    std::vector<Bitset> facets;
    for (const auto& f : complex.facets())
        if (face.subset_of(f)) facets.push_back(f - face);
    return SimplicialComplex(complex.vertex_names(), std::move(facets));
}

std::vector<int> homology_of_faces(const std::vector<std::vector<Bitset>>& by_size,
                                   const CoefficientField& k) {
    const int top = static_cast<int>(by_size.size());
    if (top == 0) return {};
    std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int s = 1; s < top; ++s) {
        const auto& rows = by_size[static_cast<std::size_t>(s - 1)];
        const auto& cols = by_size[static_cast<std::size_t>(s)];
        if (rows.empty() || cols.empty()) continue;
        std::unordered_map<Bitset, int, BitsetHash> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r)
            row_index.emplace(rows[r], static_cast<int>(r));
        SparseIntMatrix m;
        m.rows = static_cast<int>(rows.size());
        for (const auto& f : cols) {
            std::vector<std::pair<int, long long>> col;
            int sign = 1;
            for (int v : f.elements()) {
                col.emplace_back(row_index.at(f.without(v)), sign);
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
            m.add_column(std::move(col));
        }
        ranks[static_cast<std::size_t>(s)] = rank(m, k);
    }
    std::vector<int> dims(static_cast<std::size_t>(top), 0);
    for (int s = 0; s < top; ++s)
        dims[static_cast<std::size_t>(s)] =
            static_cast<int>(by_size[static_cast<std::size_t>(s)].size()) -
            ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s) + 1];
    return dims;
}

std::vector<int> reduced_homology(const SimplicialComplex& complex, const CoefficientField& k) {
    if (complex.is_void()) return {};
    return homology_of_faces(complex.faces_by_size(), k);
}

bool has_sphere_homology(const std::vector<int>& dims, int sphere_dim) {
    for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
        int expected = (s == sphere_dim + 1) ? 1 : 0;
        if (dims[static_cast<std::size_t>(s)] != expected) return false;
    }
    return sphere_dim + 1 < static_cast<int>(dims.size()) || sphere_dim == -2;
}

bool is_homology_sphere(const SimplicialComplex& complex, const CoefficientField& k) {
    if (complex.is_void()) return true;
    if (!complex.is_pure()) throw NotPure("sphere certification requires a pure complex");
    for (const auto& f : complex.all_faces()) {
        SimplicialComplex lk = link(complex, f);
        if (!has_sphere_homology(reduced_homology(lk, k), lk.dim())) return false;
    }
    return true;
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
    std::vector<Bitset> boundary_faces;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& f : complex.facets()) {
        for (int v : f.elements()) {
            Bitset g = f.without(v);
            if (seen.count(g)) continue;
            seen.insert(g);
            int count = 0;
            for (const auto& h : complex.facets())
                if (g.subset_of(h)) ++count;
            if (count == 1) boundary_faces.push_back(g);
        }
    }
    return SimplicialComplex(complex.vertex_names(), std::move(boundary_faces));
}

BallCertificate is_homology_ball(const SimplicialComplex& complex, const CoefficientField& k) {
    if (complex.is_void()) throw Error("ball certification of the void complex");
    if (!complex.is_pure()) throw NotPure("ball certification requires a pure complex");
    BallCertificate cert;
    cert.boundary = boundary_complex(complex);
    const int d = complex.dim();
    if (cert.boundary.dim() != d - 1 && !(cert.boundary.is_void() && d == -1)) return cert;
    if (!is_homology_sphere(cert.boundary, k)) return cert;
    for (const auto& f : complex.all_faces()) {
        SimplicialComplex lk = link(complex, f);
        std::vector<int> dims = reduced_homology(lk, k);
        bool ok;
        if (cert.boundary.is_face(f) && !cert.boundary.is_void()) {
            ok = std::all_of(dims.begin(), dims.end(), [](int x) { return x == 0; });
        } else {
            ok = has_sphere_homology(dims, lk.dim());
        }
        if (!ok) {
            cert.offending_face = f.elements();
            return cert;
        }
    }
    cert.is_ball = true;
    return cert;
}

int max_facets_through_codim1(const SimplicialComplex& complex) {
    int worst = 0;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& f : complex.facets()) {
        for (int v : f.elements()) {
            Bitset g = f.without(v);
            if (!seen.insert(g).second) continue;
            int count = 0;
            for (const auto& h : complex.facets())
                if (g.subset_of(h)) ++count;
            worst = std::max(worst, count);
        }
    }
    return worst;
}

bool codim1_faces_in_exactly_two(const SimplicialComplex& complex) {
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& f : complex.facets()) {
        for (int v : f.elements()) {
            Bitset g = f.without(v);
            if (!seen.insert(g).second) continue;
            int count = 0;
            for (const auto& h : complex.facets())
                if (g.subset_of(h)) ++count;
            if (count != 2) return false;
        }
    }
    return true;
}

namespace {

// Faces of the restriction of the Stanley-Reisner complex of `ideal` to
// sigma, grouped by cardinality. Walks the face downset directly.
std::vector<std::vector<Bitset>> restriction_faces(const SqfMonomialIdeal& ideal,
                                                   const Bitset& sigma) {
    std::vector<std::vector<Bitset>> by_size;
    by_size.push_back({Bitset()});
    std::vector<int> verts = sigma.elements();
    std::vector<std::pair<Bitset, std::size_t>> frontier = {{Bitset(), 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<Bitset, std::size_t>> next;
        for (const auto& [face, start] : frontier) {
            for (std::size_t vi = start; vi < verts.size(); ++vi) {
                Bitset cand = face.with(verts[vi]);
                if (ideal.contains(cand)) continue;
                next.emplace_back(cand, vi + 1);
            }
        }
        if (next.empty()) break;
        by_size.emplace_back();
        for (const auto& [face, start] : next) by_size.back().push_back(face);
        frontier = std::move(next);
    }
    return by_size;
}

} // namespace

BettiTable hochster_betti(const SqfMonomialIdeal& ideal, const CoefficientField& k,
                          bool exhaustive) {
    if (ideal.is_unit()) throw UnitIdeal("Hochster formula requires a proper ideal");
    BettiTable table;
    if (ideal.is_zero()) return table;

    std::vector<Bitset> sigmas;
    if (exhaustive) {
        Bitset u;
        for (const auto& g : ideal.gens()) u = u | g;
        for (const auto& s : subsets_of(u))
            if (ideal.contains(s)) sigmas.push_back(s);
    } else {
        // lcm lattice: close the generator supports under union.
        std::unordered_set<Bitset, BitsetHash> seen(ideal.gens().begin(), ideal.gens().end());
        std::vector<Bitset> queue(seen.begin(), seen.end());
        while (!queue.empty()) {
            Bitset s = queue.back();
            queue.pop_back();
            for (const auto& g : ideal.gens()) {
                Bitset u = s | g;
                if (seen.insert(u).second) queue.push_back(u);
            }
        }
        sigmas.assign(seen.begin(), seen.end());
        std::sort(sigmas.begin(), sigmas.end());
    }

    const int nvars = ideal.vars().size();
    for (const auto& sigma : sigmas) {
        std::vector<int> dims = homology_of_faces(restriction_faces(ideal, sigma), k);
        for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
            int d = dims[static_cast<std::size_t>(s)];
            if (d == 0) continue;
            int i = sigma.count() - s - 1; // H~_{s-1} contributes to beta_{i,sigma}
            if (i >= 0) table.add(i, expvec_of_bitset(sigma, nvars), d);
        }
    }
    return table;
}

} // namespace llab
