#include "llab/spheres.hpp"

#include <algorithm>

#include "llab/betti.hpp"

namespace llab {

bool is_exception_case(const PosetIdeal& ideal) {
    return ideal.poset().is_antichain() && ideal.is_full();
}

SimplicialComplex delta_J(const PosetIdeal& ideal) {
    if (ideal.empty()) throw EmptyPosetIdeal("delta of the empty poset ideal");
    VarSet vars = VarSet::full(ideal.poset(), ideal.n());
    Bitset all = vars.all_vars();
    std::vector<Bitset> facets;
    facets.reserve(ideal.size());
    for (const auto& phi : ideal.members()) facets.push_back(all - graph_monomial(vars, phi));
    std::vector<std::string> names;
    for (int k = 0; k < vars.size(); ++k) names.push_back(vars.var_name(k));
    SimplicialComplex by_facets(std::move(names), std::move(facets));

    SimplicialComplex by_dual = complex_of_ideal(alexander_dual(coletterplace_ideal(ideal)));
    if (by_facets != by_dual)
        throw Error("facet complements and the dual construction of delta disagree");
    return by_facets;
}

SimplicialComplex sigma_J(const PosetIdeal& ideal) {
    if (ideal.empty()) throw EmptyPosetIdeal("sigma of the empty poset ideal");
    if (is_exception_case(ideal))
        throw ExceptionCase("P is an antichain and J is all of Hom; delta itself is the sphere");

    SqfMonomialIdeal lj = coletterplace_ideal(ideal);
    SqfMonomialIdeal bj = bJ_ideal(ideal);
    SimplicialComplex delta = delta_J(ideal);
    SimplicialComplex from_boundary = boundary_complex(delta);

    if (bj.is_zero()) {
        // Only with n = 1 on a non-antichain: B(P,1) = 0 and J^c is empty.
        // The boundary ideal is then the unit ideal and sigma is void.
        if (!from_boundary.is_void())
            throw CertificationFailed("boundary of delta should be empty when B(J) = 0");
        return from_boundary;
    }

    SqfMonomialIdeal boundary_ideal = sum(alexander_dual(lj), alexander_dual(bj));
    SimplicialComplex from_ideal = complex_of_ideal(boundary_ideal);
    SimplicialComplex from_intersection =
        complex_of_ideal(alexander_dual(intersect(lj, bj)));

    if (from_ideal != from_intersection)
        throw CertificationFailed("(L(J) n B(J))^A differs from L(J)^A + B(J)^A");
    if (from_ideal != from_boundary)
        throw CertificationFailed("sigma differs from the boundary complex of delta");
    return from_ideal;
}

namespace {
std::string face_string(const SimplicialComplex& c, const std::vector<int>& face) {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) s += ",";
        s += c.vertex_names()[static_cast<std::size_t>(face[i])];
    }
    return s + "}";
}
} // namespace

SphereCertificate certify_ball_or_sphere(const PosetIdeal& ideal, const CoefficientField& k) {
    SphereCertificate cert;
    cert.delta = delta_J(ideal);
    cert.delta_dim = cert.delta.dim();
    const int np = ideal.poset().size();
    const int n = ideal.n();

    if (max_facets_through_codim1(cert.delta) > 2)
        throw CertificationFailed("delta has a codimension-1 face in more than two facets");

    if (is_exception_case(ideal)) {
        cert.exception = true;
        if (!is_homology_sphere(cert.delta, k))
            throw CertificationFailed("exception-case delta is not a homology sphere over " +
                                      k.name());
        if (!codim1_faces_in_exactly_two(cert.delta))
            throw CertificationFailed("exception-case delta is not a pseudo-manifold");
        SqfMonomialIdeal dual = alexander_dual(coletterplace_ideal(ideal));
        if (dual != letterplace_ideal(n, ideal.poset()))
            throw CertificationFailed("dual of L(Hom) is not the letterplace ideal");
        if (static_cast<int>(dual.gens().size()) != np)
            throw CertificationFailed("complete intersection should have |P| generators");
        for (const auto& g : dual.gens())
            if (g.count() != n)
                throw CertificationFailed("complete intersection generator of wrong degree");
        for (std::size_t a = 0; a < dual.gens().size(); ++a)
            for (std::size_t b = a + 1; b < dual.gens().size(); ++b)
                if (dual.gens()[a].intersects(dual.gens()[b]))
                    throw CertificationFailed("complete intersection generators share support");
        cert.complete_intersection = true;
        return cert;
    }

    cert.boundary = sigma_J(ideal);
    cert.boundary_dim = cert.boundary.dim();

    BallCertificate ball = is_homology_ball(cert.delta, k);
    if (!ball.is_ball) {
        std::string face = ball.offending_face.empty()
                               ? std::string("(boundary sphere check)")
                               : face_string(cert.delta, ball.offending_face);
        throw CertificationFailed("delta is not a homology ball over " + k.name() + " at " + face);
    }
    if (ball.boundary != cert.boundary)
        throw CertificationFailed("ball boundary disagrees with sigma");
    if (cert.boundary_dim != n * np - np - 2)
        throw CertificationFailed("sigma has dimension " + std::to_string(cert.boundary_dim) +
                                  ", expected " + std::to_string(n * np - np - 2));
    if (!codim1_faces_in_exactly_two(cert.boundary))
        throw CertificationFailed("sigma is not a pseudo-manifold");
    return cert;
}

PosetIdeal bier_poset_ideal(const SimplicialComplex& x) {
    if (x.is_void()) throw Error("the void complex has no Bier sphere");
    const int d = x.num_vertices();
    Poset points = poset_from_covers(x.vertex_names(), {});
    std::vector<IsotoneMap> gens;
    for (const auto& f : x.facets()) {
        IsotoneMap phi;
        phi.values.assign(static_cast<std::size_t>(d), 1);
        for (int v : f.elements()) phi.values[static_cast<std::size_t>(v)] = 2;
        gens.push_back(phi);
    }
    return poset_ideal(points, 2, gens);
}

SimplicialComplex bier_sphere(const SimplicialComplex& x) {
    if (x.is_void()) throw Error("the void complex has no Bier sphere");
    const int d = x.num_vertices();
    Bitset all_points;
    for (int v = 0; v < d; ++v) all_points.set(v);
    if (x.is_face(all_points)) throw FullSimplex("the full simplex has no Bier sphere");

    // Alexander dual complex: sigma is a face iff its complement is a nonface.
    std::vector<Bitset> dual_facets;
    for (const auto& s : subsets_of(all_points))
        if (!x.is_face(all_points - s)) dual_facets.push_back(s);
    SimplicialComplex xdual(x.vertex_names(), std::move(dual_facets));

    Poset points = poset_from_covers(x.vertex_names(), {});
    VarSet vars = VarSet::full(points, 2);
    std::vector<Bitset> gens;
    for (const auto& nf : minimal_nonfaces(x)) {
        Bitset g;
        for (int v : nf.elements()) g.set(vars.index(v, 1));
        gens.push_back(g);
    }
    for (const auto& nf : minimal_nonfaces(xdual)) {
        Bitset g;
        for (int v : nf.elements()) g.set(vars.index(v, 2));
        gens.push_back(g);
    }
    for (int v = 0; v < d; ++v) {
        Bitset g;
        g.set(vars.index(v, 1));
        g.set(vars.index(v, 2));
        gens.push_back(g);
    }
    SimplicialComplex bier = complex_of_ideal(SqfMonomialIdeal(vars, std::move(gens)));

    SimplicialComplex sigma = sigma_J(bier_poset_ideal(x));
    if (bier.facets() != sigma.facets())
        throw CertificationFailed("Bier sphere and sigma(J_X) differ as facet sets");
    return bier;
}

RestrictedPair restrict_ideal(const PosetIdeal& ideal, const IsotoneMap& mu) {
    if (ideal.empty()) throw EmptyPosetIdeal("restriction of the empty poset ideal");
    if (!is_isotone(ideal.poset(), ideal.n(), mu))
        throw NotAnUpperBound("the bound must be an isotone map");
    if (!pointwise_leq(hull(ideal), mu))
        throw NotAnUpperBound("the bound lies below the hull of J");

    RestrictedPair out;
    out.vars = VarSet::restricted(ideal.poset(), ideal.n(), mu);
    std::vector<Bitset> gens;
    for (const auto& phi : ideal.members()) gens.push_back(graph_monomial(out.vars, phi));
    out.ideal = SqfMonomialIdeal(out.vars, std::move(gens));

    SqfMonomialIdeal dual_restricted = alexander_dual(out.ideal);
    out.complex = complex_of_ideal(dual_restricted);

    // Duality and restriction commute: the full dual's generators reindex to
    // the restricted dual's generators.
    VarSet full = VarSet::full(ideal.poset(), ideal.n());
    SqfMonomialIdeal dual_full = alexander_dual(coletterplace_ideal(ideal));
    std::vector<Bitset> reindexed;
    for (const auto& g : dual_full.gens()) {
        Bitset r;
        for (int k : g.elements()) {
            auto [p, i] = full.var(k);
            int kk = out.vars.index(p, i);
            if (kk < 0)
                throw CertificationFailed("dual generator involves a variable above the bound");
            r.set(kk);
        }
        reindexed.push_back(r);
    }
    if (SqfMonomialIdeal(out.vars, std::move(reindexed)) != dual_restricted)
        throw CertificationFailed("Alexander duality does not commute with the restriction");

    // Cone identity: the facets of delta(J) are the restricted facets joined
    // with the apex set (P x [n]) minus (P x [n]; mu).
    Bitset apex = full.all_vars();
    for (int kk = 0; kk < out.vars.size(); ++kk) {
        auto [p, i] = out.vars.var(kk);
        apex.reset(full.index(p, i));
    }
    std::vector<Bitset> lifted;
    for (const auto& f : out.complex.facets()) {
        Bitset big = apex;
        for (int kk : f.elements()) {
            auto [p, i] = out.vars.var(kk);
            big.set(full.index(p, i));
        }
        lifted.push_back(big);
    }
    std::sort(lifted.begin(), lifted.end());
    if (lifted != delta_J(ideal).facets())
        throw CertificationFailed("delta(J) is not the cone over the restricted complex");
    return out;
}

SqfMonomialIdeal polarize_artinian(const std::vector<ExpVec>& gens, const std::vector<int>& bounds) {
    const int d = static_cast<int>(bounds.size());
    for (int c : bounds)
        if (c < 1) throw NotDetermined("bounds must be positive");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != d) throw Error("generator over a different variable count");
        if (total_degree(g) == 0) throw NotDetermined("the unit ideal is not mu-determined");
        for (int t = 0; t < d; ++t)
            if (g[static_cast<std::size_t>(t)] < 0 ||
                g[static_cast<std::size_t>(t)] > bounds[static_cast<std::size_t>(t)])
                throw NotDetermined("generator exponent exceeds its bound");
    }
    auto contains = [&gens](const ExpVec& m) {
        for (const auto& g : gens)
            if (expvec_leq(g, m)) return true;
        return false;
    };
    for (int t = 0; t < d; ++t) {
        ExpVec power(static_cast<std::size_t>(d), 0);
        power[static_cast<std::size_t>(t)] = bounds[static_cast<std::size_t>(t)];
        if (!contains(power))
            throw NotDetermined("x_" + std::to_string(t + 1) + "^" +
                                std::to_string(bounds[static_cast<std::size_t>(t)]) +
                                " is missing from the ideal");
    }

    const int n = *std::max_element(bounds.begin(), bounds.end());
    Poset points = antichain_poset(d, "x");
    IsotoneMap mu{bounds};
    VarSet vars = VarSet::restricted(points, n, mu);

    std::vector<Bitset> polarized;
    for (const auto& g : gens) {
        Bitset b;
        for (int t = 0; t < d; ++t)
            for (int i = 1; i <= g[static_cast<std::size_t>(t)]; ++i) b.set(vars.index(t, i));
        polarized.push_back(b);
    }
    SqfMonomialIdeal result(vars, std::move(polarized));

    // Murai bridge: the same ideal arises as L^{<=mu}(J)^A for the poset
    // ideal of the monomials outside the artinian ideal.
    std::vector<IsotoneMap> members;
    ExpVec m(static_cast<std::size_t>(d), 0);
    while (true) {
        if (!contains(m)) {
            IsotoneMap phi;
            for (int t = 0; t < d; ++t)
                phi.values.push_back(m[static_cast<std::size_t>(t)] + 1);
            members.push_back(phi);
        }
        int t = 0;
        while (t < d && m[static_cast<std::size_t>(t)] == bounds[static_cast<std::size_t>(t)] - 1)
            m[static_cast<std::size_t>(t++)] = 0;
        if (t == d) break;
        ++m[static_cast<std::size_t>(t)];
    }
    if (members.empty()) throw NotDetermined("the ideal leaves no monomials below the bounds");
    PosetIdeal j = poset_ideal(points, n, members);
    std::vector<Bitset> lgens;
    for (const auto& phi : j.members()) lgens.push_back(graph_monomial(vars, phi));
    SqfMonomialIdeal bridge = alexander_dual(SqfMonomialIdeal(vars, std::move(lgens)));
    if (bridge != result)
        throw CertificationFailed("polarization differs from the restricted dual");
    return result;
}

} // namespace llab
