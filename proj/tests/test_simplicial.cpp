#include <doctest.h>

#include "llab/simplicial.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {

SimplicialComplex make_complex(int nverts, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<std::string> names;
    for (int v = 1; v <= nverts; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Bitset> fs;
    for (const auto& f : facets) {
        Bitset b;
        for (int v : f) b.set(v - 1);
        fs.push_back(b);
    }
    return SimplicialComplex(std::move(names), std::move(fs));
}

Bitset face(std::initializer_list<int> verts) {
    Bitset b;
    for (int v : verts) b.set(v - 1);
    return b;
}

const SimplicialComplex kPath3 = make_complex(3, {{1, 2}, {2, 3}});
const SimplicialComplex kCycle4 = make_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const SimplicialComplex kTriangleBoundary = make_complex(3, {{1, 2}, {2, 3}, {1, 3}});

// Minimal 6-vertex triangulation of the real projective plane; homology
// differs between QQ and GF(2).
const SimplicialComplex kRP2 = make_complex(6, {{1, 2, 3},
                                                {1, 2, 4},
                                                {1, 3, 5},
                                                {1, 4, 6},
                                                {1, 5, 6},
                                                {2, 3, 6},
                                                {2, 4, 5},
                                                {2, 5, 6},
                                                {3, 4, 5},
                                                {3, 4, 6}});

const CoefficientField kQ = CoefficientField::rationals();

} // namespace

TEST_CASE("complex of an ideal") {
    Poset anti = antichain_poset(2);
    VarSet vars = VarSet::full(anti, 1);
    Bitset x1x2 = vars.all_vars();
    SimplicialComplex two_points = complex_of_ideal(SqfMonomialIdeal(vars, {x1x2}));
    REQUIRE(two_points.facets().size() == 2);
    CHECK(two_points.dim() == 0);

    SimplicialComplex full = complex_of_ideal(SqfMonomialIdeal(vars, {}));
    CHECK(full.facets() == std::vector<Bitset>{x1x2});

    CHECK_THROWS_AS(complex_of_ideal(SqfMonomialIdeal(vars, {Bitset()})), UnitIdeal);
}

TEST_CASE("Stanley-Reisner roundtrip") {
    oracles::Rng rng(0x5eed);
    VarSet vars = VarSet::full(antichain_poset(3), 2);
    for (int trial = 0; trial < 30; ++trial) {
        SqfMonomialIdeal ideal(vars, oracles::random_gens(rng, vars.size(), 1 + rng.below(5), 4));
        if (ideal.is_unit()) continue;
        CHECK(sr_ideal(complex_of_ideal(ideal), vars) == ideal);
    }
}

TEST_CASE("f-vectors") {
    CHECK(f_vector(make_complex(3, {{1, 2, 3}})).counts == std::vector<long long>{1, 3, 3, 1});
    CHECK(f_vector(kCycle4).counts == std::vector<long long>{1, 4, 4});
    CHECK(f_vector(kPath3).counts == std::vector<long long>{1, 3, 2});
    CHECK(fvector_to_string(f_vector(kPath3)) == "(1, 3, 2)");
}

TEST_CASE("links") {
    SimplicialComplex lk = link(kCycle4, face({1}));
    CHECK(lk.dim() == 0);
    CHECK(lk.facets().size() == 2);

    CHECK(link(kCycle4, Bitset()) == kCycle4);
    CHECK(link(kPath3, face({1, 2})).facets() == std::vector<Bitset>{Bitset()});
    CHECK_THROWS_AS(link(kPath3, face({1, 3})), NotAFace);
}

TEST_CASE("reduced homology frozen examples") {
    CHECK(reduced_homology(make_complex(3, {{1, 2, 3}}), kQ) == std::vector<int>{0, 0, 0, 0});
    CHECK(reduced_homology(kCycle4, kQ) == std::vector<int>{0, 0, 1});
    CHECK(reduced_homology(make_complex(2, {{1}, {2}}), kQ) == std::vector<int>{0, 1});
    // the empty complex is the (-1)-sphere
    CHECK(reduced_homology(make_complex(1, {{}}), kQ) == std::vector<int>{1});
}

TEST_CASE("homology agrees with the dense oracle") {
    oracles::Rng rng(0x40304);
    std::vector<CoefficientField> fields = {kQ, CoefficientField::prime(2),
                                            CoefficientField::prime(3), CoefficientField::prime(5)};
    VarSet vars = VarSet::full(antichain_poset(3), 2);
    for (int trial = 0; trial < 25; ++trial) {
        SqfMonomialIdeal ideal(vars, oracles::random_gens(rng, vars.size(), 1 + rng.below(5), 4));
        if (ideal.is_unit()) continue;
        SimplicialComplex complex = complex_of_ideal(ideal);
        for (const auto& k : fields)
            CHECK(reduced_homology(complex, k) == oracles::brute_homology(complex, k));
    }
}

TEST_CASE("Euler characteristic identity") {
    for (const SimplicialComplex& c : {kPath3, kCycle4, kTriangleBoundary, kRP2}) {
        auto f = f_vector(c).counts;
        auto h = reduced_homology(c, CoefficientField::prime(2));
        long long chi_f = 0;
        for (std::size_t s = 1; s < f.size(); ++s) chi_f += (s % 2 ? 1 : -1) * f[s];
        long long chi_h = 1;
        for (std::size_t s = 1; s < h.size(); ++s) chi_h += (s % 2 ? 1 : -1) * h[s];
        CHECK(chi_f == chi_h);
    }
}

TEST_CASE("RP^2 homology depends on the field") {
    CHECK(reduced_homology(kRP2, kQ) == std::vector<int>{0, 0, 0, 0});
    CHECK(reduced_homology(kRP2, CoefficientField::prime(2)) == std::vector<int>{0, 0, 1, 1});
    CHECK(reduced_homology(kRP2, CoefficientField::prime(3)) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("homology sphere certification") {
    CHECK(is_homology_sphere(kCycle4, kQ));
    CHECK(!is_homology_sphere(kPath3, kQ));
    CHECK(is_homology_sphere(kTriangleBoundary, kQ));
    CHECK(is_homology_sphere(make_complex(1, {{}}), kQ)); // S^{-1}
    // RP^2 is a closed pseudo-manifold but never a homology sphere: over QQ
    // the top homology vanishes, over GF(2) the middle homology does not.
    CHECK(!is_homology_sphere(kRP2, kQ));
    CHECK(!is_homology_sphere(kRP2, CoefficientField::prime(2)));
    CHECK_THROWS_AS(is_homology_sphere(make_complex(3, {{1, 2}, {3}}), kQ), NotPure);
}

TEST_CASE("homology ball certification") {
    BallCertificate path = is_homology_ball(kPath3, kQ);
    CHECK(path.is_ball);
    CHECK(path.boundary.facets() == std::vector<Bitset>{face({1}), face({3})});

    BallCertificate cycle = is_homology_ball(kCycle4, kQ);
    CHECK(!cycle.is_ball);
    CHECK(cycle.boundary.is_void());

    BallCertificate edge = is_homology_ball(make_complex(2, {{1, 2}}), kQ);
    CHECK(edge.is_ball);
    CHECK(edge.boundary.facets() == std::vector<Bitset>{face({1}), face({2})});
}

TEST_CASE("boundary and pseudo-manifold helpers") {
    CHECK(boundary_complex(kCycle4).is_void());
    CHECK(boundary_complex(make_complex(1, {{1}})).facets() == std::vector<Bitset>{Bitset()});
    CHECK(max_facets_through_codim1(kCycle4) == 2);
    CHECK(codim1_faces_in_exactly_two(kCycle4));
    CHECK(!codim1_faces_in_exactly_two(kPath3));
    CHECK(max_facets_through_codim1(make_complex(3, {{1, 2}, {1, 3}, {2, 3}, {1}})) == 2);
}

TEST_CASE("Hochster Betti numbers, frozen examples") {
    Poset anti = antichain_poset(2);
    VarSet v2 = VarSet::full(anti, 1);
    SqfMonomialIdeal principal(v2, {v2.all_vars()});
    BettiTable t = hochster_betti(principal, kQ);
    CHECK(t.coarse() == std::map<std::pair<int, int>, long long>{{{0, 2}, 1}});

    // (x_{p1,1} x_{p2,1}, x_{p1,1} x_{p2,2}): beta_0 = 2 in degree 2, beta_1 = 1 in degree 3
    Poset chain = chain_poset(2);
    SqfMonomialIdeal lj = coletterplace_ideal(poset_ideal(chain, 2, {IsotoneMap{{1, 2}}}));
    CHECK(hochster_betti(lj, kQ).coarse() ==
          std::map<std::pair<int, int>, long long>{{{0, 2}, 2}, {{1, 3}, 1}});

    // Koszul: (x1, x2)
    Bitset x1, x2;
    x1.set(0);
    x2.set(1);
    SqfMonomialIdeal koszul(v2, {x1, x2});
    CHECK(hochster_betti(koszul, kQ).coarse() ==
          std::map<std::pair<int, int>, long long>{{{0, 1}, 2}, {{1, 2}, 1}});

    CHECK(hochster_betti(SqfMonomialIdeal(v2, {}), kQ).fine.empty());
    CHECK_THROWS_AS(hochster_betti(SqfMonomialIdeal(v2, {Bitset()}), kQ), UnitIdeal);
}

TEST_CASE("Hochster lattice mode equals exhaustive mode") {
    oracles::Rng rng(0xbe771);
    VarSet vars = VarSet::full(antichain_poset(3), 2);
    for (int trial = 0; trial < 15; ++trial) {
        SqfMonomialIdeal ideal(vars, oracles::random_gens(rng, vars.size(), 1 + rng.below(4), 4));
        if (ideal.is_unit() || ideal.is_zero()) continue;
        for (const auto& k : {kQ, CoefficientField::prime(2)})
            CHECK(hochster_betti(ideal, k, false) == hochster_betti(ideal, k, true));
    }
}
