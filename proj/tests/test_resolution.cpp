#include <doctest.h>

#include "llab/resolution.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {
const CoefficientField kQ = CoefficientField::rationals();

Bitset mono(const VarSet& vars, std::initializer_list<std::pair<const char*, int>> pairs) {
    Bitset b;
    for (const auto& [name, i] : pairs) b.set(vars.index(vars.poset().index(name), i));
    return b;
}

PosetIdeal e1_ideal() {
    return poset_ideal(chain_poset(2), 2, {IsotoneMap{{1, 2}}});
}
} // namespace

TEST_CASE("sign exponent") {
    Poset chain = chain_poset(2);
    VarSet vars = VarSet::full(chain, 2); // order (p1,1) < (p1,2) < (p2,1) < (p2,2)
    Bitset r = mono(vars, {{"p1", 1}, {"p2", 1}, {"p2", 2}});
    CHECK(sign_exponent(vars.index(0, 1), r) == 0);
    CHECK(sign_exponent(vars.index(1, 1), r) == 1);
    CHECK(sign_exponent(vars.index(1, 2), r) == 2);
}

TEST_CASE("co-letterplace resolution of the running example") {
    MultigradedComplex c = coletterplace_resolution(e1_ideal());
    REQUIRE(c.ranks() == std::vector<long long>{2, 1});
    // the unique syzygy: d(e_A) = -x_{p2,1} e_{Gamma(1,2)} + x_{p2,2} e_{Gamma(1,1)}
    REQUIRE(c.diffs[0].size() == 2);
    VarSet vars = VarSet::full(chain_poset(2), 2);
    ExpVec deg11 = expvec_of_bitset(mono(vars, {{"p1", 1}, {"p2", 1}}), 4);
    ExpVec deg12 = expvec_of_bitset(mono(vars, {{"p1", 1}, {"p2", 2}}), 4);
    for (const auto& e : c.diffs[0]) {
        const ExpVec& target = c.modules[0][static_cast<std::size_t>(e.row)].degree;
        if (target == deg12) {
            CHECK(e.coeff == -1);
            CHECK(e.mono == expvec_of_bitset(mono(vars, {{"p2", 1}}), 4));
        } else {
            CHECK(target == deg11);
            CHECK(e.coeff == 1);
            CHECK(e.mono == expvec_of_bitset(mono(vars, {{"p2", 2}}), 4));
        }
    }
    CHECK(verify_d_squared(c));
    CHECK(is_minimal(c));
    CHECK(verify_resolves(c, coletterplace_ideal(e1_ideal()), kQ));
}

TEST_CASE("resolution degenerate and antichain cases") {
    Poset chain = chain_poset(2);
    MultigradedComplex single =
        coletterplace_resolution(poset_ideal(chain, 2, {IsotoneMap{{1, 1}}}));
    CHECK(single.ranks() == std::vector<long long>{1});
    CHECK(single.diffs.empty());

    PosetIdeal hom22 = full_hom_ideal(antichain_poset(2), 2);
    MultigradedComplex c = coletterplace_resolution(hom22);
    CHECK(c.ranks() == std::vector<long long>{4, 4, 1});
    CHECK(verify_d_squared(c));
    CHECK(verify_resolves(c, coletterplace_ideal(hom22), kQ));
    CHECK(betti_table(c) == hochster_betti(coletterplace_ideal(hom22), kQ));

    CHECK_THROWS_AS(coletterplace_resolution(poset_ideal(chain, 2, {})), EmptyPosetIdeal);
}

TEST_CASE("closed-form ranks") {
    for (const Poset& p : oracles::small_posets(3)) {
        const int n = 2;
        VarSet vars = VarSet::full(p, n);
        PosetIdeal j = full_hom_ideal(p, n);
        MultigradedComplex c = coletterplace_resolution(j);
        std::vector<long long> closed;
        for (const auto& phi : j.members()) {
            int extra = (t_star_lower(vars, phi) - graph_monomial(vars, phi)).count();
            if (extra + 1 > static_cast<int>(closed.size()))
                closed.resize(static_cast<std::size_t>(extra) + 1, 0);
            long long binom = 1;
            for (int i = 0; i <= extra; ++i) {
                closed[static_cast<std::size_t>(i)] += binom;
                binom = binom * (extra - i) / (i + 1);
            }
        }
        CHECK(c.ranks() == closed);
    }
}

TEST_CASE("enriched cochain complex") {
    // two points: S(-{u}^c) + S(-{v}^c) <- S(-1)
    std::vector<std::string> names = {"u", "v"};
    Bitset u, v;
    u.set(0);
    v.set(1);
    SimplicialComplex two_points(names, {u, v});
    MultigradedComplex c = enriched_cochain(two_points);
    REQUIRE(c.ranks() == std::vector<long long>{2, 1});
    CHECK(c.modules[1][0].degree == ExpVec{1, 1});
    CHECK(c.modules[0][0].degree == ExpVec{0, 1}); // {u}^c = {v}
    CHECK(verify_d_squared(c));

    // d^2 = 0 on staircase complexes
    for (const Poset& p : oracles::small_posets(3))
        for (int n = 2; n <= 3; ++n)
            CHECK(verify_d_squared(enriched_cochain(staircase_complex(p, n))));

    SimplicialComplex cycle4(std::vector<std::string>{"1", "2", "3", "4"},
                             [] {
                                 std::vector<Bitset> fs;
                                 for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
                                     Bitset f;
                                     f.set(a);
                                     f.set(b);
                                     fs.push_back(f);
                                 }
                                 return fs;
                             }());
    CHECK(verify_d_squared(enriched_cochain(cycle4)));
}

TEST_CASE("d^2 catches an injected sign fault") {
    MultigradedComplex c = coletterplace_resolution(full_hom_ideal(antichain_poset(2), 2));
    REQUIRE(verify_d_squared(c));
    REQUIRE(c.diffs.size() >= 2);
    c.diffs[1][0].coeff = -c.diffs[1][0].coeff;
    CHECK(!verify_d_squared(c));
}

TEST_CASE("ball resolution of the path") {
    std::vector<std::string> names = {"u", "m", "v"};
    Bitset um, mv, m;
    um.set(0);
    um.set(1);
    mv.set(1);
    mv.set(2);
    m.set(1);
    SimplicialComplex path(names, {um, mv});
    MultigradedComplex c = ball_resolution(path, kQ);
    REQUIRE(c.ranks() == std::vector<long long>{2, 1});
    CHECK(c.modules[1][0].degree == ExpVec{1, 0, 1}); // {m}^c = {u,v}
    CHECK(verify_d_squared(c));
    CHECK(is_minimal(c));

    VarSet vars = VarSet::full(antichain_poset(3), 1);
    SqfMonomialIdeal target = alexander_dual(sr_ideal(path, vars));
    CHECK(verify_resolves(c, target, kQ));

    CHECK_THROWS_AS(ball_resolution(SimplicialComplex(names, {um, mv, Bitset().with(0).with(2)}),
                                    kQ),
                    NotABall);
}

TEST_CASE("single edge ball resolution") {
    std::vector<std::string> names = {"u", "v"};
    Bitset uv;
    uv.set(0);
    uv.set(1);
    SimplicialComplex edge(names, {uv});
    MultigradedComplex c = ball_resolution(edge, kQ);
    CHECK(c.ranks() == std::vector<long long>{1});
    CHECK(c.modules[0][0].degree == ExpVec{0, 0});
}

TEST_CASE("ball resolution ranks from f-vectors reproduce the 9-vertex example") {
    FVector ball{{1, 9, 33, 43, 18}};
    FVector boundary{{1, 9, 21, 14}};
    CHECK(ball_resolution_ranks(ball, boundary) == std::vector<long long>{18, 29, 12});
}

TEST_CASE("Taylor complex") {
    Poset anti = antichain_poset(2);
    VarSet vars = VarSet::full(anti, 1);
    Bitset x1, x2;
    x1.set(0);
    x2.set(1);

    // on the minimal set {x1, x2} it is the Koszul complex
    SqfMonomialIdeal koszul(vars, {x1, x2});
    MultigradedComplex c = taylor_complex(vars, {x1, x2});
    CHECK(c.ranks() == std::vector<long long>{2, 1});
    CHECK(verify_d_squared(c));
    CHECK(is_minimal(c));
    CHECK(verify_resolves(c, koszul, kQ));

    // on the redundant set {x1, x2, x1x2} it resolves (x1, x2) but carries
    // unit entries
    MultigradedComplex t = taylor_complex(vars, {x1, x2, x1 | x2});
    CHECK(t.ranks() == std::vector<long long>{3, 3, 1});
    CHECK(verify_d_squared(t));
    CHECK(!is_minimal(t));
    std::vector<ExpVec> gens = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(verify_resolves(t, gens, kQ));
}

TEST_CASE("verify_resolves rejects the wrong ideal") {
    MultigradedComplex c = coletterplace_resolution(e1_ideal());
    SqfMonomialIdeal wrong = coletterplace_ideal(full_hom_ideal(chain_poset(2), 2));
    CHECK(!verify_resolves(c, wrong, kQ));

    MultigradedComplex zero;
    zero.var_names = {"x", "y"};
    CHECK(verify_resolves(zero, std::vector<ExpVec>{}, kQ));
    CHECK(!verify_resolves(zero, std::vector<ExpVec>{{1, 0}}, kQ));
}

TEST_CASE("minimality") {
    CHECK(is_minimal(coletterplace_resolution(e1_ideal())));
    MultigradedComplex zero;
    CHECK(is_minimal(zero));

    Poset anti = antichain_poset(2);
    VarSet vars = VarSet::full(anti, 1);
    Bitset x1, x2;
    x1.set(0);
    x2.set(1);
    MultigradedComplex t = taylor_complex(vars, {x1, x2, x1 | x2});
    CHECK(!is_minimal(t));
    CHECK_THROWS_AS(betti_table(t), NotMinimal);
}

TEST_CASE("Betti table of the running example") {
    MultigradedComplex c = coletterplace_resolution(e1_ideal());
    BettiTable t = betti_table(c);
    CHECK(t.coarse() == std::map<std::pair<int, int>, long long>{{{0, 2}, 2}, {{1, 3}, 1}});
    CHECK(t == hochster_betti(coletterplace_ideal(e1_ideal()), kQ));
    CHECK(t.ranks() == std::vector<long long>{2, 1});
}
