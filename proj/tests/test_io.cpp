#include <doctest.h>

#include <nlohmann/json.hpp>

#include "llab/io.hpp"
#include "llab/spheres.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {
PosetIdeal e1_ideal() {
    return poset_ideal(chain_poset(2), 2, {IsotoneMap{{1, 2}}});
}

JobSpec e1_job(const std::string& command, const std::string& action) {
    JobSpec job;
    job.command = command;
    job.action = action;
    job.poset = chain_poset(2);
    job.n = 2;
    job.gens = {IsotoneMap{{1, 2}}};
    return job;
}
} // namespace

TEST_CASE("poset text parsing") {
    Poset chain = parse_poset_text("elements: a b\ncovers: a<b\n");
    CHECK(chain.size() == 2);
    CHECK(chain.leq(0, 1));

    Poset anti = parse_poset_text("elements: a b\ncovers:\n");
    CHECK(anti.is_antichain());

    CHECK_THROWS_AS(parse_poset_text("elements: a\ncovers: a<b\n"), UnknownElement);
    CHECK_THROWS_AS(parse_poset_text("covers: a<b\n"), ParseError);
    CHECK_THROWS_AS(parse_poset_text("elements: a b\ncovers: ab\n"), ParseError);
    CHECK_THROWS_AS(parse_poset_text("elements: a b\nfoo: bar\n"), ParseError);

    // round trip
    for (const Poset& p : oracles::small_posets(3)) CHECK(parse_poset_text(poset_to_text(p)) == p);
}

TEST_CASE("generator row parsing") {
    auto rows = parse_gen_rows("1 2; 1 1", 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].values == std::vector<int>{1, 2});
    CHECK(rows[1].values == std::vector<int>{1, 1});
    CHECK(parse_gen_rows("1, 2", 2)[0].values == std::vector<int>{1, 2});
    CHECK_THROWS_AS(parse_gen_rows("1 2 3", 2), ParseError);
    CHECK_THROWS_AS(parse_gen_rows("1 x", 2), ParseError);
}

TEST_CASE("JSON round trips") {
    for (const Poset& p : oracles::small_posets(3)) CHECK(poset_from_json(poset_to_json(p)) == p);

    SqfMonomialIdeal lj = coletterplace_ideal(e1_ideal());
    CHECK(ideal_from_json(ideal_to_json(lj)) == lj);
    SqfMonomialIdeal dual = alexander_dual(lj);
    CHECK(ideal_from_json(ideal_to_json(dual)) == dual);

    // restricted variable set
    RestrictedPair r = restrict_ideal(e1_ideal(), hull(e1_ideal()));
    CHECK(ideal_from_json(ideal_to_json(r.ideal)) == r.ideal);

    SimplicialComplex delta = delta_J(e1_ideal());
    CHECK(complex_from_json(complex_to_json(delta)) == delta);
}

TEST_CASE("Macaulay2 export is byte-stable") {
    SqfMonomialIdeal lj = coletterplace_ideal(e1_ideal());
    MultigradedComplex c = coletterplace_resolution(e1_ideal());
    std::string script = export_macaulay2_resolution(lj, c);
    CHECK(script == export_macaulay2_resolution(lj, c));
    const std::string expected =
        "-- variables x_(p,i) follow the fixed order; element names: p1 p2\n"
        "R = QQ[x_(1,1),x_(1,2),x_(2,1),x_(2,2)];\n"
        "I = ideal(x_(1,1)*x_(2,1),x_(1,1)*x_(2,2));\n"
        "F = res module I;\n"
        "assert(apply(2, i -> rank F_i) == {2,1});\n"
        "assert(apply(2, i -> sort apply(degrees F_i, sum)) == {{2,2},{3}});\n"
        "print betti F\n";
    CHECK(script == expected);

    std::string plain = export_macaulay2_ideal(lj);
    CHECK(plain.find("R = QQ[") != std::string::npos);
    CHECK(plain.find("betti res module I") != std::string::npos);
}

TEST_CASE("job reports") {
    Report betti = run(e1_job("resolve", ""));
    CHECK(betti.exit_code == 0);
    CHECK(betti.text.find("ranks: 2 1") != std::string::npos);
    CHECK(betti.text.find("(0,2):2 (1,3):1") != std::string::npos);

    JobSpec verify_job = e1_job("resolve", "");
    verify_job.verify = true;
    Report verified = run(verify_job);
    CHECK(verified.exit_code == 0);
    CHECK(verified.text.find("FAILED") == std::string::npos);

    // reports are identical across runs and thread counts
    JobSpec threaded = verify_job;
    threaded.threads = 2;
    CHECK(run(verify_job).text == verified.text);
    CHECK(run(threaded).text == verified.text);

    JobSpec certify;
    certify.command = "sphere";
    certify.action = "certify";
    certify.poset = antichain_poset(2);
    certify.n = 2;
    certify.all_gens = true;
    Report cert = run(certify);
    CHECK(cert.exit_code == 0);
    CHECK(cert.text.find("exception case") != std::string::npos);
    CHECK(cert.text.find("complete intersection: yes") != std::string::npos);

    // input errors exit with 1
    JobSpec bad = e1_job("resolve", "");
    bad.gens = {IsotoneMap{{2, 1}}};
    CHECK(run(bad).exit_code == 1);

    JobSpec unknown = e1_job("frobnicate", "");
    CHECK(run(unknown).exit_code == 1);
}

TEST_CASE("export job emits valid JSON") {
    Report rep = run(e1_job("export", "json"));
    REQUIRE(rep.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(rep.text);
    CHECK(j.contains("ideal"));
    CHECK(j.contains("resolution"));
    CHECK(ideal_from_json(j["ideal"]) == coletterplace_ideal(e1_ideal()));
    CHECK(j["resolution"]["modules"].size() == 2);
}
