#include "llab/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "llab/betti.hpp"
#include "llab/parallel.hpp"
#include "llab/spheres.hpp"
#include "llab/stable.hpp"
#include "llab/staircase.hpp"

namespace llab {

using nlohmann::json;

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void parse_fail(int line, std::size_t col, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col + 1) +
                     ": " + what);
}

} // namespace

Poset parse_poset_text(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    bool saw_elements = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        std::size_t start = trimmed.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (trimmed[start] == '#') continue;

        if (trimmed.compare(start, 9, "elements:") == 0) {
            names = split_ws(trimmed.substr(start + 9));
            if (names.empty()) parse_fail(lineno, start + 9, "no elements declared");
            saw_elements = true;
        } else if (trimmed.compare(start, 7, "covers:") == 0) {
            if (!saw_elements) parse_fail(lineno, start, "covers before elements");
            for (const std::string& tok : split_ws(trimmed.substr(start + 7))) {
                std::size_t lt = tok.find('<');
                if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size())
                    parse_fail(lineno, line.find(tok), "expected a<b, got '" + tok + "'");
                covers.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
            }
        } else {
            parse_fail(lineno, start, "expected 'elements:' or 'covers:'");
        }
    }
    if (!saw_elements) throw ParseError("line 1, column 1: missing 'elements:' line");
    return poset_from_covers(names, covers);
}

std::string poset_to_text(const Poset& poset) {
    std::string out = "elements:";
    for (int p = 0; p < poset.size(); ++p) out += " " + poset.name(p);
    out += "\ncovers:";
    // Covers = strict relations with nothing in between.
    for (int p = 0; p < poset.size(); ++p)
        for (int q = 0; q < poset.size(); ++q) {
            if (!poset.less(p, q)) continue;
            bool is_cover = true;
            for (int r = 0; r < poset.size() && is_cover; ++r)
                if (r != p && r != q && poset.less(p, r) && poset.less(r, q)) is_cover = false;
            if (is_cover) out += " " + poset.name(p) + "<" + poset.name(q);
        }
    out += "\n";
    return out;
}

std::vector<IsotoneMap> parse_gen_rows(const std::string& text, int nelems) {
    std::vector<IsotoneMap> out;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) {
        std::replace(row.begin(), row.end(), ',', ' ');
        std::vector<std::string> toks = split_ws(row);
        if (toks.empty()) continue;
        IsotoneMap phi;
        for (const std::string& t : toks) {
            try {
                phi.values.push_back(std::stoi(t));
            } catch (const std::exception&) {
                throw ParseError("generator row value '" + t + "' is not an integer");
            }
        }
        if (static_cast<int>(phi.values.size()) != nelems)
            throw ParseError("generator row has " + std::to_string(phi.values.size()) +
                             " values, expected " + std::to_string(nelems));
        out.push_back(std::move(phi));
    }
    return out;
}

json poset_to_json(const Poset& poset) {
    json j;
    j["elements"] = poset.names();
    json rel = json::array();
    for (int p = 0; p < poset.size(); ++p)
        for (int q = 0; q < poset.size(); ++q)
            if (poset.less(p, q)) rel.push_back({poset.name(p), poset.name(q)});
    j["relations"] = rel;
    return j;
}

Poset poset_from_json(const json& j) {
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& pair : j.at("relations"))
        covers.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    return poset_from_covers(names, covers);
}

namespace {
json varset_to_json(const VarSet& vars) {
    json j;
    j["poset"] = poset_to_json(vars.poset());
    j["n"] = vars.n();
    json pairs = json::array();
    for (int k = 0; k < vars.size(); ++k) {
        auto [p, i] = vars.var(k);
        pairs.push_back({vars.poset().name(p), i});
    }
    j["pairs"] = pairs;
    return j;
}

VarSet varset_from_json(const json& j) {
    Poset poset = poset_from_json(j.at("poset"));
    int n = j.at("n").get<int>();
    VarSet full = VarSet::full(poset, n);
    if (j.at("pairs").size() == static_cast<std::size_t>(full.size())) return full;
    // Restricted variable set: recover the bound from the listed pairs.
    IsotoneMap mu;
    mu.values.assign(static_cast<std::size_t>(poset.size()), 0);
    for (const auto& pair : j.at("pairs")) {
        int p = poset.index(pair.at(0).get<std::string>());
        mu.values[static_cast<std::size_t>(p)] =
            std::max(mu.values[static_cast<std::size_t>(p)], pair.at(1).get<int>());
    }
    return VarSet::restricted(poset, n, mu);
}
} // namespace

json ideal_to_json(const SqfMonomialIdeal& ideal) {
    json j;
    j["varset"] = varset_to_json(ideal.vars());
    json gens = json::array();
    for (const auto& g : ideal.gens()) {
        json mono = json::array();
        for (int k : g.elements()) {
            auto [p, i] = ideal.vars().var(k);
            mono.push_back({ideal.vars().poset().name(p), i});
        }
        gens.push_back(mono);
    }
    j["gens"] = gens;
    return j;
}

SqfMonomialIdeal ideal_from_json(const json& j) {
    VarSet vars = varset_from_json(j.at("varset"));
    std::vector<Bitset> gens;
    for (const auto& mono : j.at("gens")) {
        Bitset b;
        for (const auto& pair : mono) {
            int p = vars.poset().index(pair.at(0).get<std::string>());
            int k = vars.index(p, pair.at(1).get<int>());
            if (k < 0) throw ParseError("monomial variable outside the variable set");
            b.set(k);
        }
        gens.push_back(b);
    }
    return SqfMonomialIdeal(std::move(vars), std::move(gens));
}

json complex_to_json(const SimplicialComplex& complex) {
    json j;
    j["vertices"] = complex.vertex_names();
    json facets = json::array();
    for (const auto& f : complex.facets()) {
        json face = json::array();
        for (int v : f.elements()) face.push_back(complex.vertex_names()[static_cast<std::size_t>(v)]);
        facets.push_back(face);
    }
    j["facets"] = facets;
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Bitset> facets;
    for (const auto& face : j.at("facets")) {
        Bitset b;
        for (const auto& name : face) {
            auto it = std::find(vertices.begin(), vertices.end(), name.get<std::string>());
            if (it == vertices.end()) throw ParseError("facet vertex not declared");
            b.set(static_cast<int>(it - vertices.begin()));
        }
        facets.push_back(b);
    }
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

json resolution_to_json(const MultigradedComplex& complex) {
    json j;
    json modules = json::array();
    for (std::size_t i = 0; i < complex.modules.size(); ++i) {
        json mod;
        mod["index"] = i;
        json gens = json::array();
        for (const auto& g : complex.modules[i]) {
            json gen;
            gen["label"] = g.label;
            gen["degree"] = g.degree;
            gens.push_back(gen);
        }
        mod["gens"] = gens;
        modules.push_back(mod);
    }
    j["modules"] = modules;
    json diffs = json::array();
    for (std::size_t i = 0; i < complex.diffs.size(); ++i) {
        json d;
        d["index"] = i + 1;
        json entries = json::array();
        for (const auto& e : complex.diffs[i]) {
            json entry;
            entry["row"] = e.row;
            entry["col"] = e.col;
            entry["sign"] = e.coeff;
            int var = -1, nonzero = 0;
            for (std::size_t v = 0; v < e.mono.size(); ++v)
                if (e.mono[v] != 0) {
                    ++nonzero;
                    var = static_cast<int>(v);
                }
            if (nonzero == 1 && e.mono[static_cast<std::size_t>(var)] == 1) entry["var"] = var;
            else entry["mono"] = e.mono;
            entries.push_back(entry);
        }
        d["entries"] = entries;
        diffs.push_back(d);
    }
    j["differentials"] = diffs;
    j["vars"] = complex.var_names;
    return j;
}

namespace {

std::string m2_var(const VarSet& vars, int k) {
    auto [p, i] = vars.var(k);
    return "x_(" + std::to_string(p + 1) + "," + std::to_string(i) + ")";
}

std::string m2_header(const SqfMonomialIdeal& ideal) {
    const VarSet& vars = ideal.vars();
    std::string s = "-- variables x_(p,i) follow the fixed order; element names:";
    for (int p = 0; p < vars.poset().size(); ++p) s += " " + vars.poset().name(p);
    s += "\nR = QQ[";
    for (int k = 0; k < vars.size(); ++k) s += (k ? "," : "") + m2_var(vars, k);
    s += "];\nI = ideal(";
    for (std::size_t g = 0; g < ideal.gens().size(); ++g) {
        if (g) s += ",";
        const auto elems = ideal.gens()[g].elements();
        for (std::size_t t = 0; t < elems.size(); ++t)
            s += (t ? "*" : "") + m2_var(vars, elems[static_cast<std::size_t>(t)]);
    }
    s += ");\n";
    return s;
}

} // namespace

std::string export_macaulay2_ideal(const SqfMonomialIdeal& ideal) {
    return m2_header(ideal) + "print betti res module I\n";
}

std::string export_macaulay2_resolution(const SqfMonomialIdeal& ideal,
                                        const MultigradedComplex& complex) {
    std::string s = m2_header(ideal);
    s += "F = res module I;\n";
    s += "assert(apply(" + std::to_string(complex.modules.size()) + ", i -> rank F_i) == {";
    for (std::size_t i = 0; i < complex.modules.size(); ++i)
        s += (i ? "," : "") + std::to_string(complex.modules[i].size());
    s += "});\n";
    s += "assert(apply(" + std::to_string(complex.modules.size()) +
         ", i -> sort apply(degrees F_i, sum)) == {";
    for (std::size_t i = 0; i < complex.modules.size(); ++i) {
        std::vector<int> degs;
        for (const auto& g : complex.modules[i]) degs.push_back(total_degree(g.degree));
        std::sort(degs.begin(), degs.end());
        s += (i ? ",{" : "{");
        for (std::size_t t = 0; t < degs.size(); ++t)
            s += (t ? "," : "") + std::to_string(degs[t]);
        s += "}";
    }
    s += "});\nprint betti F\n";
    return s;
}

namespace {

std::string ideal_block(const std::string& title, const SqfMonomialIdeal& ideal) {
    std::string s = title + " (" + std::to_string(ideal.gens().size()) + " generators)\n";
    for (const auto& g : ideal.gens()) s += "  " + monomial_name(ideal.vars(), g) + "\n";
    return s;
}

std::string complex_block(const std::string& title, const SimplicialComplex& complex) {
    std::string s = title;
    if (complex.is_void()) return s + ": void complex\n";
    s += " (dim " + std::to_string(complex.dim()) + ", f-vector " +
         fvector_to_string(f_vector(complex)) + ")\n";
    for (const auto& f : complex.facets()) {
        s += "  {";
        auto elems = f.elements();
        for (std::size_t i = 0; i < elems.size(); ++i)
            s += (i ? "," : "") +
                 complex.vertex_names()[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])];
        s += "}\n";
    }
    return s;
}

std::string betti_block(const BettiTable& t, const std::vector<std::string>& var_names) {
    std::string s = "betti (coarse): ";
    bool first = true;
    for (const auto& [key, c] : t.coarse()) {
        if (!first) s += " ";
        first = false;
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
             "):" + std::to_string(c);
    }
    s += "\nbetti (fine):\n";
    for (const auto& [key, c] : t.fine) {
        s += "  i=" + std::to_string(key.first) + " deg=";
        bool any = false;
        for (std::size_t v = 0; v < key.second.size(); ++v) {
            for (int rep = 0; rep < key.second[v]; ++rep) {
                if (any) s += "*";
                any = true;
                s += var_names[v];
            }
        }
        if (!any) s += "1";
        s += " : " + std::to_string(c) + "\n";
    }
    return s;
}

PosetIdeal job_ideal(const JobSpec& job) {
    if (job.all_gens) return full_hom_ideal(job.poset, job.n);
    return poset_ideal(job.poset, job.n, job.gens);
}

Report run_impl(const JobSpec& job) {
    Report rep;
    std::string& out = rep.text;

    if (job.command == "poset") {
        out += "poset with " + std::to_string(job.poset.size()) + " elements\n";
        out += poset_to_text(job.poset);
        out += std::string("chain: ") + (job.poset.is_chain() ? "yes" : "no") + "\n";
        out += std::string("antichain: ") + (job.poset.is_antichain() ? "yes" : "no") + "\n";
        out += "hom(P,[" + std::to_string(job.n) +
               "]) size: " + std::to_string(enum_hom(job.poset, job.n).size()) + "\n";
        return rep;
    }

    if (job.command == "ideal") {
        if (job.action == "lp") {
            out += ideal_block("letterplace ideal L(" + std::to_string(job.n) + ",P)",
                               letterplace_ideal(job.n, job.poset));
        } else if (job.action == "bpn") {
            out += ideal_block("staircase ideal B(P," + std::to_string(job.n) + ")",
                               bpn_ideal(job.poset, job.n));
        } else if (job.action == "colp") {
            out += ideal_block("co-letterplace ideal L(J)", coletterplace_ideal(job_ideal(job)));
        } else if (job.action == "dual") {
            out += ideal_block("Alexander dual L(J)^A",
                               alexander_dual(coletterplace_ideal(job_ideal(job))));
        } else {
            throw Error("unknown ideal action '" + job.action + "'");
        }
        return rep;
    }

    if (job.command == "resolve") {
        PosetIdeal ideal = job_ideal(job);
        MultigradedComplex c = coletterplace_resolution(ideal);
        out += "resolution of L(J), |J| = " + std::to_string(ideal.size()) + "\n";
        out += "ranks:";
        for (long long r : c.ranks()) out += " " + std::to_string(r);
        out += "\n";
        out += betti_block(betti_table(c), c.var_names);
        if (job.verify) {
            SqfMonomialIdeal lj = coletterplace_ideal(ideal);
            bool d2 = false, minimal = false, resolves = false, hochster_ok = false,
                 closed_ok = false;
            const int threads = resolve_threads(job.threads);
            BettiTable target = betti_table(c);
            BettiTable hq, hp;
            std::vector<std::function<void()>> tasks = {
                [&] {
                    d2 = verify_d_squared(c);
                    minimal = is_minimal(c);
                    resolves = d2 && verify_resolves(c, lj, job.field);
                },
                [&] { hq = hochster_betti(lj, CoefficientField::rationals()); },
                [&] { hp = hochster_betti(lj, CoefficientField::prime(2)); }};
            parallel_for(static_cast<int>(tasks.size()), threads, [&](int i) { tasks[static_cast<std::size_t>(i)](); });
            hochster_ok = (hq == target) && (hp == target);
            // closed form: rank_i = sum over J of C(|T_* phi \ Gamma phi|, i)
            VarSet vars = VarSet::full(ideal.poset(), ideal.n());
            std::vector<long long> closed;
            for (const auto& phi : ideal.members()) {
                int extra = (t_star_lower(vars, phi) - graph_monomial(vars, phi)).count();
                if (extra + 1 > static_cast<int>(closed.size()))
                    closed.resize(static_cast<std::size_t>(extra) + 1, 0);
                long long binom = 1;
                for (int i = 0; i <= extra; ++i) {
                    closed[static_cast<std::size_t>(i)] += binom;
                    binom = binom * (extra - i) / (i + 1);
                }
            }
            closed_ok = closed == c.ranks();
            out += std::string("verify d^2 = 0: ") + (d2 ? "ok" : "FAILED") + "\n";
            out += std::string("verify minimal: ") + (minimal ? "ok" : "FAILED") + "\n";
            out += std::string("verify resolves L(J) over ") + job.field.name() + ": " +
                   (resolves ? "ok" : "FAILED") + "\n";
            out += std::string("verify Betti = Hochster over QQ and GF(2): ") +
                   (hochster_ok ? "ok" : "FAILED") + "\n";
            out += std::string("verify closed-form ranks: ") + (closed_ok ? "ok" : "FAILED") + "\n";
            if (!(d2 && minimal && resolves && hochster_ok && closed_ok)) rep.exit_code = 2;
        }
        return rep;
    }

    if (job.command == "stable") {
        StableIdeal ideal = stable_from_posetideal(job_ideal(job));
        out += "strongly stable ideal, degree " + std::to_string(ideal.degree()) + ", " +
               std::to_string(ideal.monomials().size()) + " generators\n";
        auto describe = [&](const char* name, const MultigradedComplex& c) {
            out += std::string(name) + " ranks:";
            for (long long r : c.ranks()) out += " " + std::to_string(r);
            out += "\n";
            out += betti_block(betti_table(c), c.var_names);
            if (job.verify) {
                bool ok = verify_d_squared(c) && is_minimal(c) &&
                          verify_resolves(c, ideal.monomials(), job.field);
                out += std::string(name) + " verify: " + (ok ? "ok" : "FAILED") + "\n";
                if (!ok) rep.exit_code = 2;
            }
        };
        if (job.action == "ek") {
            describe("EK", ek_resolution(ideal));
        } else if (job.action == "colp") {
            describe("co-LP", colp_resolution(ideal));
        } else if (job.action == "compare") {
            MultigradedComplex ek = ek_resolution(ideal);
            MultigradedComplex colp = colp_resolution(ideal);
            describe("EK", ek);
            describe("co-LP", colp);
            bool same_betti = betti_table(ek) == betti_table(colp);
            bool differ = differentials_differ(ek, colp);
            MultigradedComplex dehom = dehomogenize(coletterplace_resolution(job_ideal(job)));
            bool dehom_eq = complexes_equal_by_label(dehom, colp);
            out += std::string("identical Betti tables: ") + (same_betti ? "yes" : "NO") + "\n";
            out += std::string("differentials differ: ") + (differ ? "yes" : "no") + "\n";
            out += std::string("dehomogenized L(J) resolution equals co-LP: ") +
                   (dehom_eq ? "yes" : "NO") + "\n";
            if (!same_betti || !dehom_eq) rep.exit_code = 2;
        } else {
            throw Error("unknown stable action '" + job.action + "'");
        }
        return rep;
    }

    if (job.command == "sphere") {
        if (job.action == "delta") {
            out += complex_block("delta(J)", delta_J(job_ideal(job)));
        } else if (job.action == "sigma") {
            out += complex_block("sigma(J)", sigma_J(job_ideal(job)));
        } else if (job.action == "bier") {
            SimplicialComplex bier = bier_sphere(job.input_complex);
            out += complex_block("Bier sphere", bier);
            bool sphere = is_homology_sphere(bier, job.field);
            out += std::string("homology sphere over ") + job.field.name() + ": " +
                   (sphere ? "yes" : "NO") + "\n";
            if (!sphere) rep.exit_code = 2;
        } else if (job.action == "certify") {
            SphereCertificate cert = certify_ball_or_sphere(job_ideal(job), job.field);
            if (cert.exception) {
                out += "certificate: sphere (exception case: antichain, J = Hom)\n";
                out += "delta is a homology sphere over " + job.field.name() + ", dim " +
                       std::to_string(cert.delta_dim) + "\n";
                out += "L(J)^A is a complete intersection: yes\n";
            } else {
                out += "certificate: ball\n";
                out += "delta is a homology ball over " + job.field.name() + ", dim " +
                       std::to_string(cert.delta_dim) + "\n";
                out += complex_block("boundary sigma(J)", cert.boundary);
            }
            return rep;
        } else {
            throw Error("unknown sphere action '" + job.action + "'");
        }
        return rep;
    }

    if (job.command == "export") {
        PosetIdeal ideal = job_ideal(job);
        SqfMonomialIdeal lj = coletterplace_ideal(ideal);
        if (job.action == "m2") {
            out += export_macaulay2_resolution(lj, coletterplace_resolution(ideal));
        } else if (job.action == "json") {
            json j;
            j["poset"] = poset_to_json(job.poset);
            j["n"] = job.n;
            j["ideal"] = ideal_to_json(lj);
            j["dual"] = ideal_to_json(alexander_dual(lj));
            j["delta"] = complex_to_json(delta_J(ideal));
            j["resolution"] = resolution_to_json(coletterplace_resolution(ideal));
            out += j.dump(2) + "\n";
        } else {
            throw Error("unknown export action '" + job.action + "'");
        }
        return rep;
    }

    throw Error("unknown command '" + job.command + "'");
}

} // namespace

Report run(const JobSpec& job) {
    try {
        return run_impl(job);
    } catch (const CertificationFailed& e) {
        return Report{std::string("CERTIFICATION FAILED: ") + e.what() + "\n", 2};
    } catch (const Error& e) {
        return Report{std::string("error: ") + e.what() + "\n", 1};
    }
}

} // namespace llab
