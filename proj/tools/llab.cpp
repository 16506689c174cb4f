// llab: letterplace/co-letterplace laboratory.
//
// Builds the monomial ideals attached to a finite poset P, a chain length n
// and a poset ideal J of Hom(P,[n]); produces the explicit minimal linear
// resolution of the co-letterplace ideal L(J); and certifies the associated
// simplicial balls and spheres, with exact-arithmetic verification
// throughout.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "llab/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw llab::Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string poset_file;
    int chain = 0;
    int antichain = 0;
    int n = 2;
    std::string gens;
    bool all = false;
    std::string field = "q";
    int threads = 0;
    std::string output;
    std::string complex_file;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_gens) {
    cmd->add_option("-p,--poset", o.poset_file, "poset file (elements:/covers: format)");
    cmd->add_option("--chain", o.chain, "use the chain poset on this many elements");
    cmd->add_option("--antichain", o.antichain, "use the antichain on this many elements");
    cmd->add_option("-n,--n", o.n, "chain length n")->check(CLI::PositiveNumber);
    if (needs_gens) {
        cmd->add_option("-g,--gens", o.gens,
                        "poset ideal generators: value rows 'v1 v2 ...' separated by ';'");
        cmd->add_flag("--all", o.all, "take J = Hom(P,[n])");
    }
    cmd->add_option("-f,--field", o.field, "coefficient field: q, f2, f3, or fp:<prime>");
    cmd->add_option("-j,--threads", o.threads, "threads for verification loops (or LLAB_THREADS)");
    cmd->add_option("-o,--output", o.output, "write the report to a file instead of stdout");
}

llab::CoefficientField parse_field(const std::string& name) {
    if (name == "q" || name == "qq" || name == "Q") return llab::CoefficientField::rationals();
    if (name == "f2") return llab::CoefficientField::prime(2);
    if (name == "f3") return llab::CoefficientField::prime(3);
    if (name.rfind("fp:", 0) == 0)
        return llab::CoefficientField::prime(static_cast<unsigned>(std::stoul(name.substr(3))));
    throw llab::Error("unknown field '" + name + "' (use q, f2, f3, fp:<prime>)");
}

llab::JobSpec make_job(const CommonOpts& o, const std::string& command,
                       const std::string& action, bool verify) {
    llab::JobSpec job;
    job.command = command;
    job.action = action;
    job.n = o.n;
    job.verify = verify;
    job.threads = o.threads;
    job.field = parse_field(o.field);
    if (!o.poset_file.empty()) job.poset = llab::parse_poset_text(read_file(o.poset_file));
    else if (o.chain > 0) job.poset = llab::chain_poset(o.chain);
    else if (o.antichain > 0) job.poset = llab::antichain_poset(o.antichain);
    else if (command != "sphere" || action != "bier")
        throw llab::Error("no poset given (use --poset, --chain or --antichain)");
    job.all_gens = o.all;
    if (!o.gens.empty()) job.gens = llab::parse_gen_rows(o.gens, job.poset.size());
    const bool needs_ideal =
        command == "resolve" || command == "stable" || command == "export" ||
        (command == "ideal" && (action == "colp" || action == "dual")) ||
        (command == "sphere" && action != "bier");
    if (needs_ideal && !o.all && o.gens.empty())
        throw llab::Error("no poset ideal given (use --gens or --all)");
    if (!o.complex_file.empty())
        job.input_complex =
            llab::complex_from_json(nlohmann::json::parse(read_file(o.complex_file)));
    return job;
}

int emit(const llab::Report& rep, const CommonOpts& o,
         std::chrono::steady_clock::time_point start) {
    if (o.output.empty()) {
        std::cout << rep.text;
    } else {
        std::ofstream out(o.output);
        out << rep.text;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "[llab] " << elapsed << " ms\n";
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"letterplace/co-letterplace ideals, resolutions and Bier-type spheres"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string sub_action;
    bool verify = false;

    auto* poset_cmd = app.add_subcommand("poset", "parse and check a poset");
    auto* poset_check = poset_cmd->add_subcommand("check", "validate and summarize");
    add_common(poset_check, o, false);

    auto* ideal_cmd = app.add_subcommand("ideal", "letterplace-type ideals");
    for (const char* act : {"lp", "colp", "dual", "bpn"})
        add_common(ideal_cmd->add_subcommand(act), o, true);

    auto* resolve_cmd = app.add_subcommand("resolve", "minimal resolution of L(J)");
    add_common(resolve_cmd, o, true);
    resolve_cmd->add_flag("--verify", verify, "verify d^2, minimality, exactness, Betti oracles");

    auto* stable_cmd = app.add_subcommand("stable", "strongly stable ideals over the chain [d]");
    for (const char* act : {"ek", "colp", "compare"}) {
        auto* c = stable_cmd->add_subcommand(act);
        add_common(c, o, true);
        c->add_flag("--verify", verify, "verify each resolution");
    }

    auto* sphere_cmd = app.add_subcommand("sphere", "balls, spheres, certificates");
    for (const char* act : {"delta", "sigma", "certify"})
        add_common(sphere_cmd->add_subcommand(act), o, true);
    auto* bier = sphere_cmd->add_subcommand("bier", "Bier sphere of a complex");
    add_common(bier, o, false);
    bier->add_option("-c,--complex", o.complex_file, "JSON complex file {vertices, facets}")
        ->required();

    auto* export_cmd = app.add_subcommand("export", "Macaulay2 / JSON export");
    for (const char* act : {"m2", "json"})
        add_common(export_cmd->add_subcommand(act), o, true);

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        for (auto* top : app.get_subcommands()) {
            std::string command = top->get_name();
            std::string action;
            for (auto* sub : top->get_subcommands()) action = sub->get_name();
            if (command == "poset") action = "check";
            llab::JobSpec job = make_job(o, command, action, verify);
            return emit(llab::run(job), o, start);
        }
    } catch (const llab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
