#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "llab/field.hpp"
#include "llab/ideal.hpp"
#include "llab/poset.hpp"
#include "llab/resolution.hpp"
#include "llab/simplicial.hpp"

namespace llab {

/// Poset text format:
///   elements: a b c
///   covers: a<b b<c
/// Lines may be blank or start with '#'. Errors carry line and column.
Poset parse_poset_text(const std::string& text);
std::string poset_to_text(const Poset& poset);

/// Generator rows for a poset ideal: rows separated by ';', values by
/// spaces or commas, e.g. "1 2; 1 1".
std::vector<IsotoneMap> parse_gen_rows(const std::string& text, int nelems);

nlohmann::json poset_to_json(const Poset& poset);
Poset poset_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const SqfMonomialIdeal& ideal);
SqfMonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json resolution_to_json(const MultigradedComplex& complex);

/// Macaulay2 scripts: ring declaration in the fixed variable order, the
/// ideal, and (optionally) rank/degree assertions from a computed minimal
/// resolution. Byte-stable for fixed input.
std::string export_macaulay2_ideal(const SqfMonomialIdeal& ideal);
std::string export_macaulay2_resolution(const SqfMonomialIdeal& ideal,
                                        const MultigradedComplex& complex);

/// Batch job description for the CLI.
struct JobSpec {
    std::string command; // poset | ideal | resolve | stable | sphere | export
    std::string action;  // subaction, e.g. lp, colp, dual, bpn, certify, m2 ...
    Poset poset;
    int n = 2;
    bool all_gens = false;
    std::vector<IsotoneMap> gens;
    CoefficientField field = CoefficientField::rationals();
    bool verify = false;
    int threads = 1;
    SimplicialComplex input_complex; // for sphere bier
};

struct Report {
    std::string text;
    int exit_code = 0; // 0 ok, 1 input error, 2 certification failure
};

/// Executes a job and produces a deterministic report (no timings; those are
/// the caller's concern and go to stderr).
Report run(const JobSpec& job);

} // namespace llab
