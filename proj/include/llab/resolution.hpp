#pragma once

#include <string>
#include <vector>

#include "llab/betti.hpp"
#include "llab/field.hpp"
#include "llab/ideal.hpp"
#include "llab/poset.hpp"
#include "llab/simplicial.hpp"
#include "llab/staircase.hpp"

namespace llab {

/// Structured generator tag kept alongside the printable label: the isotone
/// map and the auxiliary pair list ((p,i) pairs of D, or (p_t, j_t) pairs on
/// the strongly stable side). Empty for face-labeled generators.
struct GenTag {
    std::vector<int> phi;
    std::vector<std::pair<int, int>> pairs;
    friend bool operator==(const GenTag&, const GenTag&) = default;
};

struct FreeGen {
    std::string label;
    ExpVec degree;
    GenTag tag;
    friend bool operator==(const FreeGen&, const FreeGen&) = default;
};

/// One nonzero differential entry: coefficient times the monomial x^mono,
/// mapping generator `col` of the source module to generator `row` of the
/// target. A zero `mono` is a unit entry (non-minimal complexes only).
struct DiffEntry {
    int row = 0;
    int col = 0;
    int coeff = 0;
    ExpVec mono;
    friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

/// Chain complex of free multigraded modules. modules[i] is the module in
/// homological index i; diffs[i] maps modules[i+1] to modules[i]. Index 0
/// carries the generators of the resolved ideal.
struct MultigradedComplex {
    std::vector<std::string> var_names;
    std::vector<std::vector<FreeGen>> modules;
    std::vector<std::vector<DiffEntry>> diffs;

    int length() const { return static_cast<int>(modules.size()); }
    std::vector<long long> ranks() const;
    /// Every entry satisfies deg(col) = deg(row) + mono, componentwise.
    bool homogeneous() const;

    friend bool operator==(const MultigradedComplex&, const MultigradedComplex&) = default;
};

/// Number of support variables strictly preceding `var` in the fixed order;
/// the exponent in the sign (-1)^alpha of the L(-) differential.
int sign_exponent(int var, const Bitset& support);

/// The explicit minimal linear resolution of the co-letterplace ideal L(J):
/// one generator e_A per admissible set A (m_A nonzero in L(J|B)) in
/// homological index |A| - |P|, with differential
///   e_A |-> sum over a in A_2 of (-1)^alpha(a,A) x_a e_{A \ a},
/// A_2 being the union of the fibers of size at least two.
MultigradedComplex coletterplace_resolution(const PosetIdeal& ideal);

/// Enriched cochain complex of a nonempty complex: generators S(-F^c) for
/// the faces F, graded so that index 0 holds the top-size faces.
MultigradedComplex enriched_cochain(const SimplicialComplex& complex);

/// Resolution of the Alexander dual of the Stanley-Reisner ideal of a
/// certified homology ball: the enriched cochain complex restricted to the
/// interior faces, with index-0 basis signs normalized so the augmentation
/// e_F -> m_{F^c} is a chain map.
MultigradedComplex ball_resolution(const SimplicialComplex& complex, const CoefficientField& k);

/// Ranks of the ball resolution from the f-vectors of the ball and its
/// boundary alone: rank_j = f-count of interior faces of size d+1-j.
std::vector<long long> ball_resolution_ranks(const FVector& ball, const FVector& boundary);

/// Taylor complex on an explicit (possibly redundant) squarefree generator
/// list; fault-injection fixture: resolves the generated ideal but is not
/// minimal in general.
MultigradedComplex taylor_complex(const VarSet& vars, const std::vector<SqfMonomial>& gens);

/// Symbolic check that consecutive differentials compose to zero.
bool verify_d_squared(const MultigradedComplex& complex);

/// No differential entry is a nonzero constant.
bool is_minimal(const MultigradedComplex& complex);

/// Certifies that the complex is a resolution of the ideal generated by
/// `gens` (exponent vectors over the complex's variables), with augmentation
/// sending each index-0 generator to the monomial of its degree: checks
/// homogeneity, the augmentation composition, and per-multidegree strand
/// exactness (squarefree strands when all degrees are squarefree, otherwise
/// the divisor box of the degrees).
bool verify_resolves(const MultigradedComplex& complex, const std::vector<ExpVec>& gens,
                     const CoefficientField& k);

bool verify_resolves(const MultigradedComplex& complex, const SqfMonomialIdeal& ideal,
                     const CoefficientField& k);

/// Generator census (homological index, multidegree) of a minimal complex.
BettiTable betti_table(const MultigradedComplex& complex);

} // namespace llab
