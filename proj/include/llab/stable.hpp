#pragma once

#include <vector>

#include "llab/poset.hpp"
#include "llab/resolution.hpp"

namespace llab {

/// Strongly stable monomial ideal generated in a single degree d over
/// x_1..x_n, stored as the sorted set of exponent vectors of its degree-d
/// generators.
class StableIdeal {
public:
    StableIdeal() = default;
    /// Validates degrees and the strong stability exchange property.
    StableIdeal(int d, int n, std::vector<ExpVec> monomials);

    int degree() const { return d_; }
    int nvars() const { return n_; }
    const std::vector<ExpVec>& monomials() const { return monomials_; }
    bool contains_monomial(const ExpVec& u) const;

    friend bool operator==(const StableIdeal&, const StableIdeal&) = default;

private:
    int d_ = 0;
    int n_ = 0;
    std::vector<ExpVec> monomials_;
};

/// m_phi = prod_i x_{phi(i)} for phi in Hom([d],[n]).
ExpVec monomial_of_map(const IsotoneMap& phi, int n);

/// Sorted-exponent reading: the weakly increasing value sequence of u.
IsotoneMap map_of_monomial(const ExpVec& u);

/// Poset ideals of Hom([d],[n]) correspond to strongly stable ideals
/// generated in degree d. The poset must be a chain declared in increasing
/// order.
StableIdeal stable_from_posetideal(const PosetIdeal& ideal);
PosetIdeal posetideal_from_stable(const StableIdeal& ideal);

/// The unique 1-based position p with phi(p-1) <= j < phi(p), where
/// phi(0) := 1. Defined for 1 <= j < phi(d).
int pt_of(const IsotoneMap& phi, int j);

/// Generator (m_phi; j_1 < ... < j_i) with j_i < phi(d).
struct EKGenerator {
    IsotoneMap phi;
    std::vector<int> js;
    friend bool operator==(const EKGenerator&, const EKGenerator&) = default;
};

/// Eliahou-Kervaire resolution of a strongly stable one-degree ideal.
MultigradedComplex ek_resolution(const StableIdeal& ideal);

/// The co-letterplace form of the resolution: same generators, different
/// matrices. Signs are fixed so the index-0 generators map to +m_u, which
/// makes this identical to the dehomogenized resolution of L(J).
MultigradedComplex colp_resolution(const StableIdeal& ideal);

/// Substitute x_{i,j} -> x_j in a co-letterplace resolution over the chain
/// [d]; degrees become N^n-multidegrees and generators are relabeled by
/// their (m_phi; j_1,...,j_i) pairs.
MultigradedComplex dehomogenize(const MultigradedComplex& complex);

/// Structural equality with generators matched by label instead of position.
bool complexes_equal_by_label(const MultigradedComplex& a, const MultigradedComplex& b);

/// The matrices differ: some matched (row,col) pair carries different
/// entries (or one complex has an entry the other lacks).
bool differentials_differ(const MultigradedComplex& a, const MultigradedComplex& b);

} // namespace llab
