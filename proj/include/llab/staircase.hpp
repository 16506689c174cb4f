#pragma once

#include <vector>

#include "llab/ideal.hpp"
#include "llab/poset.hpp"
#include "llab/simplicial.hpp"

namespace llab {

/// T_*(phi) = { (p,i) : phi(q) <= i <= phi(p) for all q < p }; for minimal p
/// the condition degenerates to 1 <= i <= phi(p).
SqfMonomial t_star_lower(const VarSet& vars, const IsotoneMap& phi);

/// T^*(psi) = { (p,i) : psi(p) <= i <= psi(q) for all q > p }; for maximal p
/// the upper bound is n.
SqfMonomial t_star_upper(const VarSet& vars, const IsotoneMap& psi);

/// The complex of the ideal B(P,n); its facets are the T_*(phi) of the upper
/// normal isotone maps.
SimplicialComplex staircase_complex(const Poset& poset, int n);

/// One interval [Gamma(phi), T_*(phi)] of the disjoint decomposition of the
/// admissible sets attached to a poset ideal.
struct FaceInterval {
    IsotoneMap phi;
    SqfMonomial bottom; // Gamma(phi)
    SqfMonomial top;    // T_*(phi)
};

/// One interval per member of J, in membership order.
std::vector<FaceInterval> interval_decomposition(const PosetIdeal& ideal);

/// Membership criterion for m_A nonzero in L(J|B): the fiber maxima define
/// an isotone map lying in J, and A contains no bistrict pair (p,i),(q,j)
/// with p < q and i > j.
bool is_in_LJB(const VarSet& vars, const SqfMonomial& a, const PosetIdeal& ideal);

} // namespace llab
