#pragma once

#include <vector>

#include "llab/field.hpp"
#include "llab/ideal.hpp"
#include "llab/poset.hpp"
#include "llab/simplicial.hpp"

namespace llab {

/// The exception of the ball theorem: P an antichain and J all of Hom.
bool is_exception_case(const PosetIdeal& ideal);

/// The complex whose Stanley-Reisner ideal is L(J)^A; its facets are the
/// complements of the graphs of the members of J. Both descriptions are
/// computed and compared.
SimplicialComplex delta_J(const PosetIdeal& ideal);

/// The boundary sphere: complex of L(J)^A + B(J)^A. Cross-validated against
/// boundary_complex(delta_J(J)) and against the complex of (L(J) n B(J))^A.
/// Rejects the exception case, where delta_J itself is the sphere.
SimplicialComplex sigma_J(const PosetIdeal& ideal);

struct SphereCertificate {
    bool exception = false;
    SimplicialComplex delta;
    SimplicialComplex boundary; // void in the exception case
    int delta_dim = -2;
    int boundary_dim = -2;
    bool complete_intersection = false; // exception branch only
};

/// Certifies delta_J as a homology ball with boundary sigma_J (or, in the
/// exception case, as a homology sphere whose dual ideal is a complete
/// intersection), including the pseudo-manifold checks. Throws
/// CertificationFailed with the offending face on any violation.
SphereCertificate certify_ball_or_sphere(const PosetIdeal& ideal, const CoefficientField& k);

/// The poset ideal of Hom(antichain,[2]) matching a complex X on d points:
/// sigma is a face of X iff the map (2 on sigma, 1 off sigma) lies in J.
PosetIdeal bier_poset_ideal(const SimplicialComplex& x);

/// Bier sphere of a proper complex X: the complex of
/// I_X + I_{X^A} + (x_{p,1} x_{p,2})_p, with I_X in the first chain level
/// and I_{X^A} in the second. Asserted equal to sigma_J(J_X) as facet sets.
SimplicialComplex bier_sphere(const SimplicialComplex& x);

struct RestrictedPair {
    VarSet vars;            // { (p,i) : i <= mu(p) }
    SqfMonomialIdeal ideal; // L^{<=mu}(J)
    SimplicialComplex complex; // Delta^{<=mu}(J)
};

/// Restriction to the variable set bounded by mu: checks that mu is an
/// upper bound, that delta_J(J) is the cone over the restricted complex
/// with the removed variables as apexes, and that Alexander duality
/// commutes with the restriction.
RestrictedPair restrict_ideal(const PosetIdeal& ideal, const IsotoneMap& mu);

/// Standard polarization x_t^e -> x_{t,1}...x_{t,e} of an artinian
/// mu-determined monomial ideal (generator exponent vectors over x_1..x_d,
/// bounds c_1..c_d). Asserted equal to L^{<=mu}(J)^A for the poset ideal of
/// the complementary multicomplex.
SqfMonomialIdeal polarize_artinian(const std::vector<ExpVec>& gens, const std::vector<int>& bounds);

} // namespace llab
