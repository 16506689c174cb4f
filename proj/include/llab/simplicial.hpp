#pragma once

#include <string>
#include <vector>

#include "llab/betti.hpp"
#include "llab/bitset.hpp"
#include "llab/field.hpp"
#include "llab/ideal.hpp"

namespace llab {

/// Simplicial complex given by its facet antichain over a labeled vertex
/// set. Two degenerate values are distinguished: the void complex (no faces
/// at all, empty facet list) and the empty complex { {} } (one empty facet).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Bitset> facets);

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<Bitset>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// Dimension; -1 for the empty complex, -2 for the void complex.
    int dim() const;
    bool is_pure() const;

    bool is_face(const Bitset& f) const;

    /// All faces, sorted by (cardinality, lex). Includes the empty face
    /// unless the complex is void.
    std::vector<Bitset> all_faces() const;

    /// Faces grouped by cardinality: result[s] = faces of size s.
    std::vector<std::vector<Bitset>> faces_by_size() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> vertex_names_;
    std::vector<Bitset> facets_;
};

/// f-vector (f_{-1}, f_0, ..., f_dim); counts[s] is the number of faces of
/// cardinality s.
struct FVector {
    std::vector<long long> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

std::string fvector_to_string(const FVector& f);

/// Stanley-Reisner complex of a proper squarefree ideal: the faces are the
/// supports not divisible by any generator. The zero ideal gives the full
/// simplex; the unit ideal is rejected.
SimplicialComplex complex_of_ideal(const SqfMonomialIdeal& ideal);

/// Minimal nonfaces of the complex (the Stanley-Reisner generators).
std::vector<Bitset> minimal_nonfaces(const SimplicialComplex& complex);

/// Stanley-Reisner ideal over a variable set matching the vertex order.
SqfMonomialIdeal sr_ideal(const SimplicialComplex& complex, const VarSet& vars);

FVector f_vector(const SimplicialComplex& complex);

SimplicialComplex link(const SimplicialComplex& complex, const Bitset& face);

/// Reduced homology dimensions over the field: result[s] = dim H~_{s-1},
/// for s = 0 .. dim+1. The void complex yields an empty vector.
std::vector<int> reduced_homology(const SimplicialComplex& complex, const CoefficientField& k);

/// Reduced homology of an abstract face list grouped by cardinality (used
/// for restrictions and relative-style computations).
std::vector<int> homology_of_faces(const std::vector<std::vector<Bitset>>& by_size,
                                   const CoefficientField& k);

bool has_sphere_homology(const std::vector<int>& dims, int sphere_dim);

/// Link-by-link homology sphere certificate; pureness is a checked
/// precondition. The void complex passes vacuously.
bool is_homology_sphere(const SimplicialComplex& complex, const CoefficientField& k);

struct BallCertificate {
    bool is_ball = false;
    SimplicialComplex boundary;
    /// First face whose link violated the required homology, if any.
    std::vector<int> offending_face;
};

/// Homology-ball certificate per the two-bullet definition: the boundary is
/// generated by the codimension-1 faces lying in exactly one facet; links of
/// boundary faces must be acyclic, links of interior faces spherical.
BallCertificate is_homology_ball(const SimplicialComplex& complex, const CoefficientField& k);

/// Subcomplex generated by the codimension-1 faces contained in exactly one
/// facet.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

/// Largest number of facets containing a codimension-1 face.
int max_facets_through_codim1(const SimplicialComplex& complex);

/// Every codimension-1 face lies in exactly two facets.
bool codim1_faces_in_exactly_two(const SimplicialComplex& complex);

/// Hochster-formula Betti numbers of a proper squarefree ideal:
/// beta_{i,sigma} = dim H~_{|sigma|-i-2} of the restriction of the
/// Stanley-Reisner complex to sigma. By default sigma runs over the lcm
/// lattice of the generators; exhaustive mode sweeps every sigma containing
/// a generator.
BettiTable hochster_betti(const SqfMonomialIdeal& ideal, const CoefficientField& k,
                          bool exhaustive = false);

} // namespace llab
