#pragma once

#include <string>
#include <utility>
#include <vector>

#include "llab/bitset.hpp"
#include "llab/poset.hpp"

namespace llab {

/// The variable set P x [n] with its fixed total order (poset declaration
/// order, then chain index), optionally restricted to {(p,i) : i <= mu(p)}
/// for an upper bound mu. All squarefree monomials are bitsets over this.
class VarSet {
public:
    VarSet() = default;

    static VarSet full(const Poset& poset, int n);
    static VarSet restricted(const Poset& poset, int n, const IsotoneMap& mu);

    const Poset& poset() const { return poset_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(vars_.size()); }

    /// Index of (p,i) in the fixed order, or -1 when the pair is outside the
    /// (restricted) variable set.
    int index(int p, int i) const {
        int k = p * n_ + (i - 1);
        if (i < 1 || i > n_ || p < 0 || p >= poset_.size()) return -1;
        return lookup_[static_cast<std::size_t>(k)];
    }
    std::pair<int, int> var(int k) const { return vars_[static_cast<std::size_t>(k)]; }

    /// Printable name "x_{p,i}" with the poset element's declared name.
    std::string var_name(int k) const;

    Bitset all_vars() const;

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    Poset poset_;
    int n_ = 0;
    std::vector<std::pair<int, int>> vars_;
    std::vector<int> lookup_;
};

using SqfMonomial = Bitset;

std::string monomial_name(const VarSet& vars, const SqfMonomial& m);

/// Squarefree monomial ideal given by its minimal generators (an antichain
/// under divisibility), kept sorted for deterministic output.
class SqfMonomialIdeal {
public:
    SqfMonomialIdeal() = default;
    /// Minimalizes and sorts the given generating set.
    SqfMonomialIdeal(VarSet vars, std::vector<SqfMonomial> gens);

    const VarSet& vars() const { return vars_; }
    const std::vector<SqfMonomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].empty(); }

    /// Membership of a squarefree monomial: divisibility by some generator.
    bool contains(const SqfMonomial& m) const;

    friend bool operator==(const SqfMonomialIdeal&, const SqfMonomialIdeal&) = default;

private:
    VarSet vars_;
    std::vector<SqfMonomial> gens_;
};

/// Support of the graph of phi: { (p, phi(p)) : p in P }.
SqfMonomial graph_monomial(const VarSet& vars, const IsotoneMap& phi);

/// Co-letterplace ideal L(J) generated by the graph monomials of J.
SqfMonomialIdeal coletterplace_ideal(const PosetIdeal& ideal);

/// Letterplace ideal L(n,P): one generator per multichain p_1 <= ... <= p_n,
/// identified with a subset of P x [n] by the coordinate swap (p_k, k).
SqfMonomialIdeal letterplace_ideal(int n, const Poset& poset);

/// B(P,n): the quadratic monomials x_{p,i} x_{q,j} with p < q and i > j.
SqfMonomialIdeal bpn_ideal(const Poset& poset, int n);

/// B(J) = L(J^c) + B(P,n), minimalized.
SqfMonomialIdeal bJ_ideal(const PosetIdeal& ideal);

/// Alexander dual: minimal transversals of the generator supports.
/// Involution on proper nonzero squarefree ideals; the zero and unit ideals
/// are rejected explicitly.
SqfMonomialIdeal alexander_dual(const SqfMonomialIdeal& ideal);

SqfMonomialIdeal sum(const SqfMonomialIdeal& a, const SqfMonomialIdeal& b);
SqfMonomialIdeal intersect(const SqfMonomialIdeal& a, const SqfMonomialIdeal& b);

/// The antichain of minimal elements of `gens` under divisibility.
std::vector<SqfMonomial> minimalize(std::vector<SqfMonomial> gens);

} // namespace llab
