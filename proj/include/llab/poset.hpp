#pragma once

#include <string>
#include <vector>

#include "llab/bitset.hpp"
#include "llab/errors.hpp"

namespace llab {

/// Finite poset on named elements. The declaration order of the elements is
/// a fixed total order used for all sign computations downstream; it is part
/// of the value, not an implementation detail.
class Poset {
public:
    Poset() = default;

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int p) const { return names_[static_cast<std::size_t>(p)]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;

    bool leq(int p, int q) const { return up_[static_cast<std::size_t>(p)].test(q); }
    bool less(int p, int q) const { return p != q && leq(p, q); }

    /// Elements strictly below / above p, as bitsets over element indices.
    Bitset strictly_below(int p) const { return down_[static_cast<std::size_t>(p)].without(p); }
    Bitset strictly_above(int p) const { return up_[static_cast<std::size_t>(p)].without(p); }

    bool is_antichain() const;
    bool is_chain() const;

    friend bool operator==(const Poset&, const Poset&) = default;

    friend Poset poset_from_covers(const std::vector<std::string>& names,
                                   const std::vector<std::pair<std::string, std::string>>& covers);

private:
    std::vector<std::string> names_;
    std::vector<Bitset> up_;   // up_[p]   = { q : p <= q }
    std::vector<Bitset> down_; // down_[p] = { q : q <= p }
};

/// Build a poset from declared names and cover pairs (a,b) meaning a < b.
/// The order relation is the reflexive-transitive closure of the covers.
Poset poset_from_covers(const std::vector<std::string>& names,
                        const std::vector<std::pair<std::string, std::string>>& covers);

Poset chain_poset(int m, const std::string& prefix = "p");
Poset antichain_poset(int m, const std::string& prefix = "a");

/// Order-preserving map P -> [n], stored as 1-based values indexed by P's
/// elements in declaration order.
struct IsotoneMap {
    std::vector<int> values;

    int operator()(int p) const { return values[static_cast<std::size_t>(p)]; }
    friend bool operator==(const IsotoneMap&, const IsotoneMap&) = default;
    friend auto operator<=>(const IsotoneMap&, const IsotoneMap&) = default;
};

bool is_isotone(const Poset& poset, int n, const IsotoneMap& phi);

/// Pointwise order on Hom(P,[n]).
bool pointwise_leq(const IsotoneMap& a, const IsotoneMap& b);

/// All isotone maps P -> [n] in lexicographic order on value vectors.
std::vector<IsotoneMap> enum_hom(const Poset& poset, int n);

/// phi_-(p) = max { phi(q) : q < p }, with max of the empty set taken as 1.
IsotoneMap phi_minus(const Poset& poset, const IsotoneMap& phi);

/// phi^+(p) = min { phi(q) : p < q }, with min of the empty set taken as n.
IsotoneMap phi_plus(const Poset& poset, int n, const IsotoneMap& phi);

IsotoneMap upper_normalize(const Poset& poset, int n, const IsotoneMap& phi);
bool is_upper_normal(const Poset& poset, int n, const IsotoneMap& phi);

/// Downward closed subset of Hom(P,[n]), stored explicitly together with the
/// antichain of its maximal elements. Immutable after construction.
class PosetIdeal {
public:
    PosetIdeal() = default;

    const Poset& poset() const { return poset_; }
    int n() const { return n_; }
    const std::vector<IsotoneMap>& members() const { return members_; }
    const std::vector<IsotoneMap>& maximal() const { return maximal_; }

    bool contains(const IsotoneMap& phi) const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    /// Hom(P,[n]) \ J, in enumeration order.
    std::vector<IsotoneMap> complement() const;

    /// True when J is all of Hom(P,[n]).
    bool is_full() const;

    friend bool operator==(const PosetIdeal&, const PosetIdeal&) = default;

    friend PosetIdeal poset_ideal(const Poset& poset, int n, const std::vector<IsotoneMap>& gens);
    friend PosetIdeal full_hom_ideal(const Poset& poset, int n);

private:
    Poset poset_;
    int n_ = 0;
    std::vector<IsotoneMap> members_; // sorted lexicographically
    std::vector<IsotoneMap> maximal_;
};

/// Downward closure of the given isotone maps in Hom(P,[n]).
PosetIdeal poset_ideal(const Poset& poset, int n, const std::vector<IsotoneMap>& gens);

PosetIdeal full_hom_ideal(const Poset& poset, int n);

/// Pointwise join of the members of J: mu(p) = max { phi(p) : phi in J }.
IsotoneMap hull(const PosetIdeal& ideal);

} // namespace llab
