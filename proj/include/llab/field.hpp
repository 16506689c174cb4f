#pragma once

#include <string>
#include <utility>
#include <vector>

#include "llab/errors.hpp"

namespace llab {

/// Coefficient field descriptor: the rationals with exact arithmetic, or a
/// prime field GF(p).
class CoefficientField {
public:
    enum class Kind { rationals, prime };

    static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }
    static CoefficientField prime(unsigned p);

    Kind kind() const { return kind_; }
    unsigned characteristic() const { return p_; }

    std::string name() const {
        return kind_ == Kind::rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
    }

    friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

private:
    CoefficientField(Kind k, unsigned p) : kind_(k), p_(p) {}
    Kind kind_;
    unsigned p_;
};

/// Sparse matrix with integer entries, stored column-wise. Each column is a
/// list of (row, coefficient) pairs sorted by row, coefficients nonzero.
struct SparseIntMatrix {
    int rows = 0;
    std::vector<std::vector<std::pair<int, long long>>> cols;

    void add_column(std::vector<std::pair<int, long long>> c) { cols.push_back(std::move(c)); }
    int ncols() const { return static_cast<int>(cols.size()); }
};

/// Exact rank over the given field. Over the rationals this runs a
/// fraction-free integer elimination in 64-bit arithmetic and escalates to
/// arbitrary precision only if an intermediate value overflows.
int rank(const SparseIntMatrix& m, const CoefficientField& k);

} // namespace llab
