#include "llab/field.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "llab/bitset.hpp"

namespace llab {

using boost::multiprecision::cpp_int;

CoefficientField CoefficientField::prime(unsigned p) {
    if (p < 2) throw Error("field characteristic must be a prime, got " + std::to_string(p));
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error("field characteristic must be a prime, got " + std::to_string(p));
    return CoefficientField(Kind::prime, p);
}

namespace {

// Column reduction (persistence-style): repeatedly cancel the lowest row of
// the current column against the stored reducer owning that row. The number
// of columns that survive with a nonzero entry is the rank.

struct Overflow {};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

long long gcd_ll(long long a, long long b) {
    unsigned long long ua = a < 0 ? 0ull - static_cast<unsigned long long>(a)
                                  : static_cast<unsigned long long>(a);
    unsigned long long ub = b < 0 ? 0ull - static_cast<unsigned long long>(b)
                                  : static_cast<unsigned long long>(b);
    return static_cast<long long>(std::gcd(ua, ub));
}

// Fraction-free elimination over the integers (rank over QQ). Columns are
// kept primitive (content divided out) so entries stay small in practice.
template <class Z>
struct IntegerOps {
    using Col = std::vector<std::pair<int, Z>>;

    static Z mul(const Z& a, const Z& b) {
        if constexpr (std::is_same_v<Z, long long>) return checked_mul(a, b);
        else return a * b;
    }
    static Z sub(const Z& a, const Z& b) {
        if constexpr (std::is_same_v<Z, long long>) return checked_sub(a, b);
        else return a - b;
    }
    static Z gcd(const Z& a, const Z& b) {
        if constexpr (std::is_same_v<Z, long long>) return gcd_ll(a, b);
        else return boost::multiprecision::gcd(a, b);
    }

    // col <- (col*ow_low - owner*col_low) / content; removes row `low`.
    static void eliminate(Col& col, const Col& owner) {
        const Z cl = col.back().second;
        const Z ol = owner.back().second;
        Z g = gcd(cl, ol);
        const Z fc = ol / g; // multiplies col
        const Z fo = cl / g; // multiplies owner
        Col out;
        out.reserve(col.size() + owner.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < owner.size()) {
            if (j == owner.size() || (i < col.size() && col[i].first < owner[j].first)) {
                out.emplace_back(col[i].first, mul(col[i].second, fc));
                ++i;
            } else if (i == col.size() || owner[j].first < col[i].first) {
                out.emplace_back(owner[j].first, mul(Z(0) - owner[j].second, fo));
                ++j;
            } else {
                Z v = sub(mul(col[i].second, fc), mul(owner[j].second, fo));
                if (v != 0) out.emplace_back(col[i].first, v);
                ++i;
                ++j;
            }
        }
        // The lowest rows cancel by construction.
        while (!out.empty() && out.back().first == col.back().first) out.pop_back();
        // Primitive part.
        if (!out.empty()) {
            Z c = 0;
            for (auto& [r, v] : out) {
                c = gcd(c, v);
                if (c == 1) break;
            }
            if (c > 1)
                for (auto& [r, v] : out) v = v / c;
        }
        col = std::move(out);
    }

    static Col convert(const std::vector<std::pair<int, long long>>& c) {
        Col out;
        out.reserve(c.size());
        for (auto& [r, v] : c) out.emplace_back(r, Z(v));
        return out;
    }
};

// Standard elimination over GF(p).
struct GfpOps {
    using Col = std::vector<std::pair<int, unsigned long long>>;
    unsigned long long p;

    unsigned long long inv(unsigned long long a) const {
        // Fermat: p is prime and a != 0 mod p.
        unsigned long long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    void eliminate(Col& col, const Col& owner) const {
        unsigned long long f = col.back().second * inv(owner.back().second) % p;
        Col out;
        out.reserve(col.size() + owner.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < owner.size()) {
            if (j == owner.size() || (i < col.size() && col[i].first < owner[j].first)) {
                out.push_back(col[i]);
                ++i;
            } else if (i == col.size() || owner[j].first < col[i].first) {
                out.emplace_back(owner[j].first, (p - owner[j].second * f % p) % p);
                if (out.back().second == 0) out.pop_back();
                ++j;
            } else {
                unsigned long long v = (col[i].second + p - owner[j].second * f % p) % p;
                if (v != 0) out.emplace_back(col[i].first, v);
                ++i;
                ++j;
            }
        }
        while (!out.empty() && out.back().first == col.back().first) out.pop_back();
        col = std::move(out);
    }

    Col convert(const std::vector<std::pair<int, long long>>& c) const {
        Col out;
        out.reserve(c.size());
        for (auto& [r, v] : c) {
            long long m = v % static_cast<long long>(p);
            if (m < 0) m += static_cast<long long>(p);
            if (m != 0) out.emplace_back(r, static_cast<unsigned long long>(m));
        }
        return out;
    }
};

template <class Ops, class Convert, class Eliminate>
int run_reduction(const SparseIntMatrix& m, Convert convert, Eliminate eliminate) {
    std::vector<int> owner(static_cast<std::size_t>(m.rows), -1);
    std::vector<typename Ops::Col> reduced;
    reduced.reserve(m.cols.size());
    int rank = 0;
    for (const auto& raw : m.cols) {
        auto col = convert(raw);
        while (!col.empty()) {
            int low = col.back().first;
            int o = owner[static_cast<std::size_t>(low)];
            if (o < 0) {
                owner[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
                ++rank;
                break;
            }
            eliminate(col, reduced[static_cast<std::size_t>(o)]);
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

} // namespace

int rank(const SparseIntMatrix& m, const CoefficientField& k) {
    if (m.rows == 0 || m.cols.empty()) return 0;
    if (k.kind() == CoefficientField::Kind::prime) {
        GfpOps ops{k.characteristic()};
        return run_reduction<GfpOps>(
            m, [&](const auto& c) { return ops.convert(c); },
            [&](auto& c, const auto& o) { ops.eliminate(c, o); });
    }
    try {
        using Ops = IntegerOps<long long>;
        return run_reduction<Ops>(
            m, [](const auto& c) { return Ops::convert(c); },
            [](auto& c, const auto& o) { Ops::eliminate(c, o); });
    } catch (const Overflow&) {
        using Ops = IntegerOps<cpp_int>;
        return run_reduction<Ops>(
            m, [](const auto& c) { return Ops::convert(c); },
            [](auto& c, const auto& o) { Ops::eliminate(c, o); });
    }
}

std::vector<Bitset> subsets_of(const Bitset& sup) {
    std::vector<int> elems = sup.elements();
    if (elems.size() > 25)
        throw WidthExceeded("refusing to enumerate 2^" + std::to_string(elems.size()) + " subsets");
    std::vector<Bitset> out;
    out.reserve(std::size_t{1} << elems.size());
    out.push_back(Bitset());
    for (int v : elems) {
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i].with(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace llab
