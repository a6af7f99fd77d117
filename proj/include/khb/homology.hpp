#pragma once

// Homology of the bigraded complexes: Kh groups as subquotients with stored
// representatives, the induced map beta_* on homology, the secondary groups
// KK (kernel mod image of beta_* along diagonals), two-variable Poincare
// polynomials, and the thin-knot factorization of the Kh polynomial.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "khb/cube.hpp"
#include "khb/gf2.hpp"

namespace khb {

struct DimTable {
    std::map<Bigrading, int> dims;

    int at(int i, int j) const {
        auto it = dims.find({i, j});
        return it == dims.end() ? 0 : it->second;
    }
    void set(int i, int j, int d) {
        if (d != 0) dims[{i, j}] = d;
    }
    int total() const {
        int t = 0;
        for (const auto& [ij, d] : dims) t += d;
        return t;
    }
    bool operator==(const DimTable& o) const { return dims == o.dims; }
};

// Laurent polynomial in t, q with integer coefficients, keyed by (i, j) for
// the monomial t^i q^j.
struct LaurentPoly2 {
    std::map<Bigrading, long> coeffs;

    long at(int i, int j) const {
        auto it = coeffs.find({i, j});
        return it == coeffs.end() ? 0 : it->second;
    }
    void add(int i, int j, long c) {
        auto it = coeffs.find({i, j});
        long v = (it == coeffs.end() ? 0 : it->second) + c;
        if (v == 0) {
            if (it != coeffs.end()) coeffs.erase(it);
        } else {
            coeffs[{i, j}] = v;
        }
    }
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const LaurentPoly2& o) const { return coeffs == o.coeffs; }

    LaurentPoly2 operator+(const LaurentPoly2& o) const {
        LaurentPoly2 r = *this;
        for (const auto& [ij, c] : o.coeffs) r.add(ij.first, ij.second, c);
        return r;
    }
    LaurentPoly2 operator*(const LaurentPoly2& o) const {
        LaurentPoly2 r;
        for (const auto& [a, ca] : coeffs)
            for (const auto& [b, cb] : o.coeffs)
                r.add(a.first + b.first, a.second + b.second, ca * cb);
        return r;
    }

    static LaurentPoly2 monomial(int i, int j, long c = 1) {
        LaurentPoly2 p;
        p.add(i, j, c);
        return p;
    }

    // Terms ordered by t-power descending, then q-power descending.
    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::vector<std::pair<Bigrading, long>> terms(coeffs.begin(), coeffs.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            return a.first.first != b.first.first ? a.first.first > b.first.first
                                                  : a.first.second > b.first.second;
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [ij, c] : terms) {
            long mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            std::string mono;
            if (ij.first != 0) {
                mono += "t";
                if (ij.first != 1) mono += "^" + std::to_string(ij.first);
            }
            if (ij.second != 0) {
                if (!mono.empty()) mono += " ";
                mono += "q";
                if (ij.second != 1) mono += "^" + std::to_string(ij.second);
            }
            if (mag != 1 || mono.empty()) {
                out << mag;
                if (!mono.empty()) out << " ";
            }
            out << mono;
        }
        return out.str();
    }
};

inline LaurentPoly2 poincare_polynomial(const DimTable& t) {
    LaurentPoly2 p;
    for (const auto& [ij, d] : t.dims) p.add(ij.first, ij.second, d);
    return p;
}

// --- homology --------------------------------------------------------------

struct Homology {
    std::map<Bigrading, Subquotient> groups;

    int dim(int i, int j) const {
        auto it = groups.find({i, j});
        return it == groups.end() ? 0 : it->second.dim();
    }
    const Subquotient* group(int i, int j) const {
        auto it = groups.find({i, j});
        return it == groups.end() ? nullptr : &it->second;
    }
    DimTable table() const {
        DimTable t;
        for (const auto& [ij, sq] : groups) t.set(ij.first, ij.second, sq.dim());
        return t;
    }
};

inline Homology khovanov_homology(const BigradedComplex& c) {
    Homology h;
    for (const auto& [ij, gens] : c.groups) {
        auto [i, j] = ij;
        int n = int(gens.size());
        const GF2Matrix* out = c.d_block(i, j);
        const GF2Matrix* in = c.d_block(i - 1, j);
        GF2Matrix num = out ? kernel_basis(*out) : GF2Matrix::identity(n);
        GF2Matrix den = in ? image_basis(*in) : GF2Matrix(0, n);
        h.groups.emplace(ij, subquotient(num, den));
    }
    return h;
}

// Induced maps beta_*: Kh^{i,j} -> Kh^{i+1,j+2}. Only bigradings where both
// source and target groups exist (and the source is nonzero) get an entry;
// all other instances of the map are zero.
using BetaStar = std::map<Bigrading, GF2Matrix>;

inline BetaStar beta_star(const BigradedComplex& c, const Homology& h) {
    BetaStar b;
    for (const auto& [ij, src] : h.groups) {
        auto [i, j] = ij;
        const Subquotient* tgt = h.group(i + 1, j + 2);
        if (!tgt || src.dim() == 0 || tgt->dim() == 0) continue;
        const GF2Matrix* blk = c.beta_block(i, j);
        GF2Matrix f = blk ? *blk : GF2Matrix(tgt->ambient(), src.ambient());
        b.emplace(ij, induced_map(f, src, *tgt));
    }
    return b;
}

// KK^{i,j} = ker(beta_* at (i,j)) / im(beta_* into (i,j)).
inline DimTable secondary_groups(const Homology& h, const BetaStar& b) {
    auto rank_at = [&](int i, int j) {
        auto it = b.find({i, j});
        return it == b.end() ? 0 : rank(it->second);
    };
    // beta_* o beta_* = 0 on homology
    for (const auto& [ij, m] : b) {
        auto it = b.find({ij.first + 1, ij.second + 2});
        if (it != b.end() && !(it->second * m).is_zero())
            throw error("secondary_groups: beta_* squares to a nonzero map");
    }
    DimTable kk;
    for (const auto& [ij, sq] : h.groups) {
        auto [i, j] = ij;
        int d = sq.dim() - rank_at(i, j) - rank_at(i - 1, j - 2);
        kk.set(i, j, d);
    }
    return kk;
}

// --- thin-knot factorization ------------------------------------------------

// Candidate s for a two-diagonal table: diagonals j - 2i must be {s-1, s+1}
// (or a single one of them).
inline int infer_s(const LaurentPoly2& kh) {
    if (kh.is_zero()) throw error("infer_s: zero polynomial");
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [ij, c] : kh.coeffs) {
        int d = ij.second - 2 * ij.first;
        if (first) { lo = hi = d; first = false; }
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (hi - lo > 2 || ((hi - lo) & 1))
        throw error("infer_s: support spans more than two adjacent diagonals");
    return lo + 1;  // single diagonal is read as the s-1 one
}

// Kh = q^{s-1}(1+q^2)(1 + (1+tq^2) Kh'), with Kh' a polynomial in tq^2.
inline LaurentPoly2 thin_decompose(const LaurentPoly2& kh, int s) {
    for (const auto& [ij, c] : kh.coeffs) {
        int d = ij.second - 2 * ij.first;
        if (d != s - 1 && d != s + 1)
            throw error("thin_decompose: not thin for this s (term t^" +
                        std::to_string(ij.first) + " q^" + std::to_string(ij.second) +
                        " lies on diagonal " + std::to_string(d) + ")");
    }
    // divide by q^{s-1}(1+q^2): per t-degree, exact division by 1+q^2
    LaurentPoly2 shifted;
    for (const auto& [ij, c] : kh.coeffs) shifted.add(ij.first, ij.second - (s - 1), c);
    // within one t-degree i the support is {2i, 2i+2}; division by 1+q^2 is
    // exact iff both coefficients are equal
    LaurentPoly2 step1;
    for (const auto& [ij, c] : shifted.coeffs) {
        if (ij.second == 2 * ij.first) {
            if (c != shifted.at(ij.first, 2 * ij.first + 2))
                throw error("thin_decompose: not factorizable by 1+q^2 (residual " +
                            LaurentPoly2::monomial(ij.first, ij.second,
                                                   c - shifted.at(ij.first, 2 * ij.first + 2))
                                .to_string() +
                            " after the q-shift)");
            step1.add(ij.first, ij.second, c);
        } else if (shifted.at(ij.first, ij.second - 2) == 0) {
            throw error("thin_decompose: not factorizable by 1+q^2 (residual " +
                        LaurentPoly2::monomial(ij.first, ij.second, c).to_string() +
                        " after the q-shift)");
        }
    }
    // subtract 1, divide by 1+tq^2
    step1.add(0, 0, -1);
    if (step1.at(0, 0) < 0)
        throw error("thin_decompose: not factorizable (constant term of the "
                    "1+q^2 quotient is not 1)");
    LaurentPoly2 khp;
    LaurentPoly2 rem = step1;
    int i_max = 0;
    for (const auto& [ij, c] : step1.coeffs) i_max = std::max(i_max, ij.first);
    while (!rem.is_zero()) {
        auto [ij, c] = *rem.coeffs.begin();
        if (ij.first > i_max || ij.second != 2 * ij.first)
            throw error("thin_decompose: not factorizable (residual " +
                        LaurentPoly2::monomial(ij.first, ij.second, c).to_string() +
                        " is not a power of tq^2)");
        khp.add(ij.first, ij.second, c);
        rem.add(ij.first, ij.second, -c);
        rem.add(ij.first + 1, ij.second + 2, -c);
    }
    for (const auto& [ij, c] : khp.coeffs)
        if (c < 0)
            throw error("thin_decompose: not factorizable (negative coefficient " +
                        LaurentPoly2::monomial(ij.first, ij.second, c).to_string() +
                        " in Kh')");
    return khp;
}

inline LaurentPoly2 thin_reconstruct(const LaurentPoly2& khp, int s) {
    LaurentPoly2 one = LaurentPoly2::monomial(0, 0);
    LaurentPoly2 pre = LaurentPoly2::monomial(0, s - 1) +
                       LaurentPoly2::monomial(0, s + 1);
    LaurentPoly2 u = one + LaurentPoly2::monomial(1, 2);  // 1 + tq^2
    return pre * (one + u * khp);
}

// --- exactness of the beta_* diagonal sequences ------------------------------

struct ExactnessEntry {
    int diagonal;   // j - 2i
    int i;
    int deviation;  // dim KK^{i, 2i+diagonal}
    int filtered;   // dim of filtered homology in degree i
};

struct ExactnessReport {
    std::vector<ExactnessEntry> entries;  // only positions with deviation > 0
    bool consistent = true;  // every deviation sits where filtered homology lives
};

inline ExactnessReport exactness_report(const DimTable& kk,
                                        const std::map<int, int>& filtered_dims) {
    ExactnessReport r;
    for (const auto& [ij, d] : kk.dims) {
        if (d == 0) continue;
        auto it = filtered_dims.find(ij.first);
        int f = it == filtered_dims.end() ? 0 : it->second;
        r.entries.push_back({ij.second - 2 * ij.first, ij.first, d, f});
        if (f == 0) r.consistent = false;
    }
    return r;
}

}  // namespace khb
