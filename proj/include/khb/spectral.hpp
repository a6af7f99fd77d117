#pragma once

// Spectral sequence of a finite filtered F2 cochain complex. Pages are built
// directly from the classical subquotient description
//   Z_r^k = { x in F^k : d x in F^{k+r} },
//   E_r^k = Z_r^k / (d Z_{r-1}^{k-r+1} + Z_{r-1}^{k+1}),
// with the induced differential d_r : E_r^{k,l} -> E_r^{k+r,l-r+1}. Groups
// are indexed by (k, l) with k the filtration level and k + l the homological
// degree. Also provides the identifications of the first two pages for the
// filtered link homology complexes (first page: Khovanov homology, second
// page: the secondary groups).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khb/barnatan.hpp"
#include "khb/cube.hpp"
#include "khb/gf2.hpp"
#include "khb/homology.hpp"

namespace khb {

struct SSPage {
    int r = 0;
    std::map<std::pair<int, int>, Subquotient> groups;  // (k, l), nonzero only
    std::map<std::pair<int, int>, GF2Matrix> d;         // d_r from (k, l)

    std::map<std::pair<int, int>, int> dims() const {
        std::map<std::pair<int, int>, int> t;
        for (const auto& [kl, sq] : groups) t[kl] = sq.dim();
        return t;
    }
    int dim(int k, int l) const {
        auto it = groups.find({k, l});
        return it == groups.end() ? 0 : it->second.dim();
    }
    int d_rank(int k, int l) const {
        auto it = d.find({k, l});
        return it == d.end() ? 0 : rank(it->second);
    }
};

struct SpectralSequence {
    std::vector<SSPage> pages;  // pages[r] = E_r
    int stable = 0;             // smallest r with E_r = E_infinity

    const SSPage& infinity() const { return pages.back(); }
};

namespace detail {

// Rows: unit vectors spanning the level filtration F^k in degree i.
inline GF2Matrix level_span(const FilteredComplex& fc, int i, int k) {
    int n = fc.dim(i);
    std::vector<std::pair<int, int>> trips;
    int rows = 0;
    if (n > 0)
        for (int g = 0; g < n; ++g)
            if (fc.degrees.at(i).level[g] >= k) trips.push_back({rows++, g});
    return GF2Matrix::from_triplets(rows, n, trips);
}

// Rows span Z_r^k in degree i; r = -1 means F^k itself.
inline GF2Matrix cycle_span(const FilteredComplex& fc, int r, int k, int i) {
    GF2Matrix S = level_span(fc, i, k);
    if (r < 0 || S.rows() == 0) return S;
    const GF2Matrix* dm = fc.d_at(i);
    if (!dm) return S;
    Echelon target = rref(level_span(fc, i + 1, k + r));
    GF2Matrix cond(fc.dim(i + 1), S.rows());
    for (int s = 0; s < S.rows(); ++s) {
        GF2Vector v = dm->apply(S.row(s));
        target.reduce(v);
        for (int p = 0; p < v.size(); ++p)
            if (v.get(p)) cond.set(p, s, true);
    }
    return kernel_basis(cond) * S;
}

// Rows: image under d of the rows of z (living in degree i).
inline GF2Matrix boundary_rows(const FilteredComplex& fc, int i,
                               const GF2Matrix& z) {
    const GF2Matrix* dm = fc.d_at(i);
    GF2Matrix out(z.rows(), fc.dim(i + 1));
    if (!dm) return GF2Matrix(0, fc.dim(i + 1));
    for (int s = 0; s < z.rows(); ++s) out.set_row(s, dm->apply(z.row(s)));
    return out;
}

}  // namespace detail

// Compute pages E_0 .. E_R. The default R is one past the level span, which
// is always enough for the sequence to stabilize.
inline SpectralSequence compute_pages(const FilteredComplex& fc, int r_max = -1) {
    int span = fc.level_max - fc.level_min;
    int R = r_max >= 0 ? r_max : span + 2;
    int i_lo = fc.degrees.empty() ? 0 : fc.degrees.begin()->first;
    int i_hi = fc.degrees.empty() ? -1 : fc.degrees.rbegin()->first;

    SpectralSequence ss;
    using Key = std::pair<int, int>;  // (k, i)
    std::map<Key, GF2Matrix> z_prev;  // Z_{r-1}, lazily filled
    int prev_r = -2;
    auto z_at = [&](std::map<Key, GF2Matrix>& memo, int r, int k, int i) {
        auto it = memo.find({k, i});
        if (it == memo.end())
            it = memo.emplace(Key{k, i}, detail::cycle_span(fc, r, k, i)).first;
        return it->second;
    };

    for (int r = 0; r <= R; ++r) {
        SSPage page;
        page.r = r;
        std::map<Key, Subquotient> sq;  // all groups, including zero ones
        std::map<Key, GF2Matrix> z_cur;
        for (int i = i_lo; i <= i_hi; ++i) {
            if (fc.dim(i) == 0) continue;
            for (int k = fc.level_min; k <= fc.level_max; ++k) {
                GF2Matrix num = z_at(z_cur, r, k, i);
                GF2Matrix den = GF2Matrix::vstack(
                    detail::boundary_rows(
                        fc, i - 1, z_at(z_prev, prev_r, k - r + 1, i - 1)),
                    z_at(z_prev, prev_r, k + 1, i));
                Subquotient q = subquotient(num, den);
                sq.emplace(Key{k, i}, q);
                if (q.dim() > 0) page.groups.emplace(Key{k, i - k}, q);
            }
        }
        for (const auto& [ki, src] : sq) {
            auto [k, i] = ki;
            if (src.dim() == 0) continue;
            auto tgt = sq.find({k + r, i + 1});
            if (tgt == sq.end() || tgt->second.dim() == 0) continue;
            const GF2Matrix* dm = fc.d_at(i);
            if (!dm) continue;
            page.d.emplace(Key{k, i - k}, induced_map(*dm, src, tgt->second));
        }
        ss.pages.push_back(std::move(page));
        z_prev = std::move(z_cur);
        prev_r = r;
    }

    // first page from which nothing changes anymore
    auto final_dims = ss.pages.back().dims();
    ss.stable = int(ss.pages.size()) - 1;
    while (ss.stable > 0) {
        const SSPage& p = ss.pages[ss.stable - 1];
        bool quiet = p.dims() == final_dims;
        for (const auto& [kl, m] : p.d)
            if (rank(m) > 0) quiet = false;
        if (!quiet) break;
        --ss.stable;
    }
    return ss;
}

// Total dimension in each homological degree of a page (for the last page,
// the dimensions of the abutment).
inline std::map<int, int> abutment_dims(const SSPage& page) {
    std::map<int, int> t;
    for (const auto& [kl, sq] : page.groups) t[kl.first + kl.second] += sq.dim();
    return t;
}

// --- identifications of E_1 and E_2 for the link homology filtrations -------

struct SSCheck {
    bool ok = true;
    std::vector<std::string> issues;

    void fail(std::string why) {
        ok = false;
        issues.push_back(std::move(why));
    }
};

namespace detail {

inline std::string kl_str(int k, int l) {
    return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// Compare one page of a computed sequence against expected dimensions and,
// on the d_1 page, expected differential ranks.
inline void compare_page(SSCheck& chk, const SSPage& page,
                         const std::map<std::pair<int, int>, int>& want_dims,
                         const std::map<std::pair<int, int>, int>* want_ranks,
                         const std::string& tag) {
    std::map<std::pair<int, int>, int> got = page.dims();
    for (const auto& [kl, dim] : want_dims)
        if (dim > 0 && page.dim(kl.first, kl.second) != dim)
            chk.fail(tag + " dim at " + kl_str(kl.first, kl.second) + ": got " +
                     std::to_string(page.dim(kl.first, kl.second)) + ", want " +
                     std::to_string(dim));
    for (const auto& [kl, dim] : got)
        if (!want_dims.count(kl) || want_dims.at(kl) == 0)
            chk.fail(tag + " has unexpected group at " +
                     kl_str(kl.first, kl.second) + " of dim " +
                     std::to_string(dim));
    if (!want_ranks) return;
    for (const auto& [kl, r] : *want_ranks)
        if (page.d_rank(kl.first, kl.second) != r)
            chk.fail(tag + " d-rank at " + kl_str(kl.first, kl.second) +
                     ": got " + std::to_string(page.d_rank(kl.first, kl.second)) +
                     ", want " + std::to_string(r));
    for (const auto& [kl, m] : page.d)
        if (rank(m) > 0 && !want_ranks->count(kl))
            chk.fail(tag + " has unexpected differential at " +
                     kl_str(kl.first, kl.second));
}

}  // namespace detail

// For the filtered u = 1 complex of c: E_1^{k,l} = Kh^{k+l, 2k+base} with
// d_1 the induced beta, and E_2^{k,l} the secondary group there. `base` is
// gamma (gamma + 1 for the reduced complex), the q-degree of level 0.
inline SSCheck verify_filtered_pages(const BigradedComplex& c,
                                     const SpectralSequence& ss) {
    SSCheck chk;
    Homology h = khovanov_homology(c);
    BetaStar bs = beta_star(c, h);
    DimTable kk = secondary_groups(h, bs);
    int base = c.gamma + (c.reduced ? 1 : 0);

    std::map<std::pair<int, int>, int> e1, ranks, e2;
    for (const auto& [ij, dim] : h.table().dims) {
        auto [i, j] = ij;
        int k = (j - base) / 2;
        e1[{k, i - k}] = dim;
        auto b = bs.find(ij);
        ranks[{k, i - k}] = b == bs.end() ? 0 : rank(b->second);
    }
    for (const auto& [ij, dim] : kk.dims) {
        auto [i, j] = ij;
        int k = (j - base) / 2;
        e2[{k, i - k}] = dim;
    }
    detail::compare_page(chk, ss.pages.at(1), e1, &ranks, "E1");
    detail::compare_page(chk, ss.pages.at(2), e2, nullptr, "E2");
    return chk;
}

inline SSCheck verify_filtered_pages(const BigradedComplex& c) {
    return verify_filtered_pages(c, compute_pages(build_filtered(c)));
}

// For the Bar-Natan column of c at q-degree j: E_1^{k,l} = Kh^{k+l, j+2k}
// for k >= 0 and 0 otherwise; E_2 is the secondary group for k > 0 and the
// kernel of the induced beta out of the column's own q-degree at k = 0.
inline SSCheck verify_column_pages(const BigradedComplex& c, int j,
                                   const SpectralSequence& ss) {
    SSCheck chk;
    Homology h = khovanov_homology(c);
    BetaStar bs = beta_star(c, h);
    DimTable kk = secondary_groups(h, bs);
    auto bs_rank = [&](int i, int jj) {
        auto b = bs.find({i, jj});
        return b == bs.end() ? 0 : rank(b->second);
    };

    std::map<std::pair<int, int>, int> e1, ranks, e2;
    for (const auto& [ij, dim] : h.table().dims) {
        auto [i, jj] = ij;
        if (jj < j || (jj - j) % 2 != 0) continue;
        int k = (jj - j) / 2;
        e1[{k, i - k}] = dim;
        ranks[{k, i - k}] = bs_rank(i, jj);
        if (k > 0) {
            if (int d2 = kk.at(i, jj)) e2[{k, i - k}] = d2;
        } else if (int ker = dim - bs_rank(i, jj)) {
            e2[{k, i - k}] = ker;
        }
    }
    detail::compare_page(chk, ss.pages.at(1), e1, &ranks, "E1");
    detail::compare_page(chk, ss.pages.at(2), e2, nullptr, "E2");
    return chk;
}

inline SSCheck verify_column_pages(const BigradedComplex& c, int j) {
    return verify_column_pages(c, j, compute_pages(build_barnatan_column(c, j)));
}

// At or below the stable threshold the column complex is the whole filtered
// complex with every level shifted by s = (base - j) / 2, so all pages match
// up to the bidegree shift (k, l) -> (k - s, l + s).
inline SSCheck verify_stable_column_shift(const BigradedComplex& c, int j) {
    SSCheck chk;
    if (j > stable_threshold(c)) {
        chk.fail("column is above the stable threshold");
        return chk;
    }
    int base = c.gamma + (c.reduced ? 1 : 0);
    int s = (base - j) / 2;
    SpectralSequence col = compute_pages(build_barnatan_column(c, j));
    SpectralSequence flt = compute_pages(build_filtered(c));
    size_t n = std::min(col.pages.size(), flt.pages.size());
    for (size_t r = 0; r < n; ++r) {
        for (const auto& [kl, sq] : col.pages[r].groups) {
            auto [k, l] = kl;
            if (flt.pages[r].dim(k - s, l + s) != sq.dim())
                chk.fail("page " + std::to_string(r) + " dim mismatch at " +
                         detail::kl_str(k, l));
            if (flt.pages[r].d_rank(k - s, l + s) != col.pages[r].d_rank(k, l))
                chk.fail("page " + std::to_string(r) + " d-rank mismatch at " +
                         detail::kl_str(k, l));
        }
        for (const auto& [kl, sq] : flt.pages[r].groups)
            if (col.pages[r].dim(kl.first + s, kl.second - s) != sq.dim())
                chk.fail("page " + std::to_string(r) + " missing group at " +
                         detail::kl_str(kl.first + s, kl.second - s));
    }
    return chk;
}

}  // namespace khb
