#pragma once

// Chain complexes from the cube of resolutions over GF(2): the Khovanov
// differential assembled from (m-bar, Delta-bar), the bidegree-(1,2) map beta
// from (m-tilde, Delta-tilde), and the basepointed reduced subcomplexes.
//
// Gradings: for a state at cube height h with circle labels in {1, x},
//   i = h - n_minus,   j = (#1 - #x) + i + n_plus - n_minus,
// so the unknotted corpus diagrams land on the standard support.

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "khb/diagram.hpp"
#include "khb/gf2.hpp"

namespace khb {

using Bigrading = std::pair<int, int>;  // (i, j)

struct Gen {
    uint32_t mask;    // cube vertex
    uint32_t labels;  // bit z set = circle z carries x
    bool operator<(const Gen& o) const {
        return mask != o.mask ? mask < o.mask : labels < o.labels;
    }
    bool operator==(const Gen& o) const {
        return mask == o.mask && labels == o.labels;
    }
};

struct BigradedComplex {
    std::map<Bigrading, std::vector<Gen>> groups;
    std::map<Bigrading, GF2Matrix> d_blocks;     // (i,j) -> (i+1,j)
    std::map<Bigrading, GF2Matrix> beta_blocks;  // (i,j) -> (i+1,j+2)
    int n_plus = 0, n_minus = 0, gamma = 0;
    int i_min = 0, i_max = 0, j_min = 0, j_max = 0;
    bool reduced = false;
    int basepoint = 0;  // marked arc for reduced complexes

    int dim(int i, int j) const {
        auto it = groups.find({i, j});
        return it == groups.end() ? 0 : int(it->second.size());
    }
    const GF2Matrix* d_block(int i, int j) const {
        auto it = d_blocks.find({i, j});
        return it == d_blocks.end() ? nullptr : &it->second;
    }
    const GF2Matrix* beta_block(int i, int j) const {
        auto it = beta_blocks.find({i, j});
        return it == beta_blocks.end() ? nullptr : &it->second;
    }
};

namespace detail {

struct CubeData {
    const LinkDiagram* d;
    std::vector<Resolution> res;       // per vertex mask
    std::vector<std::vector<CubeEdge>> edges_from;  // per vertex mask
    int n;

    explicit CubeData(const LinkDiagram& diagram) : d(&diagram), n(diagram.num_crossings()) {
        uint32_t total = uint32_t(1) << n;
        res.reserve(total);
        edges_from.resize(total);
        for (uint32_t v = 0; v < total; ++v) {
            res.push_back(diagram.resolve(v));
            for (int c = 0; c < n; ++c)
                if (!((v >> c) & 1)) edges_from[v].push_back(diagram.cube_edge(v, c));
        }
    }
};

struct StateIndex {
    // (i,j) group membership with position lookup
    std::map<Bigrading, std::vector<Gen>> groups;
    std::map<Bigrading, std::unordered_map<uint64_t, int>> pos;

    static uint64_t key(Gen g) { return (uint64_t(g.mask) << 32) | g.labels; }

    void insert(Bigrading ij, Gen g) {
        auto& vec = groups[ij];
        pos[ij][key(g)] = int(vec.size());
        vec.push_back(g);
    }
    int position(Bigrading ij, Gen g) const {
        return pos.at(ij).at(key(g));
    }
};

}  // namespace detail

// Shared builder. `keep` filters states; a filtered-out image of a kept state
// is a closure violation. j_shift offsets the q-grading (reduced theory).
template <typename Keep>
inline BigradedComplex build_complex(const LinkDiagram& d, Keep keep, int j_shift) {
    detail::CubeData cube(d);
    BigradedComplex c;
    c.n_plus = d.n_plus();
    c.n_minus = d.n_minus();
    c.gamma = d.gamma();

    auto grading = [&](uint32_t mask, uint32_t labels) -> Bigrading {
        int circles = cube.res[mask].num_circles();
        int h = std::popcount(mask);
        int i = h - d.n_minus();
        int deg = circles - 2 * std::popcount(labels);
        int j = deg + i + d.n_plus() - d.n_minus() + j_shift;
        return {i, j};
    };

    detail::StateIndex idx;
    uint32_t total = uint32_t(1) << cube.n;
    for (uint32_t v = 0; v < total; ++v) {
        int circles = cube.res[v].num_circles();
        for (uint32_t labels = 0; labels < (uint32_t(1) << circles); ++labels) {
            Gen g{v, labels};
            if (!keep(v, labels)) continue;
            idx.insert(grading(v, labels), g);
        }
    }
    c.groups = idx.groups;

    bool first = true;
    for (const auto& [ij, gens] : c.groups) {
        if (first || ij.first < c.i_min) c.i_min = ij.first;
        if (first || ij.first > c.i_max) c.i_max = ij.first;
        if (first || ij.second < c.j_min) c.j_min = ij.second;
        if (first || ij.second > c.j_max) c.j_max = ij.second;
        first = false;
    }

    std::map<Bigrading, std::vector<std::pair<int, int>>> d_trip, b_trip;

    // image states of one edge map applied to (tail state, map choice)
    // merge: khovanov m(x,x)=0, m(1,l)=m(l,1)=l ; beta only m(x,x)=x
    // split: khovanov D(1)=1x+x1, D(x)=xx ; beta D(1)=11, D(x)=0
    auto emit = [&](Bigrading src_ij, int src_pos, Gen dst, bool is_beta) {
        if (!keep(dst.mask, dst.labels))
            throw error("build_complex: differential leaves the kept subcomplex");
        Bigrading dst_ij = grading(dst.mask, dst.labels);
        Bigrading want{src_ij.first + 1, src_ij.second + (is_beta ? 2 : 0)};
        if (dst_ij != want)
            throw error("build_complex: edge map violates its bidegree");
        int dst_pos = idx.position(dst_ij, dst);
        (is_beta ? b_trip : d_trip)[src_ij].push_back({dst_pos, src_pos});
    };

    for (uint32_t v = 0; v < total; ++v) {
        int circles = cube.res[v].num_circles();
        for (const CubeEdge& e : cube.edges_from[v]) {
            for (uint32_t labels = 0; labels < (uint32_t(1) << circles); ++labels) {
                if (!keep(v, labels)) continue;
                Bigrading src_ij = grading(v, labels);
                int src_pos = idx.position(src_ij, Gen{v, labels});

                // passthrough labels
                uint32_t base = 0;
                for (int i = 0; i < circles; ++i) {
                    bool affected = e.is_merge ? (i == e.tail_a || i == e.tail_b)
                                               : (i == e.tail_a);
                    if (!affected && ((labels >> i) & 1))
                        base |= uint32_t(1) << e.tail_to_head[i];
                }

                auto dst = [&](uint32_t extra) { return Gen{e.head, base | extra}; };
                uint32_t ha = uint32_t(1) << e.head_a;

                if (e.is_merge) {
                    bool xa = (labels >> e.tail_a) & 1;
                    bool xb = (labels >> e.tail_b) & 1;
                    if (!(xa && xb))  // khovanov merge
                        emit(src_ij, src_pos, dst((xa || xb) ? ha : 0), false);
                    else  // beta merge: m(x,x) = x
                        emit(src_ij, src_pos, dst(ha), true);
                } else {
                    uint32_t hb = uint32_t(1) << e.head_b;
                    if ((labels >> e.tail_a) & 1) {
                        emit(src_ij, src_pos, dst(ha | hb), false);  // D(x) = x(x)x
                    } else {
                        emit(src_ij, src_pos, dst(ha), false);  // D(1) = 1(x)x + x(x)1
                        emit(src_ij, src_pos, dst(hb), false);
                        emit(src_ij, src_pos, dst(0), true);  // D~(1) = 1(x)1
                    }
                }
            }
        }
    }

    for (auto& [ij, trips] : d_trip) {
        Bigrading dst{ij.first + 1, ij.second};
        c.d_blocks.emplace(ij, GF2Matrix::from_triplets(c.dim(dst.first, dst.second),
                                                        c.dim(ij.first, ij.second), trips));
    }
    for (auto& [ij, trips] : b_trip) {
        Bigrading dst{ij.first + 1, ij.second + 2};
        c.beta_blocks.emplace(ij, GF2Matrix::from_triplets(c.dim(dst.first, dst.second),
                                                           c.dim(ij.first, ij.second), trips));
    }
    return c;
}

inline BigradedComplex build_khovanov(const LinkDiagram& d) {
    return build_complex(d, [](uint32_t, uint32_t) { return true; }, 0);
}

// Basepointed subcomplex: states with x on the circle through the marked arc,
// with the q-grading shifted by +1. Knots only.
inline BigradedComplex build_reduced(const LinkDiagram& d, int basepoint) {
    if (d.num_components() != 1)
        throw error("build_reduced: reduced theory requires a knot (got " +
                    std::to_string(d.num_components()) + " components)");
    if (d.num_crossings() == 0) {
        // unknot: the single circle is marked
        BigradedComplex c = build_complex(
            d, [](uint32_t, uint32_t labels) { return (labels & 1) != 0; }, 1);
        c.reduced = true;
        return c;
    }
    if (basepoint < 1 || basepoint > d.num_arcs())
        throw error("build_reduced: basepoint arc " + std::to_string(basepoint) +
                    " not found");
    detail::CubeData cube(d);  // local copy just for marked-circle lookup
    std::vector<int> marked(cube.res.size());
    for (size_t v = 0; v < cube.res.size(); ++v)
        marked[v] = cube.res[v].circle_of_arc[basepoint];
    BigradedComplex c = build_complex(
        d,
        [&](uint32_t mask, uint32_t labels) {
            return ((labels >> marked[mask]) & 1) != 0;
        },
        1);
    c.reduced = true;
    c.basepoint = basepoint;
    return c;
}

// --- filtered total complexes ----------------------------------------------

// A singly-graded complex with a filtration level attached to every basis
// element. d never decreases the level; levels are bounded.
struct FilteredComplex {
    struct Degree {
        std::vector<Gen> gens;
        std::vector<int> level;
        std::vector<Bigrading> origin;  // (i,j) block each element came from
    };
    std::map<int, Degree> degrees;
    std::map<int, GF2Matrix> d;  // i -> i+1
    int gamma = 0;
    int level_min = 0, level_max = 0;

    int dim(int i) const {
        auto it = degrees.find(i);
        return it == degrees.end() ? 0 : int(it->second.gens.size());
    }
    const GF2Matrix* d_at(int i) const {
        auto it = d.find(i);
        return it == d.end() ? nullptr : &it->second;
    }
    int position(int i, Gen g) const {
        const auto& gens = degrees.at(i).gens;
        for (size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == g) return int(k);
        throw error("FilteredComplex: generator not found in degree " +
                    std::to_string(i));
    }
};

// Collapse the q-grading of a bigraded complex into a filtration. `keep_j`
// selects which q-columns enter; `level_of_j` is the filtration level. The
// differential is d = khovanov + beta blocks.
template <typename KeepJ, typename LevelOf>
inline FilteredComplex collapse_q(const BigradedComplex& c, KeepJ keep_j,
                                  LevelOf level_of_j) {
    FilteredComplex fc;
    fc.gamma = c.gamma;
    std::map<int, std::map<Bigrading, int>> offset;  // degree -> block -> start
    for (const auto& [ij, gens] : c.groups) {
        if (!keep_j(ij.second)) continue;
        auto& deg = fc.degrees[ij.first];
        offset[ij.first][ij] = int(deg.gens.size());
        int lvl = level_of_j(ij.second);
        for (const Gen& g : gens) {
            deg.gens.push_back(g);
            deg.level.push_back(lvl);
            deg.origin.push_back(ij);
        }
    }
    bool first = true;
    for (const auto& [i, deg] : fc.degrees)
        for (int l : deg.level) {
            if (first || l < fc.level_min) fc.level_min = l;
            if (first || l > fc.level_max) fc.level_max = l;
            first = false;
        }

    for (const auto& [i, deg] : fc.degrees) {
        GF2Matrix m(fc.dim(i + 1), fc.dim(i));
        auto place = [&](const GF2Matrix& blk, Bigrading src, Bigrading dst) {
            if (!keep_j(dst.second)) {
                if (!blk.is_zero())
                    throw error("collapse_q: differential leaves the kept columns");
                return;
            }
            int ro = offset.at(dst.first).at(dst);
            int co = offset.at(src.first).at(src);
            for (int r = 0; r < blk.rows(); ++r)
                for (int cc = 0; cc < blk.cols(); ++cc)
                    if (blk.get(r, cc)) m.set(ro + r, co + cc, true);
        };
        for (const auto& [ij, n] : offset.at(i)) {
            auto [bi, bj] = ij;
            if (const GF2Matrix* blk = c.d_block(bi, bj))
                place(*blk, ij, {bi + 1, bj});
            if (const GF2Matrix* blk = c.beta_block(bi, bj))
                place(*blk, ij, {bi + 1, bj + 2});
        }
        if (m.rows() || m.cols()) fc.d.emplace(i, std::move(m));
    }
    return fc;
}

// Bar-Natan q-column: C^{i,j} = sum over p >= 0 of C-bar^{i,j+2p}, level p,
// d = khovanov part (level-preserving) + beta part (level-raising).
inline FilteredComplex build_barnatan_column(const BigradedComplex& c, int j) {
    return collapse_q(
        c, [&](int jj) { return jj >= j && ((jj - j) % 2 == 0); },
        [&](int jj) { return (jj - j) / 2; });
}

inline FilteredComplex build_barnatan_column(const LinkDiagram& d, int j) {
    return build_barnatan_column(build_khovanov(d), j);
}

// Filtered (u = 1) total complex: all q-columns, level k with q = 2k + gamma
// (unreduced) or q = 2k + gamma + 1 (reduced).
inline FilteredComplex build_filtered(const BigradedComplex& c) {
    int base = c.gamma + (c.reduced ? 1 : 0);
    return collapse_q(
        c, [](int) { return true; }, [&](int jj) { return (jj - base) / 2; });
}

inline FilteredComplex build_filtered(const LinkDiagram& d) {
    return build_filtered(build_khovanov(d));
}

// --- verification helpers ------------------------------------------------

// Check d^2 = 0, beta^2 = 0 and d beta = beta d blockwise.
inline void check_complex(const BigradedComplex& c) {
    auto zero_ok = [&](const GF2Matrix* a, const GF2Matrix* b) {
        // composition b after a; missing blocks are zero
        if (!a || !b) return true;
        return ((*b) * (*a)).is_zero();
    };
    for (const auto& [ij, blk] : c.d_blocks) {
        auto [i, j] = ij;
        if (!zero_ok(&blk, c.d_block(i + 1, j)))
            throw error("check_complex: d^2 != 0 at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
    for (const auto& [ij, blk] : c.beta_blocks) {
        auto [i, j] = ij;
        if (!zero_ok(&blk, c.beta_block(i + 1, j + 2)))
            throw error("check_complex: beta^2 != 0 at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
    // chain-map condition: d beta = beta d (mod 2) from (i,j) to (i+2,j+2)
    for (const auto& [ij, _] : c.groups) {
        auto [i, j] = ij;
        const GF2Matrix* b0 = c.beta_block(i, j);
        const GF2Matrix* d1 = c.d_block(i + 1, j + 2);
        const GF2Matrix* d0 = c.d_block(i, j);
        const GF2Matrix* b1 = c.beta_block(i + 1, j);
        int rows = c.dim(i + 2, j + 2), cols = c.dim(i, j);
        GF2Matrix lhs(rows, cols), rhs(rows, cols);
        if (b0 && d1) lhs = (*d1) * (*b0);
        if (d0 && b1) rhs = (*b1) * (*d0);
        if (!(lhs == rhs))
            throw error("check_complex: d beta != beta d at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
    }
}

// Check d^2 = 0 and that d never decreases the filtration level.
inline void check_filtered(const FilteredComplex& fc) {
    for (const auto& [i, m] : fc.d) {
        if (const GF2Matrix* next = fc.d_at(i + 1))
            if (!((*next) * m).is_zero())
                throw error("check_filtered: d^2 != 0 at degree " + std::to_string(i));
        auto tgt = fc.degrees.find(i + 1);
        if (tgt == fc.degrees.end()) {
            if (!m.is_zero()) throw error("check_filtered: d into empty degree");
            continue;
        }
        const auto& src = fc.degrees.at(i);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m.get(r, c) && tgt->second.level[r] < src.level[c])
                    throw error("check_filtered: d decreases filtration level at degree " +
                                std::to_string(i));
    }
}

}  // namespace khb
