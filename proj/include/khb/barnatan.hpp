#pragma once

// Bar-Natan link homology in both flavors: the bigraded theory BN^{i,j}
// (per-q-column homology of the F2[u] complex), its stable range, the
// filtered u=1 theory, Lee-style generators built from orientations, and the
// combinatorial dimension formula in terms of linking numbers.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "khb/cube.hpp"
#include "khb/diagram.hpp"
#include "khb/homology.hpp"

namespace khb {

// --- homology of filtered complexes -----------------------------------------

inline std::map<int, Subquotient> filtered_homology_groups(const FilteredComplex& fc) {
    std::map<int, Subquotient> h;
    for (const auto& [i, deg] : fc.degrees) {
        int n = int(deg.gens.size());
        const GF2Matrix* out = fc.d_at(i);
        const GF2Matrix* in = fc.d_at(i - 1);
        GF2Matrix num = out ? kernel_basis(*out) : GF2Matrix::identity(n);
        GF2Matrix den = in ? image_basis(*in) : GF2Matrix(0, n);
        h.emplace(i, subquotient(num, den));
    }
    return h;
}

inline std::map<int, int> filtered_homology_dims(const FilteredComplex& fc) {
    std::map<int, int> dims;
    for (const auto& [i, sq] : filtered_homology_groups(fc))
        if (sq.dim() > 0) dims[i] = sq.dim();
    return dims;
}

inline std::map<int, int> filtered_homology(const LinkDiagram& d) {
    return filtered_homology_dims(build_filtered(build_khovanov(d)));
}

inline std::map<int, int> reduced_filtered_homology(const LinkDiagram& d,
                                                    int basepoint) {
    return filtered_homology_dims(build_filtered(build_reduced(d, basepoint)));
}

// --- graded Bar-Natan theory -------------------------------------------------

struct BNTable {
    DimTable dims;                    // BN^{i,j} over the computed j-window
    int j_lo = 0, j_hi = 0;           // window bounds (inclusive)
    int stable_threshold = 0;         // j_s: columns agree for all j <= j_s
    std::map<int, int> stable_column; // i -> dim, the column at j_s
};

// j_s: the column at the bottom of the chain support already contains every
// chain group, and multiplication by u is an isomorphism of complexes onto
// each lower column of the same parity, so columns stabilize from j = j_min.
inline int stable_threshold(const BigradedComplex& c) { return c.j_min; }

inline BNTable bn_homology(const BigradedComplex& c, int j_lo, int j_hi) {
    BNTable t;
    t.j_lo = j_lo;
    t.j_hi = j_hi;
    t.stable_threshold = stable_threshold(c);
    int parity = ((c.gamma + (c.reduced ? 1 : 0)) % 2 + 2) % 2;
    for (int j = j_lo; j <= j_hi; ++j) {
        if (((j % 2) + 2) % 2 != parity) continue;
        for (const auto& [i, dim] :
             filtered_homology_dims(build_barnatan_column(c, j)))
            t.dims.set(i, j, dim);
    }
    t.stable_column =
        filtered_homology_dims(build_barnatan_column(c, t.stable_threshold));
    return t;
}

// Default window: from just below the stable threshold up to the top of the
// chain support.
inline BNTable bn_homology(const LinkDiagram& d) {
    BigradedComplex c = build_khovanov(d);
    return bn_homology(c, c.j_min - 2, c.j_max);
}

// --- dimensions of the filtered theory from linking numbers -----------------

struct OrientationClass {
    uint32_t subset = 0;  // components flipped
    int degree = 0;       // 2 sum_{l in E, m not in E} lk(l, m)
};

inline OrientationClass orientation_class(const LinkDiagram& d, uint32_t subset) {
    auto lk = d.linking_matrix();
    int k = d.num_components();
    OrientationClass oc;
    oc.subset = subset;
    for (int l = 0; l < k; ++l)
        for (int m = 0; m < k; ++m)
            if (((subset >> l) & 1) && !((subset >> m) & 1)) oc.degree += 2 * lk[l][m];
    return oc;
}

inline std::map<int, int> linking_number_dims(const LinkDiagram& d) {
    int k = d.num_components();
    std::map<int, int> dims;
    for (uint32_t e = 0; e < (uint32_t(1) << k); ++e)
        dims[orientation_class(d, e).degree]++;
    return dims;
}

// --- Lee-style generators ----------------------------------------------------

// Planar data for the circles of one resolution: nesting depth from a chosen
// outer face and, per orientation, whether the circle runs counterclockwise.
struct CircleNesting {
    std::vector<int> depth;             // per circle
    std::vector<uint32_t> inside_mask;  // faces' containment sets, per res face
    std::vector<int> res_face;          // diagram face -> resolution face id
    std::vector<uint32_t> face_mask;    // res face -> set of circles containing it
};

inline CircleNesting circle_nesting(const LinkDiagram& d, const Resolution& res) {
    CircleNesting cn;
    int nf = d.num_faces();
    // union-find on diagram faces: each smoothing joins two opposite corners
    std::vector<int> uf(nf);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return uf[x] == x ? x : uf[x] = self(self, uf[x]);
    };
    for (int c = 0; c < d.num_crossings(); ++c) {
        bool one = (res.vertex >> c) & 1;
        int fa = d.face_of_corner(c, one ? 0 : 1);
        int fb = d.face_of_corner(c, one ? 2 : 3);
        int ra = find(find, fa), rb = find(find, fb);
        if (ra != rb) uf[ra] = rb;
    }
    cn.res_face.resize(nf);
    std::map<int, int> id;
    for (int f = 0; f < nf; ++f) {
        int r = find(find, f);
        auto [it, fresh] = id.try_emplace(r, int(id.size()));
        cn.res_face[f] = it->second;
    }
    int nr = int(id.size());

    // adjacency: the two sides of every arc are separated by the arc's circle
    struct Side { int a, b, circle; };
    std::vector<Side> sides;
    for (int a = 1; a <= d.num_arcs(); ++a) {
        int fa = cn.res_face[d.left_face(d.head_dart(a))];
        int fb = cn.res_face[d.left_face(d.tail_dart(a))];
        sides.push_back({fa, fb, res.circle_of_arc[a]});
    }

    // containment sets by BFS from the outer face (diagram face 0; any choice
    // of outer face on the sphere yields a valid planar embedding)
    cn.face_mask.assign(nr, 0);
    std::vector<bool> seen(nr, false);
    std::vector<int> queue{cn.res_face[0]};
    seen[cn.res_face[0]] = true;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (const Side& s : sides) {
            int other = s.a == f ? s.b : (s.b == f ? s.a : -1);
            if (other < 0) continue;
            uint32_t mask = cn.face_mask[f] ^ (uint32_t(1) << s.circle);
            if (!seen[other]) {
                seen[other] = true;
                cn.face_mask[other] = mask;
                queue.push_back(other);
            } else if (cn.face_mask[other] != mask) {
                throw error("circle_nesting: inconsistent containment sets");
            }
        }
    }

    cn.depth.assign(res.num_circles(), 0);
    for (const Side& s : sides)
        cn.depth[s.circle] =
            int(std::popcount(cn.face_mask[s.a] & ~(uint32_t(1) << s.circle)));
    return cn;
}

// Whether circle z of the oriented resolution runs counterclockwise: true iff
// the face to its left (along its traversal direction) lies inside it.
inline bool circle_ccw(const LinkDiagram& d, const Resolution& res,
                       const CircleNesting& cn, int z, uint32_t flips) {
    int arc = res.circles[z][0];
    bool flipped = (flips >> d.component_of_arc(arc)) & 1;
    int dart = flipped ? d.tail_dart(arc) : d.head_dart(arc);
    int lf = cn.res_face[d.left_face(dart)];
    return (cn.face_mask[lf] >> z) & 1;
}

struct LeeGenerator {
    int degree = 0;          // homological degree i
    uint32_t vertex = 0;     // the oriented resolution
    uint32_t group_a = 0;    // circles labelled a = 1 + x
    std::vector<Gen> chain;  // expansion in the {1, x} state basis
};

// The cycle attached to the orientation that flips the components in E:
// label Group A circles with a = 1 + x and Group B circles with b = x, then
// expand. Group membership is (nesting depth + winding indicator) mod 2.
inline LeeGenerator lee_generator(const LinkDiagram& d, uint32_t flips) {
    LeeGenerator g;
    if (d.num_components() > 32 || flips >= (uint32_t(1) << d.num_components()))
        throw error("lee_generator: flip set is not a subset of the components");
    if (d.num_crossings() == 0) {
        // no planar data; flipping a split circle toggles its group
        g.vertex = 0;
        g.degree = 0;
        g.group_a = ~flips & ((uint32_t(1) << d.num_components()) - 1);
    } else {
        g.vertex = d.orientation_vertex(flips);
        g.degree = std::popcount(g.vertex) - d.n_minus();
        Resolution res = d.resolve(g.vertex);
        CircleNesting cn = circle_nesting(d, res);
        for (int z = 0; z < res.num_circles(); ++z) {
            bool ccw = circle_ccw(d, res, cn, z, flips);
            if ((cn.depth[z] + (ccw ? 0 : 1)) % 2 == 0)
                g.group_a |= uint32_t(1) << z;
        }
    }
    // expand: b-circles always carry x; a-circles contribute 1 or x freely
    int circles = d.num_crossings() == 0 ? d.num_components()
                                         : d.resolve(g.vertex).num_circles();
    uint32_t b_circles = ~g.group_a & ((uint32_t(1) << circles) - 1);
    std::vector<int> a_bits;
    for (int z = 0; z < circles; ++z)
        if ((g.group_a >> z) & 1) a_bits.push_back(z);
    for (uint32_t pick = 0; pick < (uint32_t(1) << a_bits.size()); ++pick) {
        uint32_t labels = b_circles;
        for (size_t k = 0; k < a_bits.size(); ++k)
            if ((pick >> k) & 1) labels |= uint32_t(1) << a_bits[k];
        g.chain.push_back(Gen{g.vertex, labels});
    }
    return g;
}

// Coordinates of a Lee generator in its degree of the filtered complex.
inline GF2Vector lee_vector(const FilteredComplex& fc, const LeeGenerator& g) {
    GF2Vector v(fc.dim(g.degree));
    for (const Gen& s : g.chain) v.flip(fc.position(g.degree, s));
    return v;
}

// --- consistency checks --------------------------------------------------

struct StableIsoReport {
    bool ok = true;
    std::vector<Bigrading> mismatches;  // offending (i,j)
};

// The stable column equals the filtered theory; additionally the
// multiplication-by-u chain map induces isomorphisms BN^{i,j} -> BN^{i,j-2}
// for computed j <= j_s.
inline StableIsoReport stable_iso_check(const LinkDiagram& d) {
    StableIsoReport rep;
    BigradedComplex c = build_khovanov(d);
    BNTable bn = bn_homology(c, c.j_min - 4, c.j_max);
    std::map<int, int> filt = filtered_homology(d);
    if (bn.stable_column != filt) {
        rep.ok = false;
        for (const auto& [i, dim] : bn.stable_column)
            rep.mismatches.push_back({i, bn.stable_threshold});
    }
    for (int j = bn.stable_threshold; j >= bn.j_lo + 2; j -= 2) {
        FilteredComplex hi = build_barnatan_column(c, j);
        FilteredComplex lo = build_barnatan_column(c, j - 2);
        auto hh = filtered_homology_groups(hi);
        auto lh = filtered_homology_groups(lo);
        for (const auto& [i, src] : hh) {
            if (src.dim() == 0) continue;
            auto it = lh.find(i);
            if (it == lh.end() || it->second.dim() != src.dim()) {
                rep.ok = false;
                rep.mismatches.push_back({i, j});
                continue;
            }
            // u sends summand p of column j to summand p+1 of column j-2,
            // which is the identity on the underlying states
            GF2Matrix u(lo.dim(i), hi.dim(i));
            for (int k = 0; k < hi.dim(i); ++k)
                u.set(lo.position(i, hi.degrees.at(i).gens[k]), k, true);
            if (rank(induced_map(u, src, it->second)) != src.dim()) {
                rep.ok = false;
                rep.mismatches.push_back({i, j});
            }
        }
    }
    return rep;
}

// Change of basis from {1, x} states to the diagonalizing {a, b} states
// (a = 1 + x, b = x). Per circle: 1 = a + b, x = b, so the matrix is the
// subset-zeta within each cube vertex; mod 2 it is an involution. In the
// {a, b} basis the Frobenius pairing makes states orthonormal, so the adjoint
// differential is the plain matrix transpose there.
inline GF2Matrix ab_change(const FilteredComplex::Degree& deg) {
    int n = int(deg.gens.size());
    GF2Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (deg.gens[r].mask == deg.gens[c].mask &&
                (deg.gens[c].labels & ~deg.gens[r].labels) == 0)
                m.set(r, c, true);
    return m;
}

// Differentials rewritten in the {a, b} basis.
inline std::map<int, GF2Matrix> ab_differentials(const FilteredComplex& fc) {
    std::map<int, GF2Matrix> dab;
    for (const auto& [i, m] : fc.d)
        if (fc.dim(i + 1) > 0)
            dab.emplace(i, ab_change(fc.degrees.at(i + 1)) * m *
                               ab_change(fc.degrees.at(i)));
    return dab;
}

// dim(ker d intersect ker d-adjoint) per degree, computed in the {a, b}
// basis. This always contains the Lee generators and surjects onto homology
// for many diagrams, but over F2 the Hodge-style identification can be
// strictly larger (the pairing is isotropic on parts of the image of d).
inline std::map<int, int> harmonic_dims(const FilteredComplex& fc) {
    std::map<int, GF2Matrix> dab = ab_differentials(fc);
    std::map<int, int> dims;
    for (const auto& [i, deg] : fc.degrees) {
        int n = int(deg.gens.size());
        GF2Matrix stack(0, n);
        auto out = dab.find(i);
        auto in = dab.find(i - 1);
        if (out != dab.end()) stack = GF2Matrix::vstack(stack, out->second);
        if (in != dab.end()) stack = GF2Matrix::vstack(stack, in->second.transpose());
        int dim = n - rank(stack);
        if (dim > 0) dims[i] = dim;
    }
    return dims;
}

// Assert z is a cycle for d and for its adjoint (computed in the {a, b}
// basis, where the generator is a single orthonormal state).
inline bool is_bicycle(const FilteredComplex& fc, const LeeGenerator& g) {
    std::map<int, GF2Matrix> dab = ab_differentials(fc);
    GF2Vector v = ab_change(fc.degrees.at(g.degree)).apply(lee_vector(fc, g));
    if (v.popcount() != 1) return false;
    auto out = dab.find(g.degree);
    if (out != dab.end() && !out->second.apply(v).is_zero()) return false;
    auto in = dab.find(g.degree - 1);
    if (in != dab.end() && !in->second.transpose().apply(v).is_zero()) return false;
    return true;
}

}  // namespace khb
