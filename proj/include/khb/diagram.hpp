#pragma once

// Oriented link diagrams from PD codes: parsing, validation, crossing signs,
// component structure, smoothings and the cube of resolutions, linking
// numbers, and the planar face data needed for circle nesting.
//
// PD convention: each crossing tuple X(a,b,c,d) lists the four incident arcs
// counterclockwise starting from the incoming under-strand, so the under
// strand runs a -> c and the over strand occupies b and d. The over-strand
// direction is inferred from arc numbering; a crossing is positive when the
// over strand enters at d, negative when it enters at b. Zero-crossing
// diagrams use the literal tokens Unknot[1] / Unlink[k].

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "khb/gf2.hpp"

namespace khb {

struct parse_error : error {
    using error::error;
};

struct Crossing {
    std::array<int, 4> arc;  // a, b, c, d
};

struct PDCode {
    std::vector<Crossing> crossings;
    int unlink_circles = 0;  // k for Unknot[1] / Unlink[k], else 0
};

// A complete smoothing of the diagram: one circle list per connected circle,
// each given as the arcs met along a trace, ordered canonically by least arc.
struct Resolution {
    uint32_t vertex = 0;  // bit c set = 1-smoothing at crossing c
    int n_crossings = 0;
    std::vector<std::vector<int>> circles;
    std::vector<int> circle_of_arc;  // arc label -> circle index (index 0 unused)

    int height() const { return std::popcount(vertex); }
    int num_circles() const { return int(circles.size()); }
};

struct CubeEdge {
    uint32_t tail = 0, head = 0;
    int crossing = 0;
    bool is_merge = false;
    // merge: tail circles (tail_a, tail_b) -> head circle head_a
    // split: tail circle tail_a -> head circles (head_a, head_b)
    int tail_a = -1, tail_b = -1, head_a = -1, head_b = -1;
    std::vector<int> tail_to_head;  // full circle map; affected entries included
};

class LinkDiagram {
public:
    static LinkDiagram parse(const std::string& text);

    int num_crossings() const { return int(pd_.crossings.size()); }
    int num_arcs() const { return 2 * num_crossings(); }
    int num_components() const { return int(components_.size()); }
    int gamma() const { return num_components() & 1; }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    int writhe() const { return n_plus_ - n_minus_; }

    const PDCode& pd() const { return pd_; }
    const Crossing& crossing(int c) const { return pd_.crossings[c]; }
    int sign(int c) const { return sign_[c]; }
    bool over_enters_at_b(int c) const { return over_in_b_[c]; }

    // arcs are 1-based; arrays sized num_arcs()+1
    int component_of_arc(int arc) const { return comp_of_arc_[arc]; }
    const std::vector<std::vector<int>>& components() const { return components_; }
    int successor_arc(int arc) const { return succ_[arc]; }

    int component_of_strand(int c, bool over) const {
        return over ? comp_of_arc_[pd_.crossings[c].arc[1]]
                    : comp_of_arc_[pd_.crossings[c].arc[0]];
    }

    Resolution resolve(uint32_t vertex) const;
    Resolution resolve(const std::vector<int>& vertex_bits) const;
    std::vector<CubeEdge> cube_edges() const;
    CubeEdge cube_edge(uint32_t tail, int crossing) const;

    std::vector<std::vector<int>> linking_matrix() const;
    int total_linking() const;  // sum over l<m of lk(L_l, L_m)

    // flip orientation on components with bit set in `choice`, then smooth
    // every crossing orientation-preservingly. Also exposed as the vertex mask.
    uint32_t orientation_vertex(uint32_t choice) const;
    Resolution orientation_resolution(uint32_t choice) const {
        return resolve(orientation_vertex(choice));
    }

    LinkDiagram mirror() const;
    std::string normalized_pd() const;

    // --- planar map data (4-valent graph with rotation from the PD tuples) ---
    // darts: 4*c + pos. face_of_corner(c, k) = face left of corner between
    // positions k and k+1. left_face_of(dart t) = face left of the directed
    // arc traversal terminating at dart t.
    int num_darts() const { return 4 * num_crossings(); }
    int num_faces() const { return num_faces_; }
    int face_of_corner(int c, int k) const { return face_of_corner_[4 * c + k]; }
    int left_face(int terminal_dart) const { return left_face_[terminal_dart]; }
    int arc_at(int dart) const { return pd_.crossings[dart / 4].arc[dart % 4]; }
    int partner_dart(int dart) const { return partner_[dart]; }
    // dart at which the arc terminates / starts (its head / tail end)
    int head_dart(int arc) const { return head_dart_[arc]; }
    int tail_dart(int arc) const { return tail_dart_[arc]; }

private:
    PDCode pd_;
    std::vector<int> sign_;          // per crossing, +1 / -1
    std::vector<bool> over_in_b_;    // over strand enters at position b
    int n_plus_ = 0, n_minus_ = 0;
    std::vector<int> succ_;          // arc -> next arc along its component
    std::vector<int> comp_of_arc_;
    std::vector<std::vector<int>> components_;  // arcs in traversal order

    std::vector<int> partner_;       // dart -> dart at other end of same arc
    std::vector<int> head_dart_, tail_dart_;
    std::vector<int> face_of_corner_;
    std::vector<int> left_face_;
    int num_faces_ = 0;

    void infer_orientations();
    void trace_components();
    void build_planar_map();
};

// ---------------------------------------------------------------------------

namespace detail {

inline void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline bool eat(const std::string& s, size_t& p, char c) {
    skip_ws(s, p);
    if (p < s.size() && s[p] == c) { ++p; return true; }
    return false;
}

inline int parse_int(const std::string& s, size_t& p) {
    skip_ws(s, p);
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw parse_error("PD parse: expected integer at offset " +
                                      std::to_string(start));
    return std::stoi(s.substr(start, p - start));
}

inline bool eat_word(const std::string& s, size_t& p, const std::string& w) {
    skip_ws(s, p);
    if (s.compare(p, w.size(), w) == 0) { p += w.size(); return true; }
    return false;
}

}  // namespace detail

inline LinkDiagram LinkDiagram::parse(const std::string& text) {
    using namespace detail;
    LinkDiagram d;
    size_t p = 0;

    if (eat_word(text, p, "Unknot") || eat_word(text, p, "Unlink")) {
        bool unknot = text.find("Unknot") != std::string::npos &&
                      text.find("Unknot") < p;
        if (!eat(text, p, '[')) throw parse_error("PD parse: expected '['");
        int k = parse_int(text, p);
        if (!eat(text, p, ']')) throw parse_error("PD parse: expected ']'");
        skip_ws(text, p);
        if (p != text.size()) throw parse_error("PD parse: trailing input");
        if (k < 1) throw parse_error("PD parse: component count must be >= 1");
        if (unknot && k != 1) throw parse_error("PD parse: Unknot takes [1]");
        d.pd_.unlink_circles = k;
        d.components_.assign(k, {});
        d.comp_of_arc_.assign(1, -1);
        d.succ_.assign(1, 0);
        return d;
    }

    if (!eat_word(text, p, "PD")) throw parse_error("PD parse: expected 'PD['");
    if (!eat(text, p, '[')) throw parse_error("PD parse: expected '['");
    while (true) {
        skip_ws(text, p);
        if (eat(text, p, ']')) break;
        if (!d.pd_.crossings.empty() && !eat(text, p, ','))
            throw parse_error("PD parse: expected ',' between crossings");
        if (!eat_word(text, p, "X")) throw parse_error("PD parse: expected 'X('");
        if (!eat(text, p, '(')) throw parse_error("PD parse: expected '('");
        Crossing x{};
        for (int k = 0; k < 4; ++k) {
            if (k && !eat(text, p, ','))
                throw parse_error("PD parse: expected ',' inside X(...)");
            x.arc[k] = parse_int(text, p);
            if (x.arc[k] < 1) throw parse_error("PD parse: arc labels must be positive");
        }
        if (!eat(text, p, ')')) throw parse_error("PD parse: expected ')'");
        d.pd_.crossings.push_back(x);
    }
    skip_ws(text, p);
    if (p != text.size()) throw parse_error("PD parse: trailing input");
    if (d.pd_.crossings.empty())
        throw parse_error("PD parse: empty PD; use Unknot[1] or Unlink[k]");

    int n = d.num_crossings();
    int na = 2 * n;
    std::vector<int> mult(na + 1, 0);
    for (const Crossing& x : d.pd_.crossings)
        for (int a : x.arc) {
            if (a > na)
                throw parse_error("arc multiplicity: arc labels must be 1.." +
                                  std::to_string(na));
            ++mult[a];
        }
    for (int a = 1; a <= na; ++a)
        if (mult[a] != 2)
            throw parse_error("arc multiplicity: arc " + std::to_string(a) +
                              " appears " + std::to_string(mult[a]) +
                              " times (expected 2)");

    d.infer_orientations();
    d.trace_components();
    d.build_planar_map();
    return d;
}

// Decide, for every crossing, whether the over strand enters at position b
// or at d. Position a is always a head (arc ends there), position c a tail.
// Each arc needs exactly one head and one tail over its two appearances.
inline void LinkDiagram::infer_orientations() {
    int n = num_crossings();
    int na = num_arcs();
    // appearances: arc -> list of (crossing, pos)
    std::vector<std::vector<std::pair<int, int>>> app(na + 1);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k)
            app[pd_.crossings[c].arc[k]].push_back({c, k});

    // state per crossing: -1 unknown, 1 over enters at b, 0 over enters at d
    std::vector<int> over_b(n, -1);
    // head/tail assignment per appearance: 'H', 'T', or 0 unknown
    auto role_from = [&](int pos, int ob) -> char {
        if (pos == 0) return 'H';
        if (pos == 2) return 'T';
        if (ob < 0) return 0;
        if (pos == 1) return ob ? 'H' : 'T';
        return ob ? 'T' : 'H';  // pos == 3
    };

    // propagate: an arc with one known role forces the other appearance
    bool changed = true;
    auto force = [&](int c, int pos, char role) -> void {
        int want_b = (pos == 1) == (role == 'H');
        if (over_b[c] == -1) { over_b[c] = want_b; changed = true; }
        else if (over_b[c] != want_b)
            throw parse_error("inconsistent PD code: no consistent orientation at crossing " +
                              std::to_string(c));
    };
    while (changed) {
        changed = false;
        for (int a = 1; a <= na; ++a) {
            char r0 = role_from(app[a][0].second, app[a][0].second % 2 ? over_b[app[a][0].first] : -1);
            char r1 = role_from(app[a][1].second, app[a][1].second % 2 ? over_b[app[a][1].first] : -1);
            if (r0 && r1) {
                if (r0 == r1)
                    throw parse_error("inconsistent PD code: arc " + std::to_string(a) +
                                      " has two " + (r0 == 'H' ? std::string("heads") : std::string("tails")));
                continue;
            }
            if (r0 && !r1) force(app[a][1].first, app[a][1].second, r0 == 'H' ? 'T' : 'H');
            else if (r1 && !r0) force(app[a][0].first, app[a][0].second, r1 == 'H' ? 'T' : 'H');
        }
    }
    // components that never pass under leave their crossings undecided; pick
    // the direction consistent with increasing arc numbering, deterministically
    for (int c = 0; c < n; ++c)
        if (over_b[c] == -1) {
            int b = pd_.crossings[c].arc[1];
            int dd = pd_.crossings[c].arc[3];
            over_b[c] = (dd == b + 1) ? 1 : 0;
            changed = true;
            // re-run propagation with this seed
            while (changed) {
                changed = false;
                for (int a = 1; a <= na; ++a) {
                    char r0 = role_from(app[a][0].second, app[a][0].second % 2 ? over_b[app[a][0].first] : -1);
                    char r1 = role_from(app[a][1].second, app[a][1].second % 2 ? over_b[app[a][1].first] : -1);
                    if (r0 && r1) {
                        if (r0 == r1)
                            throw parse_error("inconsistent PD code: arc " + std::to_string(a) +
                                              " has two identical strand roles");
                        continue;
                    }
                    if (r0 && !r1) force(app[a][1].first, app[a][1].second, r0 == 'H' ? 'T' : 'H');
                    else if (r1 && !r0) force(app[a][0].first, app[a][0].second, r1 == 'H' ? 'T' : 'H');
                }
            }
        }

    // final validation: every arc has exactly one head and one tail
    for (int a = 1; a <= na; ++a) {
        char r0 = role_from(app[a][0].second, over_b[app[a][0].first]);
        char r1 = role_from(app[a][1].second, over_b[app[a][1].first]);
        if (!((r0 == 'H' && r1 == 'T') || (r0 == 'T' && r1 == 'H')))
            throw parse_error("inconsistent PD code: arc " + std::to_string(a) +
                              " has no consistent direction");
    }

    over_in_b_.assign(n, false);
    sign_.assign(n, 0);
    n_plus_ = n_minus_ = 0;
    for (int c = 0; c < n; ++c) {
        over_in_b_[c] = over_b[c] == 1;
        sign_[c] = over_in_b_[c] ? -1 : +1;
        (sign_[c] > 0 ? n_plus_ : n_minus_)++;
    }

    // successor along the strand: a -> c, and over entry -> over exit
    succ_.assign(na + 1, 0);
    head_dart_.assign(na + 1, -1);
    tail_dart_.assign(na + 1, -1);
    for (int c = 0; c < n; ++c) {
        const Crossing& x = pd_.crossings[c];
        succ_[x.arc[0]] = x.arc[2];
        int in_pos = over_in_b_[c] ? 1 : 3;
        int out_pos = over_in_b_[c] ? 3 : 1;
        succ_[x.arc[in_pos]] = x.arc[out_pos];
        head_dart_[x.arc[0]] = 4 * c + 0;
        tail_dart_[x.arc[2]] = 4 * c + 2;
        head_dart_[x.arc[in_pos]] = 4 * c + in_pos;
        tail_dart_[x.arc[out_pos]] = 4 * c + out_pos;
    }
}

inline void LinkDiagram::trace_components() {
    int na = num_arcs();
    comp_of_arc_.assign(na + 1, -1);
    components_.clear();
    for (int a = 1; a <= na; ++a) {
        if (comp_of_arc_[a] != -1) continue;
        std::vector<int> cyc;
        int cur = a;
        do {
            if (comp_of_arc_[cur] != -1)
                throw parse_error("inconsistent PD code: component trace collapses");
            comp_of_arc_[cur] = int(components_.size());
            cyc.push_back(cur);
            cur = succ_[cur];
        } while (cur != a);
        components_.push_back(std::move(cyc));
    }
    // arc labels must form consecutive runs along each component
    for (const auto& comp : components_) {
        int lo = *std::min_element(comp.begin(), comp.end());
        int hi = *std::max_element(comp.begin(), comp.end());
        if (hi - lo + 1 != int(comp.size()))
            throw parse_error("inconsistent PD code: arc labels are not consecutive along a component");
    }
}

// Faces of the 4-valent projection, traced with the face kept on the left.
// A traversal terminating at dart t covers the corner (pos-1, pos) and
// departs along the dart at position pos-1 of the same crossing.
inline void LinkDiagram::build_planar_map() {
    int n = num_crossings();
    partner_.assign(4 * n, -1);
    {
        std::vector<int> seen(num_arcs() + 1, -1);
        for (int t = 0; t < 4 * n; ++t) {
            int a = arc_at(t);
            if (seen[a] < 0) seen[a] = t;
            else { partner_[t] = seen[a]; partner_[seen[a]] = t; }
        }
    }
    face_of_corner_.assign(4 * n, -1);
    left_face_.assign(4 * n, -1);
    num_faces_ = 0;
    for (int t0 = 0; t0 < 4 * n; ++t0) {
        if (left_face_[t0] != -1) continue;
        int f = num_faces_++;
        int t = t0;
        do {
            left_face_[t] = f;
            int c = t / 4, pos = t % 4;
            face_of_corner_[4 * c + (pos + 3) % 4] = f;
            t = partner_[4 * c + (pos + 3) % 4];
        } while (t != t0);
    }
    // Euler check on the sphere: V - E + F = 1 + (number of connected pieces)
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return uf[x] == x ? x : uf[x] = self(self, uf[x]);
    };
    for (int t = 0; t < 4 * n; ++t) {
        int a = find(find, t / 4), b = find(find, partner_[t] / 4);
        if (a != b) uf[a] = b;
    }
    int pieces = 0;
    for (int c = 0; c < n; ++c) pieces += find(find, c) == c;
    if (n - 2 * n + num_faces_ != 1 + pieces)
        throw parse_error("non-planar PD code: rotation system has nonzero genus");
}

inline Resolution LinkDiagram::resolve(uint32_t vertex) const {
    int n = num_crossings();
    Resolution res;
    res.vertex = vertex;
    res.n_crossings = n;
    if (n == 0) {
        res.circles.assign(pd_.unlink_circles, {});
        res.circle_of_arc.assign(1, -1);
        return res;
    }
    if (n < 32 && vertex >= (uint32_t(1) << n))
        throw error("resolve: vertex mask has more bits than crossings");

    // smoothing pairs darts: 0-smoothing {a,b},{c,d}; 1-smoothing {a,d},{b,c}
    std::vector<int> smooth_partner(4 * n);
    for (int c = 0; c < n; ++c) {
        bool one = (vertex >> c) & 1;
        int p0 = 4 * c;
        if (!one) {
            smooth_partner[p0 + 0] = p0 + 1; smooth_partner[p0 + 1] = p0 + 0;
            smooth_partner[p0 + 2] = p0 + 3; smooth_partner[p0 + 3] = p0 + 2;
        } else {
            smooth_partner[p0 + 0] = p0 + 3; smooth_partner[p0 + 3] = p0 + 0;
            smooth_partner[p0 + 1] = p0 + 2; smooth_partner[p0 + 2] = p0 + 1;
        }
    }

    res.circle_of_arc.assign(num_arcs() + 1, -1);
    std::vector<bool> dart_seen(4 * n, false);
    for (int a = 1; a <= num_arcs(); ++a) {
        if (res.circle_of_arc[a] != -1) continue;
        int idx = int(res.circles.size());
        std::vector<int> circle;
        int t0 = head_dart_[a];
        int t = t0;
        do {
            dart_seen[t] = true;
            int arc = arc_at(t);
            if (res.circle_of_arc[arc] == -1) {
                res.circle_of_arc[arc] = idx;
                circle.push_back(arc);
            }
            int exit = smooth_partner[t];
            dart_seen[exit] = true;
            t = partner_[exit];  // other end of the next arc
        } while (t != t0);
        res.circles.push_back(std::move(circle));
    }
    // canonical order: circles already discovered in order of least arc label,
    // since arcs are scanned ascending
    return res;
}

inline Resolution LinkDiagram::resolve(const std::vector<int>& bits) const {
    if (int(bits.size()) != num_crossings())
        throw error("resolve: vertex length mismatch (" + std::to_string(bits.size()) +
                    " bits for " + std::to_string(num_crossings()) + " crossings)");
    uint32_t v = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v |= uint32_t(1) << i;
    return resolve(v);
}

inline CubeEdge LinkDiagram::cube_edge(uint32_t tail, int c) const {
    CubeEdge e;
    e.tail = tail;
    e.head = tail | (uint32_t(1) << c);
    e.crossing = c;
    if (e.head == tail) throw error("cube_edge: crossing already 1-smoothed");
    Resolution rt = resolve(tail);
    Resolution rh = resolve(e.head);
    int delta = rh.num_circles() - rt.num_circles();
    if (delta != 1 && delta != -1)
        throw error("cube_edge: circle count changed by " + std::to_string(delta));
    e.is_merge = delta == -1;
    const Crossing& x = pd_.crossings[c];
    if (e.is_merge) {
        e.tail_a = rt.circle_of_arc[x.arc[0]];
        e.tail_b = -1;
        for (int k = 1; k < 4; ++k)
            if (rt.circle_of_arc[x.arc[k]] != e.tail_a) {
                e.tail_b = rt.circle_of_arc[x.arc[k]];
                break;
            }
        e.head_a = rh.circle_of_arc[x.arc[0]];
    } else {
        e.tail_a = rt.circle_of_arc[x.arc[0]];
        e.head_a = rh.circle_of_arc[x.arc[0]];
        e.head_b = -1;
        for (int k = 1; k < 4; ++k)
            if (rh.circle_of_arc[x.arc[k]] != e.head_a) {
                e.head_b = rh.circle_of_arc[x.arc[k]];
                break;
            }
    }
    // passthrough map via least-arc matching
    e.tail_to_head.assign(rt.num_circles(), -1);
    for (int i = 0; i < rt.num_circles(); ++i) {
        if (!e.is_merge && i == e.tail_a) { e.tail_to_head[i] = e.head_a; continue; }
        if (e.is_merge && (i == e.tail_a || i == e.tail_b)) {
            e.tail_to_head[i] = e.head_a;
            continue;
        }
        e.tail_to_head[i] = rh.circle_of_arc[rt.circles[i][0]];
    }
    if (e.is_merge && e.tail_b == -1)
        throw error("cube_edge: merge with a single source circle");
    if (!e.is_merge && e.head_b == -1)
        throw error("cube_edge: split with a single target circle");
    return e;
}

inline std::vector<CubeEdge> LinkDiagram::cube_edges() const {
    std::vector<CubeEdge> out;
    int n = num_crossings();
    if (n == 0) return out;
    out.reserve(size_t(n) << (n - 1));
    for (uint32_t v = 0; v < (uint32_t(1) << n); ++v)
        for (int c = 0; c < n; ++c)
            if (!((v >> c) & 1)) out.push_back(cube_edge(v, c));
    return out;
}

inline std::vector<std::vector<int>> LinkDiagram::linking_matrix() const {
    int k = num_components();
    std::vector<std::vector<int>> lk(k, std::vector<int>(k, 0));
    for (int c = 0; c < num_crossings(); ++c) {
        int cu = component_of_strand(c, false);
        int co = component_of_strand(c, true);
        if (cu != co) {
            lk[cu][co] += sign_[c];
            lk[co][cu] += sign_[c];
        }
    }
    for (auto& row : lk)
        for (int& v : row) {
            if (v % 2 != 0) throw error("linking_matrix: odd signed crossing count");
            v /= 2;
        }
    return lk;
}

inline int LinkDiagram::total_linking() const {
    auto lk = linking_matrix();
    int s = 0;
    for (int l = 0; l < num_components(); ++l)
        for (int m = l + 1; m < num_components(); ++m) s += lk[l][m];
    return s;
}

inline uint32_t LinkDiagram::orientation_vertex(uint32_t choice) const {
    uint32_t v = 0;
    for (int c = 0; c < num_crossings(); ++c) {
        bool fu = (choice >> component_of_strand(c, false)) & 1;
        bool fo = (choice >> component_of_strand(c, true)) & 1;
        int s = (fu != fo) ? -sign_[c] : sign_[c];
        if (s < 0) v |= uint32_t(1) << c;
    }
    return v;
}

inline LinkDiagram LinkDiagram::mirror() const {
    if (num_crossings() == 0) return *this;
    std::string out = "PD[";
    for (int c = 0; c < num_crossings(); ++c) {
        const Crossing& x = pd_.crossings[c];
        // new incoming under-strand = old incoming over-strand
        std::array<int, 4> t = over_in_b_[c]
            ? std::array<int, 4>{x.arc[1], x.arc[2], x.arc[3], x.arc[0]}
            : std::array<int, 4>{x.arc[3], x.arc[0], x.arc[1], x.arc[2]};
        out += (c ? ",X(" : "X(");
        out += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
    }
    out += "]";
    return parse(out);
}

inline std::string LinkDiagram::normalized_pd() const {
    if (num_crossings() == 0) {
        int k = int(components_.size());
        return k == 1 ? "Unknot[1]" : "Unlink[" + std::to_string(k) + "]";
    }
    std::string out = "PD[";
    for (int c = 0; c < num_crossings(); ++c) {
        const Crossing& x = pd_.crossings[c];
        out += (c ? ",X(" : "X(");
        out += std::to_string(x.arc[0]) + "," + std::to_string(x.arc[1]) + "," +
               std::to_string(x.arc[2]) + "," + std::to_string(x.arc[3]) + ")";
    }
    out += "]";
    return out;
}

}  // namespace khb
