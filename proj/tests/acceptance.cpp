// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fails. Every check is exact (dimension tables, ranks, polynomials).

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "khb/barnatan.hpp"
#include "khb/corpus.hpp"
#include "khb/cube.hpp"
#include "khb/diagram.hpp"
#include "khb/homology.hpp"
#include "khb/spectral.hpp"

using namespace khb;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& note = "") {
    std::cout << "criterion " << (n < 10 ? " " : "") << n << " ["
              << (ok ? "PASS" : "FAIL") << "] " << what;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

LinkDiagram get(const std::string& name) {
    return LinkDiagram::parse(corpus::pd(name));
}

DimTable trefoil_kh_table() {
    DimTable want;
    for (auto [i, j] : {std::pair{0, -1}, {0, -3}, {-2, -5}, {-2, -7}, {-3, -7},
                        {-3, -9}})
        want.set(i, j, 1);
    return want;
}

bool c1_trefoil_kh() {
    return khovanov_homology(build_khovanov(get("trefoil"))).table() ==
           trefoil_kh_table();
}

bool c2_trefoil_beta() {
    BigradedComplex c = build_khovanov(get("trefoil"));
    Homology h = khovanov_homology(c);
    BetaStar bs = beta_star(c, h);
    for (const auto& [ij, m] : bs) {
        int want = (ij == Bigrading{-3, -9} || ij == Bigrading{-3, -7}) ? 1 : 0;
        if (rank(m) != want) return false;
    }
    return bs.count({-3, -9}) == 1 && bs.count({-3, -7}) == 1;
}

bool c3_trefoil_secondary() {
    BigradedComplex c = build_khovanov(get("trefoil"));
    Homology h = khovanov_homology(c);
    return poincare_polynomial(secondary_groups(h, beta_star(c, h)))
               .to_string() == "q^-1 + q^-3";
}

bool c4_trefoil_bn() {
    BigradedComplex c = build_khovanov(get("trefoil"));
    BNTable t = bn_homology(c, c.j_min, c.j_max);
    DimTable want;
    want.set(0, -1, 1);
    want.set(0, -3, 2);
    want.set(-2, -5, 1);
    want.set(0, -5, 2);
    want.set(-2, -7, 1);
    want.set(0, -7, 2);
    want.set(0, -9, 2);
    if (t.dims != want || t.stable_threshold != -9) return false;
    std::map<int, int> stable{{0, 2}};
    for (int j : {-9, -11, -13, -15})
        if (filtered_homology_dims(build_barnatan_column(c, j)) != stable)
            return false;
    return t.stable_column == stable;
}

bool c5_trefoil_ss() {
    BigradedComplex c = build_khovanov(get("trefoil"));
    DimTable kh = trefoil_kh_table();
    for (int j : {-1, -3, -5, -7, -9}) {
        SpectralSequence ss = compute_pages(build_barnatan_column(c, j));
        // E_1 re-indexes the Kh table into the first quadrant of the column
        std::map<std::pair<int, int>, int> e1;
        for (const auto& [ipq, dim] : kh.dims) {
            auto [i, jj] = ipq;
            if (jj >= j && (jj - j) % 2 == 0) e1[{(jj - j) / 2, i - (jj - j) / 2}] = dim;
        }
        if (ss.pages.at(1).dims() != e1) return false;
        if (!verify_column_pages(c, j, ss).ok) return false;
        if (ss.pages.at(2).dims() != ss.infinity().dims()) return false;
        if (abutment_dims(ss.infinity()) !=
            filtered_homology_dims(build_barnatan_column(c, j)))
            return false;
    }
    return true;
}

bool c6_linking_numbers() {
    const std::vector<std::pair<std::string, std::map<int, int>>> want = {
        {"unknot", {{0, 2}}},          {"trefoil", {{0, 2}}},
        {"figure_eight", {{0, 2}}},    {"hopf_pos", {{0, 2}, {2, 2}}},
        {"hopf_neg", {{-2, 2}, {0, 2}}}, {"unlink2", {{0, 4}}},
    };
    for (const auto& [name, dims] : want) {
        LinkDiagram d = get(name);
        if (filtered_homology(d) != dims) return false;
        if (linking_number_dims(d) != dims) return false;
    }
    return true;
}

bool c7_stable_iso() {
    for (const auto& e : corpus::entries())
        if (!stable_iso_check(LinkDiagram::parse(e.pd)).ok) return false;
    return true;
}

bool c8_filtered_ss() {
    for (const auto& e : corpus::entries())
        if (!verify_filtered_pages(build_khovanov(LinkDiagram::parse(e.pd))).ok)
            return false;
    return true;
}

bool c9_reduced() {
    for (const auto& name : corpus::knots()) {
        LinkDiagram d = get(name);
        int arcs = d.num_crossings() == 0 ? 0 : d.num_arcs();
        DimTable red =
            khovanov_homology(build_reduced(d, arcs == 0 ? 0 : 1)).table();
        for (int bp = 2; bp <= arcs; ++bp)
            if (khovanov_homology(build_reduced(d, bp)).table() != red)
                return false;
        DimTable kh = khovanov_homology(build_khovanov(d)).table();
        DimTable doubled;
        for (const auto& [ij, dim] : red.dims) {
            doubled.set(ij.first, ij.second - 1,
                        doubled.at(ij.first, ij.second - 1) + dim);
            doubled.set(ij.first, ij.second + 1,
                        doubled.at(ij.first, ij.second + 1) + dim);
        }
        if (doubled != kh) return false;
    }
    return true;
}

bool c10_thin() {
    LaurentPoly2 tre =
        poincare_polynomial(khovanov_homology(build_khovanov(get("trefoil"))).table());
    LaurentPoly2 khp = thin_decompose(tre, -2);
    if (!(khp == LaurentPoly2::monomial(-3, -6))) return false;
    if (!(thin_reconstruct(khp, -2) == tre)) return false;

    LaurentPoly2 f8 = poincare_polynomial(
        khovanov_homology(build_khovanov(get("figure_eight"))).table());
    int s = infer_s(f8);
    LaurentPoly2 f8p = thin_decompose(f8, s);
    for (const auto& [ij, coeff] : f8p.coeffs)
        if (ij.second != 2 * ij.first || coeff <= 0) return false;
    return thin_reconstruct(f8p, s) == f8;
}

bool c11_invariance() {
    for (const auto& [a, b] : corpus::equivalent_pairs()) {
        LinkDiagram da = get(a), db = get(b);
        BigradedComplex ca = build_khovanov(da), cb = build_khovanov(db);
        Homology ha = khovanov_homology(ca), hb = khovanov_homology(cb);
        if (ha.table() != hb.table()) return false;
        if (secondary_groups(ha, beta_star(ca, ha)) !=
            secondary_groups(hb, beta_star(cb, hb)))
            return false;
        int lo = std::min(ca.j_min, cb.j_min) - 2;
        int hi = std::max(ca.j_max, cb.j_max);
        if (bn_homology(ca, lo, hi).dims != bn_homology(cb, lo, hi).dims)
            return false;
        if (filtered_homology(da) != filtered_homology(db)) return false;
        int bpa = da.num_crossings() == 0 ? 0 : 1;
        int bpb = db.num_crossings() == 0 ? 0 : 1;
        if (khovanov_homology(build_reduced(da, bpa)).table() !=
            khovanov_homology(build_reduced(db, bpb)).table())
            return false;
    }
    return true;
}

bool c12_properties(std::string& note) {
    // differential and beta identities on every built complex
    for (const auto& e : corpus::entries()) {
        LinkDiagram d = LinkDiagram::parse(e.pd);
        BigradedComplex c = build_khovanov(d);
        check_complex(c);
        check_filtered(build_filtered(c));
        // beta_* squares to zero on homology
        Homology h = khovanov_homology(c);
        BetaStar bs = beta_star(c, h);
        for (const auto& [ij, m] : bs) {
            auto next = bs.find({ij.first + 1, ij.second + 2});
            if (next != bs.end() && rank(next->second * m) != 0) return false;
        }
    }
    for (const auto& name : corpus::knots()) {
        LinkDiagram d = get(name);
        check_complex(build_reduced(d, d.num_crossings() == 0 ? 0 : 1));
    }

    // randomized GF(2) properties
    std::mt19937 rng(412);
    std::uniform_int_distribution<int> dim(1, 10), bit(0, 1);
    for (int trial = 0; trial < 1200; ++trial) {
        int r = dim(rng), c = dim(rng);
        GF2Matrix m(r, c);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b)
                if (bit(rng)) m.set(a, b, true);
        if (rank(m) + kernel_basis(m).rows() != c) return false;

        // subquotient dimension is independent of the presented bases
        GF2Matrix num = m;
        std::uniform_int_distribution<int> pick(0, r - 1);
        GF2Matrix den(r / 2, c);
        for (int a = 0; a < den.rows(); ++a) den.set_row(a, num.row(pick(rng)));
        Subquotient sq = subquotient(num, den);
        GF2Matrix num2 = num, den2 = den;
        for (int a = 0; a < num2.rows(); ++a) {
            int other = pick(rng);
            if (other != a) num2.xor_row(a, other);
        }
        num2 = GF2Matrix::vstack(num2, num);  // same row space, redundant rows
        if (subquotient(num2, den2).dim() != sq.dim()) return false;
        if (sq.dim() != rank(num) - rank(den)) return false;
    }

    // orientation cycles are annihilated by d and its adjoint and span the
    // filtered homology
    std::vector<std::string> harmonic_mismatch;
    for (const auto& e : corpus::entries()) {
        LinkDiagram d = LinkDiagram::parse(e.pd);
        FilteredComplex fc = build_filtered(build_khovanov(d));
        auto h = filtered_homology_groups(fc);
        std::map<int, std::vector<GF2Vector>> classes;
        for (uint32_t E = 0; E < (uint32_t(1) << d.num_components()); ++E) {
            LeeGenerator g = lee_generator(d, E);
            if (!is_bicycle(fc, g)) return false;
            classes[g.degree].push_back(h.at(g.degree).coords(lee_vector(fc, g)));
        }
        for (const auto& [i, sq] : h) {
            if (sq.dim() == 0) continue;
            GF2Matrix rows(int(classes[i].size()), sq.dim());
            for (size_t k = 0; k < classes[i].size(); ++k)
                rows.set_row(int(k), classes[i][k]);
            if (rank(rows) != sq.dim()) return false;
        }
        // the harmonic identification: record where it deviates
        std::map<int, int> harm = harmonic_dims(fc);
        std::map<int, int> filt = filtered_homology_dims(fc);
        for (const auto& [i, dm] : filt)
            if (harm[i] < dm) return false;  // Lee cycles live there, impossible
        if (harm != filt) harmonic_mismatch.push_back(e.name);
    }
    // the identification holds on these diagrams and provably contains the
    // homology everywhere; the strict failures are a recorded finding
    std::vector<std::string> expected_exact = {"unknot", "unlink2", "trefoil",
                                               "trefoil_mirror", "unknot_kinked"};
    for (const auto& name : expected_exact)
        if (std::find(harmonic_mismatch.begin(), harmonic_mismatch.end(),
                      name) != harmonic_mismatch.end())
            return false;
    if (!harmonic_mismatch.empty()) {
        std::ostringstream os;
        os << "harmonic space strictly exceeds homology on "
           << harmonic_mismatch.size()
           << " diagrams; Lee cycles verified directly instead -- see README";
        note = os.str();
    }
    return true;
}

}  // namespace

int main() {
    report(1, "trefoil Kh dimension table", c1_trefoil_kh());
    report(2, "trefoil induced-beta ranks", c2_trefoil_beta());
    report(3, "trefoil secondary polynomial q^-1 + q^-3", c3_trefoil_secondary());
    report(4, "trefoil graded Bar-Natan table and stable column", c4_trefoil_bn());
    report(5, "trefoil column spectral sequences (E1, E2 = Einf, abutment)",
           c5_trefoil_ss());
    report(6, "filtered homology equals the linking-number formula",
           c6_linking_numbers());
    report(7, "stable column / u-map isomorphisms on the whole corpus",
           c7_stable_iso());
    report(8, "filtered spectral sequence E1/E2 identification on the corpus",
           c8_filtered_ss());
    report(9, "reduced theory: doubling relation and basepoint independence",
           c9_reduced());
    report(10, "thin factorization for trefoil and figure-eight", c10_thin());
    report(11, "invariance of all tables on curated equivalent pairs",
           c11_invariance());
    std::string note;
    bool ok12 = c12_properties(note);
    report(12, "algebraic property suites and orientation cycles", ok12, note);
    return failures == 0 ? 0 : 1;
}
