#include <catch2/catch_amalgamated.hpp>

#include "khb/corpus.hpp"
#include "khb/cube.hpp"
#include "khb/homology.hpp"

using namespace khb;

namespace {

LinkDiagram get(const std::string& name) {
    return LinkDiagram::parse(corpus::pd(name));
}

Homology kh(const std::string& name) {
    return khovanov_homology(build_khovanov(get(name)));
}

// independent oracle: plain int-matrix Gaussian elimination, no bit packing
int naive_rank(const GF2Matrix* m) {
    if (!m) return 0;
    std::vector<std::vector<int>> a(m->rows(), std::vector<int>(m->cols(), 0));
    for (int r = 0; r < m->rows(); ++r)
        for (int c = 0; c < m->cols(); ++c) a[r][c] = m->get(r, c) ? 1 : 0;
    int rank = 0;
    for (int col = 0; col < m->cols(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m->rows(); ++r)
            if (a[r][col]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m->rows(); ++r)
            if (r != rank && a[r][col])
                for (int c = 0; c < m->cols(); ++c) a[r][c] = (a[r][c] + a[rank][c]) % 2;
        ++rank;
    }
    return rank;
}

DimTable naive_homology(const BigradedComplex& c) {
    DimTable t;
    for (const auto& [ij, gens] : c.groups) {
        auto [i, j] = ij;
        int d = int(gens.size()) - naive_rank(c.d_block(i, j)) -
                naive_rank(c.d_block(i - 1, j));
        t.set(i, j, d);
    }
    return t;
}

DimTable flipped(const DimTable& t) {
    DimTable f;
    for (const auto& [ij, d] : t.dims) f.set(-ij.first, -ij.second, d);
    return f;
}

}  // namespace

TEST_CASE("trefoil Khovanov homology dimensions") {
    DimTable t = kh("trefoil").table();
    DimTable want;
    for (auto [i, j] : {std::pair{0, -1}, {0, -3}, {-2, -5}, {-2, -7}, {-3, -7},
                        {-3, -9}})
        want.set(i, j, 1);
    CHECK(t == want);
}

TEST_CASE("unknot and unlink homology") {
    DimTable u = kh("unknot").table();
    DimTable want;
    want.set(0, 1, 1);
    want.set(0, -1, 1);
    CHECK(u == want);

    CHECK(kh("unlink2").table().total() == 4);
}

TEST_CASE("homology agrees with naive unpacked elimination") {
    for (const auto& e : corpus::entries()) {
        INFO(e.name);
        BigradedComplex c = build_khovanov(LinkDiagram::parse(e.pd));
        CHECK(khovanov_homology(c).table() == naive_homology(c));
    }
    for (const auto& name : corpus::knots()) {
        INFO(name << " (reduced)");
        LinkDiagram d = get(name);
        BigradedComplex c = build_reduced(d, d.num_crossings() == 0 ? 0 : 1);
        CHECK(khovanov_homology(c).table() == naive_homology(c));
    }
}

TEST_CASE("beta_star isomorphisms on the trefoil") {
    BigradedComplex c = build_khovanov(get("trefoil"));
    Homology h = khovanov_homology(c);
    BetaStar b = beta_star(c, h);

    REQUIRE(b.count({-3, -9}) == 1);
    CHECK(rank(b.at({-3, -9})) == 1);  // Kh^{-3,-9} -> Kh^{-2,-7} iso
    REQUIRE(b.count({-3, -7}) == 1);
    CHECK(rank(b.at({-3, -7})) == 1);  // Kh^{-3,-7} -> Kh^{-2,-5} iso

    // unknot: all beta_* vanish (no target groups two q-steps up)
    BigradedComplex cu = build_khovanov(get("unknot"));
    Homology hu = khovanov_homology(cu);
    CHECK(beta_star(cu, hu).empty());
}

TEST_CASE("secondary groups and polynomial of the trefoil") {
    BigradedComplex c = build_khovanov(get("trefoil"));
    Homology h = khovanov_homology(c);
    DimTable kk = secondary_groups(h, beta_star(c, h));

    DimTable want;
    want.set(0, -1, 1);
    want.set(0, -3, 1);
    CHECK(kk == want);
    CHECK(poincare_polynomial(kk).to_string() == "q^-1 + q^-3");
}

TEST_CASE("secondary groups of unknot and figure-eight") {
    BigradedComplex cu = build_khovanov(get("unknot"));
    Homology hu = khovanov_homology(cu);
    DimTable ku = secondary_groups(hu, beta_star(cu, hu));
    DimTable want;
    want.set(0, 1, 1);
    want.set(0, -1, 1);
    CHECK(ku == want);

    BigradedComplex cf = build_khovanov(get("figure_eight"));
    Homology hf = khovanov_homology(cf);
    DimTable kf = secondary_groups(hf, beta_star(cf, hf));
    CHECK(kf.total() == 2);
    for (const auto& [ij, d] : kf.dims) CHECK(ij.first == 0);
}

TEST_CASE("Kh polynomial of the trefoil") {
    LaurentPoly2 p = poincare_polynomial(kh("trefoil").table());
    LaurentPoly2 want;
    want.add(0, -1, 1);
    want.add(0, -3, 1);
    want.add(-2, -5, 1);
    want.add(-2, -7, 1);
    want.add(-3, -7, 1);
    want.add(-3, -9, 1);
    CHECK(p == want);
}

TEST_CASE("thin decomposition") {
    LaurentPoly2 tre = poincare_polynomial(kh("trefoil").table());
    CHECK(infer_s(tre) == -2);
    LaurentPoly2 khp = thin_decompose(tre, -2);
    CHECK(khp == LaurentPoly2::monomial(-3, -6));  // (tq^2)^{-3}
    CHECK(thin_reconstruct(khp, -2) == tre);

    CHECK_THROWS_WITH(thin_decompose(tre, 0),
                      Catch::Matchers::ContainsSubstring("not thin"));

    LaurentPoly2 unk = poincare_polynomial(kh("unknot").table());
    CHECK(thin_decompose(unk, 0).is_zero());

    LaurentPoly2 f8 = poincare_polynomial(kh("figure_eight").table());
    int s = infer_s(f8);
    LaurentPoly2 f8p = thin_decompose(f8, s);
    for (const auto& [ij, c] : f8p.coeffs) {
        CHECK(ij.second == 2 * ij.first);  // polynomial in tq^2
        CHECK(c > 0);
    }
    CHECK(thin_reconstruct(f8p, s) == f8);
}

TEST_CASE("non-factorizable input is diagnosed with a residual") {
    // thin support but wrong multiplicities: q^-1 + q alone works, adding a
    // lone term on one diagonal breaks the 1+q^2 factor
    LaurentPoly2 p;
    p.add(0, 1, 1);
    p.add(0, -1, 1);
    p.add(1, 1, 1);  // diagonal j-2i = -1: thin for s=0, but unbalanced
    CHECK_THROWS_WITH(thin_decompose(p, 0),
                      Catch::Matchers::ContainsSubstring("not factorizable"));
}

TEST_CASE("mirror duality of dimension tables") {
    for (const auto& name : {"trefoil", "figure_eight", "hopf_neg", "unknot_r2"}) {
        INFO(name);
        LinkDiagram d = get(name);
        DimTable t = khovanov_homology(build_khovanov(d)).table();
        DimTable m = khovanov_homology(build_khovanov(d.mirror())).table();
        CHECK(m == flipped(t));
    }
}

TEST_CASE("Kh, KK and polynomials are diagram invariants") {
    for (const auto& [a, b] : corpus::equivalent_pairs()) {
        INFO(a << " vs " << b);
        BigradedComplex ca = build_khovanov(get(a));
        BigradedComplex cb = build_khovanov(get(b));
        Homology ha = khovanov_homology(ca);
        Homology hb = khovanov_homology(cb);
        CHECK(ha.table() == hb.table());
        DimTable kka = secondary_groups(ha, beta_star(ca, ha));
        DimTable kkb = secondary_groups(hb, beta_star(cb, hb));
        CHECK(kka == kkb);
        CHECK(poincare_polynomial(kka).to_string() ==
              poincare_polynomial(kkb).to_string());
    }
}

TEST_CASE("exactness report flags only i = 0 for small knots") {
    for (const auto& name : {"trefoil", "unknot", "figure_eight"}) {
        INFO(name);
        BigradedComplex c = build_khovanov(get(name));
        Homology h = khovanov_homology(c);
        DimTable kk = secondary_groups(h, beta_star(c, h));
        // knots have 2-dimensional filtered homology in degree 0 (Lee-type)
        ExactnessReport r = exactness_report(kk, {{0, 2}});
        CHECK(r.consistent);
        for (const auto& e : r.entries) CHECK(e.i == 0);
    }
}

TEST_CASE("polynomial printing") {
    CHECK(LaurentPoly2{}.to_string() == "0");
    CHECK(LaurentPoly2::monomial(0, 0).to_string() == "1");
    CHECK(LaurentPoly2::monomial(1, 2, 3).to_string() == "3 t q^2");
    LaurentPoly2 p;
    p.add(-2, -5, 1);
    p.add(0, -1, 2);
    p.add(0, 0, -1);
    CHECK(p.to_string() == "-1 + 2 q^-1 + t^-2 q^-5");
}
