#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "khb/corpus.hpp"
#include "khb/cube.hpp"

using namespace khb;

namespace {

LinkDiagram get(const std::string& name) {
    return LinkDiagram::parse(corpus::pd(name));
}

int position_of(const BigradedComplex& c, Bigrading ij, Gen g) {
    const auto& gens = c.groups.at(ij);
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k] == g) return int(k);
    FAIL("generator not found in group");
    return -1;
}

// graded Euler characteristic: j -> sum of (-1)^i dim
std::map<int, int> euler(const BigradedComplex& c) {
    std::map<int, int> e;
    for (const auto& [ij, gens] : c.groups) {
        int v = (ij.first & 1) ? -int(gens.size()) : int(gens.size());
        e[ij.second] += v;
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
}

}  // namespace

TEST_CASE("unknot and unlink chain groups") {
    BigradedComplex u = build_khovanov(LinkDiagram::parse("Unknot[1]"));
    CHECK(u.dim(0, 1) == 1);
    CHECK(u.dim(0, -1) == 1);
    CHECK(u.groups.size() == 2);

    BigradedComplex l = build_khovanov(LinkDiagram::parse("Unlink[2]"));
    CHECK(l.dim(0, 2) == 1);
    CHECK(l.dim(0, 0) == 2);
    CHECK(l.dim(0, -2) == 1);

    BigradedComplex r = build_reduced(LinkDiagram::parse("Unknot[1]"), 0);
    CHECK(r.dim(0, 0) == 1);
    CHECK(r.groups.size() == 1);
}

TEST_CASE("complex identities hold across the corpus") {
    for (const auto& e : corpus::entries()) {
        INFO(e.name);
        LinkDiagram d = LinkDiagram::parse(e.pd);
        CHECK_NOTHROW(check_complex(build_khovanov(d)));
    }
    for (const auto& name : corpus::knots()) {
        INFO(name << " (reduced)");
        LinkDiagram d = get(name);
        int bp = d.num_crossings() == 0 ? 0 : 1;
        CHECK_NOTHROW(check_complex(build_reduced(d, bp)));
    }
}

TEST_CASE("reduced subcomplex is closed for every basepoint") {
    LinkDiagram d = get("trefoil");
    for (int bp = 1; bp <= d.num_arcs(); ++bp)
        CHECK_NOTHROW(build_reduced(d, bp));
}

TEST_CASE("reduced complex rejects links and bad basepoints") {
    CHECK_THROWS_WITH(build_reduced(get("hopf_pos"), 1),
                      Catch::Matchers::ContainsSubstring("knot"));
    CHECK_THROWS_WITH(build_reduced(get("trefoil"), 99),
                      Catch::Matchers::ContainsSubstring("basepoint"));
}

TEST_CASE("grading support and parity") {
    for (const auto& e : corpus::entries()) {
        LinkDiagram d = LinkDiagram::parse(e.pd);
        BigradedComplex c = build_khovanov(d);
        for (const auto& [ij, gens] : c.groups) {
            CHECK(ij.first >= -d.n_minus());
            CHECK(ij.first <= d.n_plus());
            CHECK(((ij.second - d.gamma()) & 1) == 0);
            CHECK(!gens.empty());
        }
    }
}

TEST_CASE("graded Euler characteristics match known values") {
    CHECK(euler(build_khovanov(get("unknot"))) == std::map<int, int>{{-1, 1}, {1, 1}});
    CHECK(euler(build_khovanov(get("trefoil"))) ==
          std::map<int, int>{{-9, -1}, {-5, 1}, {-3, 1}, {-1, 1}});
    CHECK(euler(build_khovanov(get("hopf_neg"))) ==
          std::map<int, int>{{-6, 1}, {-4, 1}, {-2, 1}, {0, 1}});
    CHECK(euler(build_khovanov(get("hopf_pos"))) ==
          std::map<int, int>{{0, 1}, {2, 1}, {4, 1}, {6, 1}});
    CHECK(euler(build_khovanov(get("figure_eight"))) ==
          std::map<int, int>{{-5, 1}, {5, 1}});
}

TEST_CASE("graded Euler characteristic is a diagram invariant") {
    for (const auto& [a, b] : corpus::equivalent_pairs()) {
        INFO(a << " vs " << b);
        CHECK(euler(build_khovanov(get(a))) == euler(build_khovanov(get(b))));
    }
}

TEST_CASE("beta on trefoil chains: top label state") {
    LinkDiagram d = get("trefoil");
    BigradedComplex c = build_khovanov(d);

    // x on all three circles of the all-zero resolution
    Bigrading src{-3, -9}, dst{-2, -7};
    REQUIRE(c.dim(src.first, src.second) == 1);
    CHECK(c.groups.at(src)[0] == Gen{0u, 0b111u});

    const GF2Matrix* b = c.beta_block(src.first, src.second);
    REQUIRE(b != nullptr);
    GF2Vector e0(1);
    e0.set(0, true);
    GF2Vector img = b->apply(e0);

    // expected: both circles labelled x at each weight-one vertex
    GF2Vector want(c.dim(dst.first, dst.second));
    for (uint32_t cr = 0; cr < 3; ++cr)
        want.set(position_of(c, dst, Gen{1u << cr, 0b11u}), true);
    CHECK(img == want);
}

TEST_CASE("beta on trefoil chains: symmetric two-x state") {
    LinkDiagram d = get("trefoil");
    BigradedComplex c = build_khovanov(d);

    Bigrading src{-3, -7}, dst{-2, -5};
    REQUIRE(c.dim(src.first, src.second) == 3);

    GF2Vector v(3);
    for (uint32_t labels : {0b011u, 0b101u, 0b110u})
        v.set(position_of(c, src, Gen{0u, labels}), true);

    const GF2Matrix* b = c.beta_block(src.first, src.second);
    REQUIRE(b != nullptr);
    GF2Vector img = b->apply(v);

    // each crossing merges a pair of circles; only the state with x on
    // exactly that pair survives, landing x on the merged circle
    GF2Vector want(c.dim(dst.first, dst.second));
    for (int cr = 0; cr < 3; ++cr) {
        CubeEdge e = d.cube_edge(0u, cr);
        REQUIRE(e.is_merge);
        want.set(position_of(c, dst, Gen{e.head, 1u << e.head_a}), true);
    }
    CHECK(img == want);
}

TEST_CASE("total dimension matches the label count") {
    for (const auto& name : {"trefoil", "figure_eight", "unknot_r2"}) {
        LinkDiagram d = get(name);
        BigradedComplex c = build_khovanov(d);
        size_t total = 0;
        for (const auto& [ij, gens] : c.groups) total += gens.size();
        size_t want = 0;
        for (uint32_t v = 0; v < (1u << d.num_crossings()); ++v)
            want += size_t(1) << d.resolve(v).num_circles();
        CHECK(total == want);
    }
}
