#pragma once

// Bundled test diagrams. PD codes for the knots are taken from the standard
// knot-table presentations; the derived entries (mirrors, Reidemeister-moved
// variants) were produced by hand from those and verified by the test suite.

#include <stdexcept>
#include <string>
#include <vector>

namespace khb::corpus {

struct Entry {
    std::string name;
    std::string pd;
    std::string provenance;
};

inline const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {"unknot", "Unknot[1]", "zero-crossing token"},
        {"unlink2", "Unlink[2]", "zero-crossing token"},
        {"trefoil", "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]",
         "3_1 from the knot tables; all crossings negative"},
        {"trefoil_mirror", "PD[X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)]",
         "mirror of trefoil; all crossings positive"},
        {"figure_eight", "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]",
         "4_1 from the knot tables"},
        {"figure_eight_mirror", "PD[X(1,4,2,5),X(5,8,6,1),X(3,7,4,6),X(7,3,8,2)]",
         "mirror of figure_eight (4_1 is amphichiral)"},
        {"hopf_neg", "PD[X(1,4,2,3),X(3,2,4,1)]",
         "Hopf link with linking number -1"},
        {"hopf_pos", "PD[X(4,2,3,1),X(2,4,1,3)]",
         "Hopf link with linking number +1 (mirror of hopf_neg)"},
        {"trefoil_kinked", "PD[X(1,4,2,5),X(3,8,4,1),X(5,2,6,3),X(6,7,7,8)]",
         "trefoil with a negative R1 kink added on arc 6"},
        {"unknot_kinked", "PD[X(1,2,2,1)]", "unknot with one negative kink"},
        {"unknot_r2", "PD[X(1,4,2,1),X(2,4,3,3)]",
         "unknot after one R2 poke"},
    };
    return e;
}

inline std::string pd(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e.pd;
    throw std::runtime_error("corpus: no entry named " + name);
}

// Curated pairs of distinct diagrams of the same link.
inline const std::vector<std::pair<std::string, std::string>>& equivalent_pairs() {
    static const std::vector<std::pair<std::string, std::string>> p = {
        {"trefoil", "trefoil_kinked"},
        {"figure_eight", "figure_eight_mirror"},
        {"unknot", "unknot_kinked"},
        {"unknot", "unknot_r2"},
        {"unknot_kinked", "unknot_r2"},
    };
    return p;
}

// Knots in the corpus (single component), for reduced-theory checks.
inline const std::vector<std::string>& knots() {
    static const std::vector<std::string> k = {
        "unknot", "trefoil", "trefoil_mirror", "figure_eight",
        "figure_eight_mirror", "trefoil_kinked", "unknot_kinked", "unknot_r2",
    };
    return k;
}

}  // namespace khb::corpus
