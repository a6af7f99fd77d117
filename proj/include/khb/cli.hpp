#pragma once

// Command-line frontend. Subcommands: kh, beta, secondary, bn, filtered,
// reduced, ss, thin, check. Input is a PD code via --pd or --file; output is
// --format table (default), json, or latex. Exit codes: 0 on success, 1 on
// validation errors, 2 when an internal consistency check fails.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "khb/barnatan.hpp"
#include "khb/cube.hpp"
#include "khb/diagram.hpp"
#include "khb/homology.hpp"
#include "khb/spectral.hpp"

namespace khb::cli {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string key(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline ordered_json dims_json(const DimTable& t) {
    ordered_json out = ordered_json::object();
    for (const auto& [ij, d] : t.dims) out[key(ij.first, ij.second)] = d;
    return out;
}

inline ordered_json dims_json(const std::map<int, int>& t) {
    ordered_json out = ordered_json::object();
    for (const auto& [i, d] : t) out[std::to_string(i)] = d;
    return out;
}

inline ordered_json dims_json(const std::map<std::pair<int, int>, int>& t) {
    ordered_json out = ordered_json::object();
    for (const auto& [kl, d] : t) out[key(kl.first, kl.second)] = d;
    return out;
}

// Grid with j rows descending and i columns ascending, mirroring the usual
// table orientation. Optionally appends a stable row labelled "j <= js".
inline void grid(std::ostream& os, const DimTable& t, bool latex,
                 const std::map<int, int>* stable = nullptr, int js = 0) {
    std::set<int> is, js_rows;
    for (const auto& [ij, d] : t.dims) {
        is.insert(ij.first);
        js_rows.insert(ij.second);
    }
    if (stable)
        for (const auto& [i, d] : *stable) is.insert(i);
    if (is.empty()) {
        os << (latex ? "% empty table\n" : "(empty table)\n");
        return;
    }
    auto cell = [&](int i, int j) { return t.at(i, j); };
    std::string sep = latex ? " & " : "  ";
    if (latex) {
        os << "\\begin{tabular}{r|" << std::string(is.size(), 'c') << "}\n";
        os << "$j \\backslash i$";
    } else {
        os << "  j\\i";
    }
    for (int i : is) os << sep << i;
    os << (latex ? " \\\\ \\hline\n" : "\n");
    auto row = [&](const std::string& label, auto value) {
        os << (latex ? "$" + label + "$" : "  " + label);
        for (int i : is) {
            int d = value(i);
            os << sep << (d ? std::to_string(d) : (latex ? "" : "."));
        }
        os << (latex ? " \\\\\n" : "\n");
    };
    for (auto it = js_rows.rbegin(); it != js_rows.rend(); ++it) {
        int j = *it;
        row(std::to_string(j), [&](int i) { return cell(i, j); });
    }
    if (stable)
        row((latex ? "j \\le " : "j<=") + std::to_string(js), [&](int i) {
            auto f = stable->find(i);
            return f == stable->end() ? 0 : f->second;
        });
    if (latex) os << "\\end{tabular}\n";
}

}  // namespace detail

struct Opt {
    std::string pd, file, pd2, file2;
    std::string format = "table", flavor = "filtered";
    bool reduced = false;
    int basepoint = 1;
    int jmin = 0, jmax = 0, j = 0, rmax = -1, s = 0;
    bool has_jmin = false, has_jmax = false, has_j = false, has_s = false;
};

namespace detail {

inline LinkDiagram load(const std::string& pd, const std::string& file) {
    if (pd.empty() == file.empty())
        throw parse_error("provide exactly one of --pd or --file");
    if (!pd.empty()) return LinkDiagram::parse(pd);
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return LinkDiagram::parse(ss.str());
}

inline BigradedComplex complex_of(const LinkDiagram& d, const Opt& o) {
    return o.reduced ? build_reduced(d, o.basepoint) : build_khovanov(d);
}

inline void emit(std::ostream& out, const Opt& o, const ordered_json& j,
                 const std::function<void(std::ostream&)>& text) {
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        text(out);
}

inline int cmd_kh(const LinkDiagram& d, const Opt& o, std::ostream& out) {
    DimTable t = khovanov_homology(complex_of(d, o)).table();
    std::string poly = poincare_polynomial(t).to_string();
    ordered_json j = {{"theory", o.reduced ? "kh_reduced" : "kh"},
                      {"pd", d.normalized_pd()},
                      {"dims", dims_json(t)},
                      {"polynomial", poly}};
    emit(out, o, j, [&](std::ostream& os) {
        os << (o.reduced ? "reduced " : "") << "Khovanov homology of "
           << d.normalized_pd() << "\n";
        grid(os, t, o.format == "latex");
        os << "polynomial: " << poly << "\n";
    });
    return 0;
}

inline int cmd_beta(const LinkDiagram& d, const Opt& o, std::ostream& out) {
    BigradedComplex c = complex_of(d, o);
    Homology h = khovanov_homology(c);
    BetaStar bs = beta_star(c, h);
    DimTable ranks;
    for (const auto& [ij, m] : bs) ranks.set(ij.first, ij.second, rank(m));
    ordered_json j = {{"theory", "beta"},
                      {"pd", d.normalized_pd()},
                      {"ranks", dims_json(ranks)}};
    emit(out, o, j, [&](std::ostream& os) {
        os << "ranks of the induced beta on Kh of " << d.normalized_pd() << "\n";
        if (ranks.dims.empty()) os << "  (no nonzero source groups)\n";
        for (const auto& [ij, r] : ranks.dims)
            os << "  " << key(ij.first, ij.second) << " -> "
               << key(ij.first + 1, ij.second + 2) << ": rank " << r << "\n";
    });
    return 0;
}

inline int cmd_secondary(const LinkDiagram& d, const Opt& o, std::ostream& out) {
    BigradedComplex c = complex_of(d, o);
    Homology h = khovanov_homology(c);
    DimTable kk = secondary_groups(h, beta_star(c, h));
    std::string poly = poincare_polynomial(kk).to_string();
    ordered_json j = {{"theory", o.reduced ? "secondary_reduced" : "secondary"},
                      {"pd", d.normalized_pd()},
                      {"dims", dims_json(kk)},
                      {"polynomial", poly}};
    emit(out, o, j, [&](std::ostream& os) {
        os << "secondary groups of " << d.normalized_pd() << "\n";
        grid(os, kk, o.format == "latex");
        os << "polynomial: " << poly << "\n";
    });
    return 0;
}

inline int cmd_bn(const LinkDiagram& d, const Opt& o, std::ostream& out) {
    BigradedComplex c = complex_of(d, o);
    int lo = o.has_jmin ? o.jmin : c.j_min - 4;
    int hi = o.has_jmax ? o.jmax : c.j_max;
    BNTable t = bn_homology(c, lo, hi);
    ordered_json j = {{"theory", o.reduced ? "bn_reduced" : "bn"},
                      {"pd", d.normalized_pd()},
                      {"jmin", lo},
                      {"jmax", hi},
                      {"dims", dims_json(t.dims)},
                      {"stable_threshold", t.stable_threshold},
                      {"stable_column", dims_json(t.stable_column)}};
    emit(out, o, j, [&](std::ostream& os) {
        os << "graded Bar-Natan homology of " << d.normalized_pd() << " for j in ["
           << lo << ", " << hi << "]\n";
        grid(os, t.dims, o.format == "latex", &t.stable_column,
             t.stable_threshold);
    });
    return 0;
}

inline int cmd_filtered(const LinkDiagram& d, const Opt& o, std::ostream& out,
                        std::ostream& err) {
    std::map<int, int> dims =
        filtered_homology_dims(build_filtered(complex_of(d, o)));
    bool compare = !o.reduced;
    std::map<int, int> expect =
        compare ? linking_number_dims(d) : std::map<int, int>{};
    bool match = !compare || dims == expect;
    ordered_json j = {{"theory", o.reduced ? "filtered_reduced" : "filtered"},
                      {"pd", d.normalized_pd()},
                      {"dims", dims_json(dims)}};
    if (compare) {
        j["linking_number_dims"] = dims_json(expect);
        j["match"] = match;
    }
    emit(out, o, j, [&](std::ostream& os) {
        os << (o.reduced ? "reduced " : "") << "filtered homology of "
           << d.normalized_pd() << "\n";
        for (const auto& [i, dim] : dims) os << "  i=" << i << ": " << dim << "\n";
        if (compare)
            os << "linking-number prediction "
               << (match ? "matches" : "DOES NOT match") << "\n";
    });
    if (!match) {
        err << "filtered: dimension table disagrees with the linking-number "
               "formula\n";
        return 2;
    }
    return 0;
}

inline int cmd_reduced(const LinkDiagram& d, Opt o, std::ostream& out,
                       std::ostream& err) {
    o.reduced = true;
    int rc = cmd_kh(d, o, out);
    if (rc) return rc;
    return cmd_filtered(d, o, out, err);
}

inline int cmd_ss(const LinkDiagram& d, const Opt& o, std::ostream& out,
                  std::ostream& err) {
    BigradedComplex c = complex_of(d, o);
    FilteredComplex fc;
    if (o.flavor == "filtered") {
        fc = build_filtered(c);
    } else if (o.flavor == "graded") {
        if (!o.has_j) throw parse_error("--flavor graded requires --j");
        fc = build_barnatan_column(c, o.j);
    } else {
        throw parse_error("--flavor must be filtered or graded");
    }
    SpectralSequence ss = compute_pages(fc, o.rmax);
    SSCheck chk = o.flavor == "filtered" ? verify_filtered_pages(c, ss)
                                         : verify_column_pages(c, o.j, ss);
    bool full = o.rmax < 0;  // identifications need pages through E_2
    ordered_json pages = ordered_json::array();
    for (const SSPage& p : ss.pages) {
        ordered_json ranks = ordered_json::object();
        for (const auto& [kl, m] : p.d)
            if (rank(m)) ranks[key(kl.first, kl.second)] = rank(m);
        pages.push_back({{"r", p.r},
                         {"dims", dims_json(p.dims())},
                         {"d_ranks", ranks}});
    }
    ordered_json j = {{"theory", "ss"},
                      {"pd", d.normalized_pd()},
                      {"flavor", o.flavor},
                      {"pages", pages},
                      {"stable", ss.stable},
                      {"abutment", dims_json(abutment_dims(ss.infinity()))}};
    if (o.flavor == "graded") j["j"] = o.j;
    if (full) j["e1_e2_ok"] = chk.ok;
    emit(out, o, j, [&](std::ostream& os) {
        os << "spectral sequence (" << o.flavor << ") of " << d.normalized_pd();
        if (o.flavor == "graded") os << " at j = " << o.j;
        os << "\n";
        for (const SSPage& p : ss.pages) {
            os << "E_" << p.r << ":";
            for (const auto& [kl, dim] : p.dims())
                os << " " << key(kl.first, kl.second) << "=" << dim;
            for (const auto& [kl, m] : p.d)
                if (int r = rank(m))
                    os << " d" << key(kl.first, kl.second) << "#" << r;
            os << "\n";
        }
        os << "stable from E_" << ss.stable << "; abutment:";
        for (const auto& [i, dim] : abutment_dims(ss.infinity()))
            os << " " << i << "=" << dim;
        os << "\n";
    });
    if (full && !chk.ok) {
        err << "ss: first/second page identification failed\n";
        for (const auto& s : chk.issues) err << "  " << s << "\n";
        return 2;
    }
    return 0;
}

inline int cmd_thin(const LinkDiagram& d, const Opt& o, std::ostream& out,
                    std::ostream& err) {
    LaurentPoly2 p = poincare_polynomial(
        khovanov_homology(complex_of(d, o)).table());
    int s;
    try {
        s = o.has_s ? o.s : infer_s(p);
    } catch (const error& e) {
        err << "thin: " << e.what() << "\n";
        return 1;
    }
    LaurentPoly2 khp;
    try {
        khp = thin_decompose(p, s);
    } catch (const error& e) {
        err << "thin: " << e.what() << "\n";
        return 1;
    }
    bool round_trip = thin_reconstruct(khp, s) == p;
    ordered_json j = {{"theory", "thin"},
                      {"pd", d.normalized_pd()},
                      {"s", s},
                      {"kh", p.to_string()},
                      {"kh_prime", khp.to_string()},
                      {"reconstructs", round_trip}};
    emit(out, o, j, [&](std::ostream& os) {
        os << "thin decomposition of " << d.normalized_pd() << "\n";
        os << "  s = " << s << "\n";
        os << "  Kh  = " << p.to_string() << "\n";
        os << "  Kh' = " << khp.to_string() << "\n";
    });
    if (!round_trip) {
        err << "thin: reconstruction failed to round-trip\n";
        return 2;
    }
    return 0;
}

struct Summary {
    DimTable kh, kk;
    std::string kk_poly;
    std::map<int, int> filtered;
    DimTable bn;
    std::map<int, int> stable_column;
};

inline Summary summarize(const LinkDiagram& d, int j_lo, int j_hi) {
    Summary s;
    BigradedComplex c = build_khovanov(d);
    Homology h = khovanov_homology(c);
    s.kh = h.table();
    s.kk = secondary_groups(h, beta_star(c, h));
    s.kk_poly = poincare_polynomial(s.kk).to_string();
    s.filtered = filtered_homology_dims(build_filtered(c));
    BNTable bn = bn_homology(c, j_lo, j_hi);
    s.bn = bn.dims;
    s.stable_column = bn.stable_column;
    return s;
}

inline int cmd_check(const LinkDiagram& d, const LinkDiagram* d2, const Opt& o,
                     std::ostream& out, std::ostream& err) {
    std::vector<std::string> failures;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    BigradedComplex c = build_khovanov(d);
    check_complex(c);
    require(filtered_homology_dims(build_filtered(c)) == linking_number_dims(d),
            "filtered homology vs linking-number formula");
    StableIsoReport iso = stable_iso_check(d);
    require(iso.ok, "stable column / u-map isomorphisms");
    require(verify_filtered_pages(c).ok, "filtered E1/E2 identification");
    for (int j = c.j_min - 2; j <= c.j_max; j += 2)
        require(verify_column_pages(c, j).ok,
                "column E1/E2 identification at j = " + std::to_string(j));
    require(verify_stable_column_shift(c, stable_threshold(c)).ok,
            "stable column pages vs filtered pages");

    bool tables_equal = true;
    if (d2) {
        BigradedComplex c2 = build_khovanov(*d2);
        int lo = std::min(c.j_min, c2.j_min) - 2;
        int hi = std::max(c.j_max, c2.j_max);
        Summary a = summarize(d, lo, hi), b = summarize(*d2, lo, hi);
        tables_equal = a.kh == b.kh && a.kk == b.kk &&
                       a.filtered == b.filtered && a.bn == b.bn &&
                       a.stable_column == b.stable_column;
        check_complex(c2);
    }

    ordered_json j = {{"theory", "check"},
                      {"pd", d.normalized_pd()},
                      {"consistency_failures", failures},
                      {"ok", failures.empty() && tables_equal}};
    if (d2) {
        j["pd2"] = d2->normalized_pd();
        j["tables_equal"] = tables_equal;
    }
    emit(out, o, j, [&](std::ostream& os) {
        os << "consistency check for " << d.normalized_pd() << "\n";
        if (failures.empty()) os << "  all internal checks passed\n";
        for (const auto& f : failures) os << "  FAILED: " << f << "\n";
        if (d2)
            os << "  tables vs " << d2->normalized_pd() << ": "
               << (tables_equal ? "identical" : "DIFFERENT") << "\n";
    });
    if (!failures.empty()) {
        for (const auto& f : failures) err << "check: " << f << "\n";
        return 2;
    }
    if (!tables_equal) {
        err << "check: the two diagrams are distinguished by the invariants\n";
        return 1;
    }
    return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"characteristic-2 link homology calculator"};
    app.require_subcommand(1);
    Opt o;
    std::map<std::string, CLI::App*> subs;
    for (const char* name : {"kh", "beta", "secondary", "bn", "filtered",
                             "reduced", "ss", "thin", "check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--pd", o.pd, "PD code, e.g. PD[X(1,4,2,5),...]");
        sub->add_option("--file", o.file, "file containing a PD code");
        sub->add_option("--format", o.format, "table, json or latex")
            ->check(CLI::IsMember({"table", "json", "latex"}));
        subs[name] = sub;
    }
    for (const char* name : {"kh", "beta", "secondary", "bn", "filtered", "ss"}) {
        subs[name]->add_flag("--reduced", o.reduced, "reduced theory");
        subs[name]->add_option("--basepoint", o.basepoint,
                               "marked arc for the reduced theory");
    }
    subs["reduced"]->add_option("--basepoint", o.basepoint);
    auto* jmin = subs["bn"]->add_option("--jmin", o.jmin);
    auto* jmax = subs["bn"]->add_option("--jmax", o.jmax);
    subs["ss"]->add_option("--flavor", o.flavor, "filtered or graded")
        ->check(CLI::IsMember({"filtered", "graded"}));
    auto* jopt = subs["ss"]->add_option("--j", o.j, "column for --flavor graded");
    subs["ss"]->add_option("--rmax", o.rmax, "last page to compute");
    auto* sopt = subs["thin"]->add_option("--s", o.s, "thin diagonal parameter");
    subs["check"]->add_option("--pd2", o.pd2, "second PD code to compare");
    subs["check"]->add_option("--file2", o.file2, "file with a second PD code");

    std::vector<const char*> argv{"khb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::stringstream dump;
        int code = app.exit(e, dump, dump);
        (code == 0 ? out : err) << dump.str();
        return code == 0 ? 0 : 1;
    }
    o.has_jmin = jmin->count() > 0;
    o.has_jmax = jmax->count() > 0;
    o.has_j = jopt->count() > 0;
    o.has_s = sopt->count() > 0;

    try {
        LinkDiagram d = detail::load(o.pd, o.file);
        if (subs["kh"]->parsed()) return detail::cmd_kh(d, o, out);
        if (subs["beta"]->parsed()) return detail::cmd_beta(d, o, out);
        if (subs["secondary"]->parsed()) return detail::cmd_secondary(d, o, out);
        if (subs["bn"]->parsed()) return detail::cmd_bn(d, o, out);
        if (subs["filtered"]->parsed()) return detail::cmd_filtered(d, o, out, err);
        if (subs["reduced"]->parsed()) return detail::cmd_reduced(d, o, out, err);
        if (subs["ss"]->parsed()) return detail::cmd_ss(d, o, out, err);
        if (subs["thin"]->parsed()) return detail::cmd_thin(d, o, out, err);
        if (subs["check"]->parsed()) {
            if (!o.pd2.empty() || !o.file2.empty()) {
                LinkDiagram d2 = detail::load(o.pd2, o.file2);
                return detail::cmd_check(d, &d2, o, out, err);
            }
            return detail::cmd_check(d, nullptr, o, out, err);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

inline int run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
               std::cerr);
}

}  // namespace khb::cli
