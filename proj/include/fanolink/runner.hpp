#ifndef FANOLINK_RUNNER_HPP
#define FANOLINK_RUNNER_HPP

#include <fanolink/cone.hpp>
#include <fanolink/cone_svg.hpp>
#include <fanolink/diagram.hpp>
#include <fanolink/lattice.hpp>
#include <fanolink/report.hpp>
#include <fanolink/suites.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fanolink {

// ---------------------------------------------------------------------------
// Lattice / cone / flop suites, addressable alongside the polynomial ones.
// ---------------------------------------------------------------------------

inline VerificationReport class_table_suite(int genus) {
    VerificationReport rep;
    const std::string G = std::to_string(genus);
    // The full tables, frozen.
    std::map<std::string, std::array<long, 3>> expected;
    expected["O_X"] = {1, 0, 0};
    expected["F1"] = {0, 1, 0};
    expected["F2"] = {0, 0, 1};
    expected["O_Xbar1"] = {1, -1, 0};
    expected["O_Xbar2"] = {1, 0, -1};
    expected["O_Xbar0"] = {1, -1, -1};
    const std::string xn = xx_side_name(genus), yn = yy_side_name(genus);
    expected["O_" + xn + "1"] = {1, -2, 0};
    expected["O_" + xn + "2"] = {1, 0, -2};
    expected["O_" + yn + "1"] = {1, -2, -1};
    expected["O_" + yn + "2"] = {1, -1, -2};
    if (genus == 12) {
        expected["S1"] = {1, -3, 0};
        expected["S2"] = {1, 0, -3};
        expected["E"] = {1, -2, -2};
    } else if (genus == 10) {
        expected["S1"] = {2, -5, 0};
        expected["S2"] = {2, 0, -5};
        expected["E"] = {3, -5, -5};
    } else {
        expected["S1"] = {3, -7, 0};
        expected["S2"] = {3, 0, -7};
    }
    auto table = class_table(genus);
    bool size_ok = table.size() == expected.size();
    rep.check("pic.table.g" + G + ".complete", "the class basis and all listed classes",
              size_ok, std::to_string(table.size()), std::to_string(expected.size()));
    for (const auto& [key, coords] : expected) {
        auto it = table.find(key);
        bool ok = it != table.end() && it->second.a == coords;
        rep.check("pic.table.g" + G + "." + key,
                  key + " ~ [" + std::to_string(coords[0]) + "," + std::to_string(coords[1]) +
                      "," + std::to_string(coords[2]) + "]",
                  ok, it != table.end() ? it->second.to_string() : "missing");
    }
    return rep;
}

inline VerificationReport volume_suite(int genus) {
    VerificationReport rep;
    const std::string G = std::to_string(genus);
    CubicForm x0 = x0_cubic_form(genus);
    Rational want(2 * genus - 10);
    rep.check("volume.g" + G + ".x0", "(-K_{X_0})^3 = 2g - 10", x0.k_cube() == want,
              rat_to_string(x0.k_cube()), rat_to_string(want));
    CubicForm wplus = wplus_cubic_form(genus);
    rep.check("volume.g" + G + ".w1plus", "flop invariance of the anticanonical volume",
              wplus.k_cube() == want, rat_to_string(wplus.k_cube()), rat_to_string(want));
    CubicForm xp = x0plus_cubic_form(genus);
    rep.check("volume.g" + G + ".x0plus", "(-K_{X_0^+})^3 agrees across the link",
              xp.k_cube() == want, rat_to_string(xp.k_cube()), rat_to_string(want));
    if (genus == 12) {
        // the blowup of the quadric along a line has volume 46
        CubicForm q({"H"}, {Rational(3)});
        q.set(0, 0, 0, Rational(2));
        CubicForm y = blowup_cubic_form({q, {CurveData{{Rational(1)}, 0, "F"}}});
        rep.check("volume.g12.quadric_line", "(-K_Y)^3 = 46", y.k_cube() == 46,
                  rat_to_string(y.k_cube()), "46");
    }
    return rep;
}

inline VerificationReport merge_cube_suite() {
    VerificationReport rep;
    // genus 9: the class [1,-1,-2] cubes to -5 on one side of the last flop
    // and to 0 on the other, so the flop is not an isomorphism.
    DivisorClass cls{9, {1, -1, -2}};
    Rational lhs = cube_in_basis(wplus_cubic_form(9), wplus_chain_basis(9), cls);
    rep.check("merge.cube.wplus", "(O_{W_1^+}([1,-1,-2]))^3 = -5", lhs == -5,
              rat_to_string(lhs), "-5");
    Rational rhs = cube_in_basis(x0plus_cubic_form(9), x0plus_basis(9), cls);
    rep.check("merge.cube.x0plus", "(O_{X_0^+}([1,-1,-2]))^3 = 0", rhs == 0,
              rat_to_string(rhs), "0");
    return rep;
}

inline VerificationReport cone_suite(int genus) {
    VerificationReport rep;
    const std::string G = std::to_string(genus);
    auto vec = [](const DivisorClass& d) { return Vec3{d.a[0], d.a[1], d.a[2]}; };

    // ray lists of the nef cones
    Cone nx0 = nef_cone(genus, "X0");
    std::vector<Vec3> nx0_expected = {vec(table_class(genus, "O_X")), vec(xbar_class(genus, 1)),
                                      vec(anticanonical_class(genus)), vec(xbar_class(genus, 2))};
    std::sort(nx0_expected.begin(), nx0_expected.end());
    rep.check("cone.nef.g" + G + ".X0", "Nef(X_0) is spanned by exactly 4 rays",
              nx0.rays() == nx0_expected, std::to_string(nx0.rays().size()), "4");
    for (const auto& node : sqm_nodes()) {
        if (node == "X0") continue;
        Cone c = nef_cone(genus, node);
        rep.check("cone.nef.g" + G + "." + node, "the nef cone is spanned by exactly 3 rays",
                  c.rays().size() == 3, std::to_string(c.rays().size()), "3");
    }

    // shared facets
    auto facet_is = [&](const std::string& a, const std::string& b, const DivisorClass& r1,
                        const DivisorClass& r2) {
        auto f = common_facet(nef_cone(genus, a), nef_cone(genus, b));
        if (!f) return false;
        std::vector<Vec3> want{vec(r1), vec(r2)};
        std::sort(want.begin(), want.end());
        return f->rays() == want;
    };
    rep.check("cone.facet.g" + G + ".X0.W1", "Nef(Xbar'_1) = Nef(X_0) cap Nef(W_1)",
              facet_is("X0", "W1", xbar_class(genus, 1), anticanonical_class(genus)));
    rep.check("cone.facet.g" + G + ".X0.W2", "Nef(Xbar'_2) = Nef(X_0) cap Nef(W_2)",
              facet_is("X0", "W2", anticanonical_class(genus), xbar_class(genus, 2)));
    rep.check("cone.facet.g" + G + ".W1.W1+", "Nef(XX'_1) = Nef(W_1) cap Nef(W_1^+)",
              facet_is("W1", "W1+", anticanonical_class(genus), xx_class(genus, 1)));
    rep.check("cone.facet.g" + G + ".W2.W2+", "Nef(XX'_2) = Nef(W_2) cap Nef(W_2^+)",
              facet_is("W2", "W2+", anticanonical_class(genus), xx_class(genus, 2)));
    rep.check("cone.facet.g" + G + ".W1+.X0+", "Nef(YY''_1) = Nef(W_1^+) cap Nef(X_0^+)",
              facet_is("W1+", "X0+", yy_class(genus, 1), anticanonical_class(genus)));
    rep.check("cone.facet.g" + G + ".W2+.X0+", "Nef(YY''_2) = Nef(W_2^+) cap Nef(X_0^+)",
              facet_is("W2+", "X0+", yy_class(genus, 2), anticanonical_class(genus)));
    rep.check("cone.facet.g" + G + ".nonadjacent",
              "Nef(X_0) and Nef(X_0^+) share only the anticanonical ray",
              !common_facet(nef_cone(genus, "X0"), nef_cone(genus, "X0+")).has_value());
    // exactly the six listed pairs are adjacent; no other pair shares a facet
    {
        std::set<std::pair<std::string, std::string>> adjacent = {
            {"X0", "W1"}, {"X0", "W2"}, {"W1", "W1+"},
            {"W2", "W2+"}, {"W1+", "X0+"}, {"W2+", "X0+"}};
        auto nodes = sqm_nodes();
        bool exact = true;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                bool listed = adjacent.count({nodes[i], nodes[j]}) ||
                              adjacent.count({nodes[j], nodes[i]});
                bool shares =
                    common_facet(nef_cone(genus, nodes[i]), nef_cone(genus, nodes[j])).has_value();
                exact &= listed == shares;
            }
        rep.check("cone.facet.g" + G + ".exact_adjacency",
                  "the chamber graph has exactly the listed walls", exact);
    }

    // the movable cone is the union of the six nef chambers
    std::vector<Cone> chambers;
    for (const auto& node : sqm_nodes()) chambers.push_back(nef_cone(genus, node));
    rep.check("cone.mov_union.g" + G, "Mov(X_0) = union of the six nef cones",
              union_equals(chambers, movable_cone(genus)));
    rep.check("cone.mov_union.g" + G + ".strict", "a single chamber is a strict subset",
              !union_equals({nef_cone(genus, "X0")}, movable_cone(genus)));

    // psef ray lists
    Cone psef = psef_cone(genus);
    std::size_t want_rays = genus == 9 ? 6 : 5;
    rep.check("cone.psef.g" + G, "the pseudo-effective cone has the listed extreme rays",
              psef.rays().size() == want_rays, std::to_string(psef.rays().size()),
              std::to_string(want_rays));
    Cone mov = movable_cone(genus);
    bool mov_in_psef = true;
    for (const auto& r : mov.rays()) mov_in_psef &= psef.contains(r, Cone::Membership::closure);
    rep.check("cone.psef.g" + G + ".contains_mov", "Mov(X_0) sits inside Psef(X_0)", mov_in_psef);

    // the anticanonical class: interior of Mov, boundary ray of Nef(X_0)
    Vec3 k = vec(anticanonical_class(genus));
    rep.check("cone.kclass.g" + G + ".mov_interior",
              "[-K] belongs to the interior of the movable cone",
              movable_cone(genus).contains(k, Cone::Membership::interior));
    rep.check("cone.kclass.g" + G + ".nef_ray", "[-K] spans a ray of Nef(X_0)",
              nx0.has_ray(k) && !nx0.contains(k, Cone::Membership::interior));

    // coplanarity families
    for (const auto& [name, fam] : coplanar_families(genus))
        rep.check("cone.coplanar.g" + G + "." + name, "the listed rays lie in a 2-dimensional subspace",
                  coplanar_rank(fam) == 2, std::to_string(coplanar_rank(fam)), "2");
    return rep;
}

inline VerificationReport flop_suite(int genus) {
    VerificationReport rep;
    if (genus != 9) rep.merge(verify_flop_curve_tables(genus));
    rep.merge(verify_negativity_drops(standard_drop_scenarios(genus)));
    rep.merge(semiample_model_classes(genus));
    return rep;
}

// ---------------------------------------------------------------------------
// Suite registry and run configuration.
// ---------------------------------------------------------------------------

struct SuiteDef {
    std::string id;
    bool per_genus = false;
    std::function<VerificationReport(int)> fn;  // genus ignored when !per_genus
};

inline const std::vector<SuiteDef>& suite_registry() {
    static const std::vector<SuiteDef> suites = {
        {"pic.tables", true, [](int g) { return class_table_suite(g); }},
        {"pic.identities", true, [](int g) { return verify_class_identities(g); }},
        {"volume.chains", true, [](int g) { return volume_suite(g); }},
        {"merge.cubes", false, [](int) { return merge_cube_suite(); }},
        {"cone.chambers", true, [](int g) { return cone_suite(g); }},
        {"flop.tables", true, [](int g) { return flop_suite(g); }},
        {"book.curves", false, [](int) { return book_curve_suite(); }},
        {"gm.length", false, [](int) { return gm_length_suite(); }},
        {"gm.flop", false, [](int) { return line_checks_gm_flop(); }},
        {"mumu2.involutions", false, [](int) { return involution_suite(); }},
        {"mumu2.stabilizer", false, [](int) { return stabilizer_constraints(); }},
        {"fujita.v1.quadrics", false, [](int) { return fujita_v1_suite(); }},
        {"fujita.gamma1", false, [](int) { return fujita_gamma1_suite(); }},
        {"fujita.upsilon", false, [](int) { return upsilon_match_suite(); }},
        {"kp.polynomials", false, [](int) { return kp_polynomial_suite(); }},
        {"kp.mu1mu0", false, [](int) { return kp_map_suite(); }},
        {"param.relations", false, [](int) { return parameter_relations(); }},
    };
    return suites;
}

/// Glob with '*' and '?' only.
inline bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

struct RunConfig {
    std::vector<int> genera;             // empty means {9, 10, 12}
    std::vector<std::string> suite_globs;  // empty means everything
    std::string out_dir = ".";
    std::string format = "json";  // json | text
    bool figures = false;
};

/// Usage-level validation: only the three covered genera exist.
inline bool valid_config(const RunConfig& cfg) {
    for (int g : cfg.genera)
        if (g != 9 && g != 10 && g != 12) return false;
    return cfg.format == "json" || cfg.format == "text";
}

inline std::vector<int> effective_genera(const RunConfig& cfg) {
    return cfg.genera.empty() ? std::vector<int>{9, 10, 12} : cfg.genera;
}

inline bool suite_selected(const RunConfig& cfg, const std::string& id) {
    if (cfg.suite_globs.empty()) return true;
    for (const auto& g : cfg.suite_globs)
        if (glob_match(g, id)) return true;
    return false;
}

inline VerificationReport run_suites(const RunConfig& cfg) {
    VerificationReport all;
    for (const auto& s : suite_registry()) {
        if (!suite_selected(cfg, s.id)) continue;
        if (s.per_genus) {
            for (int g : effective_genera(cfg)) all.merge(s.fn(g));
        } else {
            all.merge(s.fn(0));
        }
    }
    all.sort_by_id();
    return all;
}

inline std::string report_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries()) {
        os << "[" << to_string(e.status) << "] " << e.check_id;
        if (!e.lhs.empty()) {
            os << ": " << e.lhs;
            if (!e.rhs.empty()) os << " vs " << e.rhs;
        }
        os << "\n";
    }
    os << "pass " << rep.count(CheckStatus::pass) << ", fail " << rep.count(CheckStatus::fail)
       << ", skipped " << rep.count(CheckStatus::skipped) << "\n";
    return os.str();
}

/// Execute the selected suites, write report.json (or report.txt) and the
/// figures if enabled. Returns 0 iff there are no failing entries.
inline int run(const RunConfig& cfg) {
    VerificationReport rep = run_suites(cfg);
    std::filesystem::create_directories(cfg.out_dir);
    if (cfg.format == "text") {
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "report.txt", std::ios::binary);
        if (!out) {
            std::cerr << "fanolink: cannot write report to " << cfg.out_dir << "\n";
            return 1;
        }
        out << report_text(rep);
    } else {
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "report.json", std::ios::binary);
        if (!out) {
            std::cerr << "fanolink: cannot write report to " << cfg.out_dir << "\n";
            return 1;
        }
        out << rep.to_json().dump(2) << "\n";
    }
    if (cfg.figures) {
        for (int g : effective_genera(cfg)) {
            std::ofstream svg(std::filesystem::path(cfg.out_dir) /
                                  ("chambers_g" + std::to_string(g) + ".svg"),
                              std::ios::binary);
            if (!svg) {
                std::cerr << "fanolink: cannot write figure to " << cfg.out_dir << "\n";
                return 1;
            }
            svg << render_chamber_figure(g);
        }
    }
    return rep.all_passed() ? 0 : 1;
}

inline int plot(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    for (int g : effective_genera(cfg)) {
        std::ofstream svg(std::filesystem::path(cfg.out_dir) /
                              ("chambers_g" + std::to_string(g) + ".svg"),
                          std::ios::binary);
        if (!svg) {
            std::cerr << "fanolink: cannot write figure to " << cfg.out_dir << "\n";
            return 1;
        }
        svg << render_chamber_figure(g);
    }
    return 0;
}

}  // namespace fanolink

#endif
