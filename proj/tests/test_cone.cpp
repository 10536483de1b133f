#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fanolink/cone.hpp>
#include <fanolink/cone_svg.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace fanolink;

namespace {

// Double-description oracle: regenerate extreme rays from the facet normals
// alone (candidates are cross products of normal pairs) and compare.
std::vector<Vec3> rays_from_facets(const Cone& c) {
    const auto& normals = c.facet_normals();
    std::set<Vec3> out;
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            Vec3 cand = cross(normals[i], normals[j]);
            if (is_zero(cand)) continue;
            for (Vec3 v : {cand, negate(cand)}) {
                bool inside = true;
                for (const auto& n : normals) inside &= dot(n, v) >= 0;
                if (inside) out.insert(primitivize(v));
            }
        }
    return std::vector<Vec3>(out.begin(), out.end());
}

}  // namespace

TEST_CASE("ray normalization and dedup") {
    Cone c = cone_from_rays({Vec3{2, 0, 0}, Vec3{1, 0, 0}}, "ray");
    CHECK(c.rays() == std::vector<Vec3>{Vec3{1, 0, 0}});
    CHECK(c.dim() == 1);
    CHECK_THROWS_AS(cone_from_rays({Vec3{1, 0, 0}, Vec3{-1, 0, 0}}, "line"),
                    UnsupportedShapeError);
    CHECK_THROWS_AS(cone_from_rays({Vec3{0, 0, 0}}, "zero"), StructuralError);
}

TEST_CASE("the nef cone of the central model has exactly 4 extreme rays") {
    Cone c = cone_from_rays({Vec3{1, 0, 0}, Vec3{1, -1, 0}, Vec3{1, -1, -1}, Vec3{1, 0, -1}},
                            "Nef(X0)");
    CHECK(c.rays().size() == 4);
    CHECK(c.dim() == 3);
    // adding an interior vector changes nothing
    Cone c2 = cone_from_rays(
        {Vec3{1, 0, 0}, Vec3{1, -1, 0}, Vec3{1, -1, -1}, Vec3{1, 0, -1}, Vec3{4, -2, -2}},
        "Nef(X0)+interior");
    CHECK(c2.rays() == c.rays());
}

TEST_CASE("all five listed movable-cone rays are extreme") {
    for (int g : {9, 10, 12}) CHECK(movable_cone(g).rays().size() == 5);
}

TEST_CASE("membership") {
    for (int g : {9, 10, 12}) {
        Cone mov = movable_cone(g);
        Cone nef = nef_cone(g, "X0");
        Vec3 k{1, -1, -1};
        CHECK(mov.contains(k, Cone::Membership::interior));
        CHECK(nef.contains(k, Cone::Membership::closure));
        CHECK(!nef.contains(k, Cone::Membership::interior));
        CHECK(nef.has_ray(k));
        CHECK(mov.contains(Vec3{0, 0, 0}, Cone::Membership::closure));
        CHECK(!mov.contains(Vec3{0, 0, 0}, Cone::Membership::interior));
    }
}

TEST_CASE("common facets of the chamber structure") {
    for (int g : {9, 10, 12}) {
        auto f = common_facet(nef_cone(g, "X0"), nef_cone(g, "W1"));
        REQUIRE(f.has_value());
        std::vector<Vec3> want{Vec3{1, -1, 0}, Vec3{1, -1, -1}};
        std::sort(want.begin(), want.end());
        CHECK(f->rays() == want);
        auto g2 = common_facet(nef_cone(g, "W1+"), nef_cone(g, "X0+"));
        REQUIRE(g2.has_value());
        std::vector<Vec3> want2{Vec3{1, -2, -1}, Vec3{1, -1, -1}};
        std::sort(want2.begin(), want2.end());
        CHECK(g2->rays() == want2);
        CHECK(!common_facet(nef_cone(g, "X0"), nef_cone(g, "X0+")).has_value());
        // symmetry
        auto ab = common_facet(nef_cone(g, "W1"), nef_cone(g, "X0"));
        REQUIRE(ab.has_value());
        CHECK(ab->rays() == f->rays());
    }
}

TEST_CASE("slice polygons") {
    Cone nef = nef_cone(12, "X0");
    SlicePolygon p = slice_polygon(nef, Vec3{1, 0, 0});
    REQUIRE(p.vertices.size() == 4);
    std::vector<Point2> want = {{Rational(0), Rational(0)},
                                {Rational(-1), Rational(0)},
                                {Rational(-1), Rational(-1)},
                                {Rational(0), Rational(-1)}};
    for (const auto& v : want)
        CHECK(std::count(p.vertices.begin(), p.vertices.end(), v) == 1);
    CHECK(p.area() == 1);

    Cone mov = movable_cone(12);
    SlicePolygon pm = slice_polygon(mov, standard_slice_functional());
    CHECK(pm.vertices.size() == 5);

    Cone single = cone_from_rays({Vec3{1, 0, 0}}, "ray");
    SlicePolygon ps = slice_polygon(single, Vec3{1, 0, 0});
    CHECK(ps.vertices.size() == 1);
    CHECK(ps.area() == 0);

    CHECK_THROWS_AS(slice_polygon(psef_cone(12), Vec3{1, 0, 0}), StructuralError);
}

TEST_CASE("union equality of the chamber decomposition") {
    for (int g : {9, 10, 12}) {
        std::vector<Cone> chambers;
        for (const auto& n : sqm_nodes()) chambers.push_back(nef_cone(g, n));
        CHECK(union_equals(chambers, movable_cone(g)));
        CHECK(!union_equals({nef_cone(g, "X0")}, movable_cone(g)));
        // area additivity certified by the partition
        Rational total(0);
        for (const auto& c : chambers)
            total += slice_polygon(c, standard_slice_functional()).area();
        CHECK(total == slice_polygon(movable_cone(g), standard_slice_functional()).area());
    }
}

TEST_CASE("coplanarity ranks") {
    CHECK(coplanar_rank({Vec3{1, -3, 0}, Vec3{1, -2, 0}, Vec3{1, -1, 0}, Vec3{1, 0, 0},
                         Vec3{0, 1, 0}}) == 2);
    CHECK(coplanar_rank({Vec3{1, -3, 0}, Vec3{1, -2, -1}, Vec3{1, -1, -2}, Vec3{1, 0, -3}}) == 2);
    CHECK(coplanar_rank({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) == 3);
    for (int g : {9, 10, 12})
        for (const auto& [name, fam] : coplanar_families(g)) CHECK(coplanar_rank(fam) == 2);
}

TEST_CASE("double dual regenerates the extreme rays") {
    std::vector<Cone> cones;
    for (int g : {9, 10, 12}) {
        for (const auto& n : sqm_nodes()) cones.push_back(nef_cone(g, n));
        cones.push_back(movable_cone(g));
        cones.push_back(psef_cone(g));
    }
    for (const auto& c : cones) {
        auto regenerated = rays_from_facets(c);
        std::vector<Vec3> want = c.rays();
        std::sort(want.begin(), want.end());
        CHECK(regenerated == want);
    }
}

TEST_CASE("psef slices") {
    CHECK(psef_cone(12).rays().size() == 5);
    CHECK(psef_cone(10).rays().size() == 5);
    CHECK(psef_cone(9).rays().size() == 6);
    // the standard slice functional is positive on every listed ray
    for (int g : {9, 10, 12}) {
        Cone psef = psef_cone(g);
        for (const auto& r : psef.rays()) CHECK(dot(standard_slice_functional(), r) > 0);
    }
}

TEST_CASE("interior membership implies closure membership") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coef(0, 5);
    for (int g : {9, 10, 12}) {
        Cone mov = movable_cone(g);
        for (int i = 0; i < 100; ++i) {
            // a random nonnegative combination of the rays lies in the closure
            std::array<Rational, 3> v{Rational(0), Rational(0), Rational(0)};
            for (const auto& r : mov.rays()) {
                Rational c(coef(rng));
                for (int k = 0; k < 3; ++k) v[k] += c * Rational(r[k]);
            }
            CHECK(mov.contains(v, Cone::Membership::closure));
            if (mov.contains(v, Cone::Membership::interior))
                CHECK(mov.contains(v, Cone::Membership::closure));
        }
        for (const auto& r : mov.rays()) {
            CHECK(mov.contains(r, Cone::Membership::closure));
            CHECK(!mov.contains(r, Cone::Membership::interior));
        }
    }
}

TEST_CASE("cone JSON dump") {
    auto j = nef_cone(12, "X0").to_json();
    CHECK(j["label"] == "Nef(X0)");
    CHECK(j["rays"].size() == 4);
    CHECK(j["facet_normals"].size() == 4);
}

TEST_CASE("empty render still yields a valid document") {
    std::string svg = render_slice_svg({}, {});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<line") != std::string::npos);  // the axes
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg rendering is deterministic and complete") {
    std::string a = render_chamber_figure(12);
    std::string b = render_chamber_figure(12);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    // six nef chambers + Mov + Psef
    std::size_t count = 0;
    for (std::size_t pos = a.find("<polygon"); pos != std::string::npos;
         pos = a.find("<polygon", pos + 1))
        ++count;
    CHECK(count == 8);
    CHECK(a.find(">E</text>") != std::string::npos);
    CHECK(a.find(">S1</text>") != std::string::npos);
    std::string g9 = render_chamber_figure(9);
    CHECK(g9.find(">O_P1_1</text>") != std::string::npos);
    CHECK(g9.find(">O_P1_2</text>") != std::string::npos);
}
