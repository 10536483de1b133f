#ifndef FANOLINK_CONE_HPP
#define FANOLINK_CONE_HPP

#include <fanolink/lattice.hpp>
#include <fanolink/rational.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace fanolink {

using Vec3 = std::array<long, 3>;

inline long dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
inline Vec3 negate(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

/// Divide out the content, keeping direction. Primitive vectors have content 1.
inline Vec3 primitivize(const Vec3& v) {
    long g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g == 0) throw StructuralError("cannot primitivize the zero vector");
    return {v[0] / g, v[1] / g, v[2] / g};
}

inline std::string vec_to_string(const Vec3& v) {
    return "[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "]";
}

inline Rational dot_q(const Vec3& n, const std::array<Rational, 3>& x) {
    return Rational(n[0]) * x[0] + Rational(n[1]) * x[1] + Rational(n[2]) * x[2];
}

/// Rank of the integer matrix of rays by exact fraction-free elimination.
inline unsigned coplanar_rank(const std::vector<Vec3>& rays) {
    if (rays.empty()) throw StructuralError("rank of an empty ray list");
    std::vector<std::array<Rational, 3>> m;
    for (const auto& r : rays) m.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
    unsigned rank = 0;
    for (int col = 0; col < 3 && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int c = 0; c < 3; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Rational polyhedral cone in the rank-3 class space, stored by its primitive
/// extreme rays (pairwise non-proportional) plus the derived facet data.
class Cone {
public:
    enum class Membership { closure, interior };

    static Cone from_rays(const std::vector<Vec3>& input, std::string label) {
        if (input.empty()) throw StructuralError("cone needs at least one ray");
        std::vector<Vec3> rays;
        for (const auto& r : input) {
            Vec3 p = primitivize(r);
            if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
        }
        for (const auto& a : rays)
            for (const auto& b : rays)
                if (a == negate(b))
                    throw UnsupportedShapeError("cone contains a line; only pointed cones occur here");
        Cone c;
        c.label_ = std::move(label);
        c.dim_ = coplanar_rank(rays);
        c.build(rays);
        return c;
    }

    const std::string& label() const { return label_; }
    unsigned dim() const { return dim_; }
    const std::vector<Vec3>& rays() const { return rays_; }
    const std::vector<Vec3>& facet_normals() const { return facet_normals_; }
    const std::vector<Vec3>& span_equations() const { return span_equations_; }

    bool has_ray(const Vec3& v) const {
        Vec3 p = primitivize(v);
        return std::find(rays_.begin(), rays_.end(), p) != rays_.end();
    }

    /// Exact membership by facet-inequality evaluation.
    bool contains(const std::array<Rational, 3>& v, Membership mode) const {
        for (const auto& eq : span_equations_)
            if (dot_q(eq, v) != 0) return false;
        if (mode == Membership::interior && dim_ < 3) return false;
        for (const auto& n : facet_normals_) {
            Rational s = dot_q(n, v);
            if (mode == Membership::interior ? s <= 0 : s < 0) return false;
        }
        return true;
    }
    bool contains(const Vec3& v, Membership mode) const {
        return contains(std::array<Rational, 3>{Rational(v[0]), Rational(v[1]), Rational(v[2])}, mode);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["label"] = label_;
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : rays_) r.push_back({v[0], v[1], v[2]});
        j["rays"] = r;
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (const auto& v : facet_normals_) f.push_back({v[0], v[1], v[2]});
        j["facet_normals"] = f;
        return j;
    }

private:
    void build(std::vector<Vec3> rays) {
        if (dim_ == 1) {
            rays_ = {rays.front()};
            // x proportional to r with nonnegative multiple
            Vec3 r = rays_.front();
            Vec3 e1 = cross(r, std::abs(r[0]) <= std::min(std::abs(r[1]), std::abs(r[2]))
                                   ? Vec3{1, 0, 0}
                                   : (std::abs(r[1]) <= std::abs(r[2]) ? Vec3{0, 1, 0} : Vec3{0, 0, 1}));
            Vec3 e2 = cross(r, e1);
            span_equations_ = {primitivize(e1), primitivize(e2)};
            facet_normals_ = {r};  // x . r >= 0 along the line
            return;
        }
        if (dim_ == 2) {
            Vec3 n{0, 0, 0};
            for (std::size_t i = 0; i < rays.size() && is_zero(n); ++i)
                for (std::size_t j = i + 1; j < rays.size() && is_zero(n); ++j) n = cross(rays[i], rays[j]);
            n = primitivize(n);
            span_equations_ = {n};
            // in-plane extremes: the two rays not in the strict cone of the others
            std::vector<Vec3> extremes;
            for (const auto& r : rays) {
                Vec3 m = primitivize(cross(n, r));
                long pos = 0, neg = 0;
                for (const auto& s : rays) {
                    long d = dot(m, s);
                    pos += d > 0;
                    neg += d < 0;
                }
                if (pos == 0 || neg == 0) extremes.push_back(r);
            }
            rays_ = extremes;
            sort_rays();
            for (const auto& r : rays_) {
                Vec3 m = primitivize(cross(n, r));
                bool flip = false;
                for (const auto& s : rays)
                    if (dot(m, s) < 0) flip = true;
                facet_normals_.push_back(flip ? negate(m) : m);
            }
            return;
        }
        // full-dimensional: facets from ray pairs
        std::vector<Vec3> normals;
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                Vec3 n = cross(rays[i], rays[j]);
                if (is_zero(n)) continue;
                n = primitivize(n);
                bool all_nonneg = true, all_nonpos = true;
                for (const auto& r : rays) {
                    long d = dot(n, r);
                    all_nonneg &= d >= 0;
                    all_nonpos &= d <= 0;
                }
                if (all_nonpos && !all_nonneg) n = negate(n);
                if (all_nonneg || all_nonpos) {
                    if (std::find(normals.begin(), normals.end(), n) == normals.end())
                        normals.push_back(n);
                }
            }
        if (normals.empty()) throw UnsupportedShapeError("cone has no facets; not pointed");
        // pointedness: some positive combination of facet normals is strictly
        // positive on every ray
        Vec3 w{0, 0, 0};
        for (const auto& n : normals)
            for (int k = 0; k < 3; ++k) w[k] += n[k];
        for (const auto& r : rays)
            if (dot(w, r) <= 0)
                throw UnsupportedShapeError("cone contains a line; only pointed cones occur here");
        facet_normals_ = normals;
        // extreme rays: lie on at least two facets with independent normals
        for (const auto& r : rays) {
            std::vector<Vec3> on;
            for (const auto& n : normals)
                if (dot(n, r) == 0) on.push_back(n);
            if (on.size() >= 2 && coplanar_rank(on) >= 2) rays_.push_back(r);
        }
        sort_rays();
        std::sort(facet_normals_.begin(), facet_normals_.end());
    }

    void sort_rays() { std::sort(rays_.begin(), rays_.end()); }

    std::string label_;
    unsigned dim_ = 0;
    std::vector<Vec3> rays_;
    std::vector<Vec3> facet_normals_;
    std::vector<Vec3> span_equations_;
};

inline Cone cone_from_rays(const std::vector<Vec3>& rays, const std::string& label) {
    return Cone::from_rays(rays, label);
}

/// If the two full-dimensional cones meet exactly in a common 2-dimensional
/// face, return that face as a cone.
inline std::optional<Cone> common_facet(const Cone& c1, const Cone& c2) {
    if (c1.dim() != 3 || c2.dim() != 3)
        throw StructuralError("common_facet expects full-dimensional cones");
    for (const auto& n : c1.facet_normals()) {
        Vec3 opposite = negate(n);
        if (std::find(c2.facet_normals().begin(), c2.facet_normals().end(), opposite) ==
            c2.facet_normals().end())
            continue;
        std::vector<Vec3> e1, e2;
        for (const auto& r : c1.rays())
            if (dot(n, r) == 0) e1.push_back(r);
        for (const auto& r : c2.rays())
            if (dot(opposite, r) == 0) e2.push_back(r);
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        if (e1.size() >= 2 && e1 == e2)
            return Cone::from_rays(e1, c1.label() + "&" + c2.label());
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Slice geometry on the affine plane functional = 1.
// ---------------------------------------------------------------------------

using Point2 = std::array<Rational, 2>;

/// The slice functional used throughout: a0 + (1/100)(a1 + a2), stored as the
/// primitive integer covector (100, 1, 1). Strictly positive on every ray of
/// every cone in the chamber decompositions.
inline Vec3 standard_slice_functional() { return {100, 1, 1}; }

struct SlicePolygon {
    Vec3 functional;
    std::vector<Point2> vertices;  // convex position, counterclockwise

    Rational area() const {
        Rational acc(0);
        std::size_t n = vertices.size();
        if (n < 3) return acc;
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& p = vertices[i];
            const Point2& q = vertices[(i + 1) % n];
            acc += p[0] * q[1] - q[0] * p[1];
        }
        return acc / 2;
    }
};

inline Point2 slice_point(const Vec3& ray, const Vec3& functional) {
    long s = dot(functional, ray);
    if (s <= 0) throw StructuralError("slice functional is not positive on ray " + vec_to_string(ray));
    return {Rational(ray[1], s), Rational(ray[2], s)};
}

namespace detail {
inline Rational cross2(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}
}  // namespace detail

/// Vertices are the rays rescaled onto the affine plane functional = 1,
/// ordered counterclockwise. Single-ray cones give a degenerate single-point
/// polygon, rejected for the polygon operations that need area.
inline SlicePolygon slice_polygon(const Cone& c, const Vec3& functional) {
    SlicePolygon poly;
    poly.functional = functional;
    for (const auto& r : c.rays()) poly.vertices.push_back(slice_point(r, functional));
    if (poly.vertices.size() >= 3) {
        Point2 centroid{Rational(0), Rational(0)};
        for (const auto& p : poly.vertices) {
            centroid[0] += p[0];
            centroid[1] += p[1];
        }
        centroid[0] /= Rational(static_cast<long>(poly.vertices.size()));
        centroid[1] /= Rational(static_cast<long>(poly.vertices.size()));
        std::sort(poly.vertices.begin(), poly.vertices.end(),
                  [&](const Point2& a, const Point2& b) {
                      auto half = [&](const Point2& p) {
                          if (p[1] > centroid[1]) return 0;
                          if (p[1] < centroid[1]) return 1;
                          return p[0] >= centroid[0] ? 0 : 1;
                      };
                      int ha = half(a), hb = half(b);
                      if (ha != hb) return ha < hb;
                      Rational cr = detail::cross2(centroid, a, b);
                      if (cr != 0) return cr > 0;
                      return a < b;
                  });
        // convex position check
        std::size_t n = poly.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            Rational cr = detail::cross2(poly.vertices[i], poly.vertices[(i + 1) % n],
                                         poly.vertices[(i + 2) % n]);
            if (cr <= 0) throw StructuralError("slice polygon is not strictly convex");
        }
    }
    return poly;
}

inline bool point_in_polygon(const SlicePolygon& poly, const Point2& p, bool strict) {
    std::size_t n = poly.vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Rational cr = detail::cross2(poly.vertices[i], poly.vertices[(i + 1) % n], p);
        if (strict ? cr <= 0 : cr < 0) return false;
    }
    return true;
}

namespace detail {
inline bool segments_cross_properly(const Point2& a, const Point2& b, const Point2& c,
                                    const Point2& d) {
    Rational d1 = cross2(a, b, c), d2 = cross2(a, b, d);
    Rational d3 = cross2(c, d, a), d4 = cross2(c, d, b);
    auto opposite = [](const Rational& x, const Rational& y) {
        return (x > 0 && y < 0) || (x < 0 && y > 0);
    };
    return opposite(d1, d2) && opposite(d3, d4);
}
}  // namespace detail

inline Point2 polygon_centroid(const SlicePolygon& p) {
    Point2 c{Rational(0), Rational(0)};
    for (const auto& v : p.vertices) {
        c[0] += v[0];
        c[1] += v[1];
    }
    c[0] /= Rational(static_cast<long>(p.vertices.size()));
    c[1] /= Rational(static_cast<long>(p.vertices.size()));
    return c;
}

inline bool interiors_disjoint(const SlicePolygon& p, const SlicePolygon& q) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = 0; j < q.vertices.size(); ++j)
            if (detail::segments_cross_properly(p.vertices[i],
                                                p.vertices[(i + 1) % p.vertices.size()],
                                                q.vertices[j],
                                                q.vertices[(j + 1) % q.vertices.size()]))
                return false;
    for (const auto& v : p.vertices)
        if (point_in_polygon(q, v, true)) return false;
    for (const auto& v : q.vertices)
        if (point_in_polygon(p, v, true)) return false;
    if (point_in_polygon(q, polygon_centroid(p), true)) return false;
    if (point_in_polygon(p, polygon_centroid(q), true)) return false;
    return true;
}

/// True iff the slice polygons of `parts` have pairwise disjoint interiors,
/// each part lies inside `whole`, and the areas add up exactly.
inline bool union_equals(const std::vector<Cone>& parts, const Cone& whole,
                         const Vec3& functional = standard_slice_functional()) {
    SlicePolygon w = slice_polygon(whole, functional);
    Rational total(0);
    std::vector<SlicePolygon> ps;
    for (const auto& c : parts) {
        SlicePolygon p = slice_polygon(c, functional);
        for (const auto& v : p.vertices)
            if (!point_in_polygon(w, v, false)) return false;
        total += p.area();
        ps.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (!interiors_disjoint(ps[i], ps[j])) return false;
    return total == w.area();
}

// ---------------------------------------------------------------------------
// The paper's cones in [a0,a1,a2]-coordinates.
// ---------------------------------------------------------------------------

/// Nef cones of the six small Q-factorial modifications of X_0, identified in
/// the shared N^1. The coordinates are genus-independent; the ray labels are
/// not.
inline Cone nef_cone(int genus, const std::string& node) {
    require_genus(genus);
    auto v = [&](const DivisorClass& d) { return Vec3{d.a[0], d.a[1], d.a[2]}; };
    const Vec3 OX{1, 0, 0};
    const Vec3 XB1 = v(xbar_class(genus, 1)), XB2 = v(xbar_class(genus, 2));
    const Vec3 XB0{1, -1, -1};
    const Vec3 XX1 = v(xx_class(genus, 1)), XX2 = v(xx_class(genus, 2));
    const Vec3 YY1 = v(yy_class(genus, 1)), YY2 = v(yy_class(genus, 2));
    if (node == "X0") return cone_from_rays({OX, XB1, XB0, XB2}, "Nef(X0)");
    if (node == "W1") return cone_from_rays({XB0, XB1, XX1}, "Nef(W1)");
    if (node == "W2") return cone_from_rays({XB0, XB2, XX2}, "Nef(W2)");
    if (node == "W1+") return cone_from_rays({XB0, YY1, XX1}, "Nef(W1+)");
    if (node == "W2+") return cone_from_rays({XB0, YY2, XX2}, "Nef(W2+)");
    if (node == "X0+") return cone_from_rays({XB0, YY1, YY2}, "Nef(X0+)");
    throw StructuralError("no nef cone for node '" + node + "'");
}

inline std::vector<std::string> sqm_nodes() {
    return {"X0", "W1", "W1+", "X0+", "W2+", "W2"};
}

inline Cone movable_cone(int genus) {
    auto v = [&](const DivisorClass& d) { return Vec3{d.a[0], d.a[1], d.a[2]}; };
    return cone_from_rays({Vec3{1, 0, 0}, v(xx_class(genus, 1)), v(yy_class(genus, 1)),
                           v(yy_class(genus, 2)), v(xx_class(genus, 2))},
                          "Mov(X0)");
}

/// Psef(X_0) is input data from the Mori-dream-space description, not derived.
inline Cone psef_cone(int genus) {
    require_genus(genus);
    auto v = [&](const std::string& k) {
        DivisorClass d = table_class(genus, k);
        return Vec3{d.a[0], d.a[1], d.a[2]};
    };
    if (genus == 9)
        return cone_from_rays(
            {v("O_P1_2"), v("O_P1_1"), v("S1"), v("F2"), v("F1"), v("S2")}, "Psef(X0)");
    return cone_from_rays({v("E"), v("S1"), v("F2"), v("F1"), v("S2")}, "Psef(X0)");
}

/// The ray families asserted to lie in common 2-dimensional subspaces, used in
/// deriving the chamber structure; each must have rank exactly 2.
inline std::vector<std::pair<std::string, std::vector<Vec3>>> coplanar_families(int genus) {
    require_genus(genus);
    auto v = [&](const std::string& k) {
        DivisorClass d = table_class(genus, k);
        return Vec3{d.a[0], d.a[1], d.a[2]};
    };
    auto vx = [&](int i) {
        DivisorClass d = xx_class(genus, i);
        return Vec3{d.a[0], d.a[1], d.a[2]};
    };
    auto vy = [&](int i) {
        DivisorClass d = yy_class(genus, i);
        return Vec3{d.a[0], d.a[1], d.a[2]};
    };
    std::vector<std::pair<std::string, std::vector<Vec3>>> fams;
    for (int i = 1; i <= 2; ++i) {
        int j = 3 - i;
        std::string si = std::to_string(i), sj = std::to_string(j);
        fams.push_back({"Si.XXi.Xbari.OX.Fi." + si,
                        {v("S" + si), vx(i), v("O_Xbar" + si), v("O_X"), v("F" + si)}});
        fams.push_back({"YYi.Xbar0.Xbarj.Fi." + si,
                        {vy(i), v("O_Xbar0"), v("O_Xbar" + sj), v("F" + si)}});
    }
    fams.push_back({"XX1.Xbar0.XX2", {vx(1), v("O_Xbar0"), vx(2)}});
    if (genus == 12) {
        fams.push_back({"S1.Q1.Q2.S2", {v("S1"), vy(1), vy(2), v("S2")}});
        for (int i = 1; i <= 2; ++i) {
            int j = 3 - i;
            fams.push_back({"E.Qi.Vi.Fj." + std::to_string(i),
                            {v("E"), vy(i), vx(i), v("F" + std::to_string(j))}});
        }
    } else {
        for (int i = 1; i <= 2; ++i) {
            int j = 3 - i;
            fams.push_back({"YYi.XXi.Fj." + std::to_string(i),
                            {vy(i), vx(i), v("F" + std::to_string(j))}});
        }
    }
    return fams;
}

}  // namespace fanolink

#endif
