#ifndef FANOLINK_CONE_SVG_HPP
#define FANOLINK_CONE_SVG_HPP

#include <fanolink/cone.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fanolink {

struct SliceStyle {
    long width = 640;
    long height = 640;
    // fixed-point decimals emitted with this many digits; keeps output
    // byte-identical across runs and platforms
    int decimals = 3;
};

namespace detail {

/// Exact decimal rendering of a rational with fixed scale (round half away
/// from zero), so the SVG bytes depend only on the input.
inline std::string fixed_decimal(const Rational& r, int decimals) {
    BigInt scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    Rational scaled = r * Rational(scale);
    BigInt num = scaled.get_num(), den = scaled.get_den();
    BigInt q = num / den, rem = num % den;
    if (rem != 0) {
        BigInt twice = BigInt(2 * abs(rem));
        if (twice >= den) q += (num < 0 ? -1 : 1);
    }
    bool neg = q < 0;
    BigInt qa = abs(q);
    std::string digits = qa.get_str();
    while (static_cast<int>(digits.size()) <= decimals) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - decimals) + "." +
                      digits.substr(digits.size() - decimals);
    return (neg ? "-" : "") + out;
}

}  // namespace detail

struct LabeledCone {
    Cone cone;
    std::string css_class;  // pattern class for the fill
};

/// Deterministic SVG of a chamber slice: fixed viewport, cones as filled
/// polygons, rays labeled. Byte-identical across runs for identical input.
inline std::string render_slice_svg(const std::vector<LabeledCone>& cones,
                                    const std::map<std::string, Vec3>& ray_labels,
                                    const Vec3& functional = standard_slice_functional(),
                                    const SliceStyle& style = SliceStyle{}) {
    // gather slice points to set up the affine viewport transform
    std::vector<SlicePolygon> polys;
    Rational minx(0), maxx(0), miny(0), maxy(0);
    bool seen = false;
    auto stretch = [&](const Point2& p) {
        if (!seen) {
            minx = maxx = p[0];
            miny = maxy = p[1];
            seen = true;
            return;
        }
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    };
    for (const auto& lc : cones) {
        polys.push_back(slice_polygon(lc.cone, functional));
        for (const auto& v : polys.back().vertices) stretch(v);
    }
    for (const auto& [name, ray] : ray_labels) stretch(slice_point(ray, functional));
    if (!seen) {
        minx = miny = Rational(-1);
        maxx = maxy = Rational(1);
    }
    Rational spanx = maxx - minx, spany = maxy - miny;
    if (spanx == 0) spanx = 1;
    if (spany == 0) spany = 1;
    const Rational margin(60);
    Rational sx = (Rational(style.width) - 2 * margin) / spanx;
    Rational sy = (Rational(style.height) - 2 * margin) / spany;
    Rational s = std::min(sx, sy);
    auto tx = [&](const Point2& p) {
        return Point2{margin + (p[0] - minx) * s, Rational(style.height) - margin - (p[1] - miny) * s};
    };
    auto fmt = [&](const Rational& r) { return detail::fixed_decimal(r, style.decimals); };

    static const char* palette[] = {"#dce9f7", "#f7e3dc", "#e1f7dc", "#f7f3dc",
                                    "#ecdcf7", "#dcf7f3", "#f0f0f0", "#ffffff"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
       << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << " "
       << style.height << "\">\n";
    os << "<rect width=\"" << style.width << "\" height=\"" << style.height
       << "\" fill=\"white\"/>\n";
    // axes through the image of the origin direction (the slice of a0-axis)
    os << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(Rational(style.height) - margin)
       << "\" x2=\"" << fmt(Rational(style.width) - margin) << "\" y2=\""
       << fmt(Rational(style.height) - margin) << "\"/>\n";
    os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(margin)
       << "\" y2=\"" << fmt(Rational(style.height) - margin) << "\"/>\n";
    os << "</g>\n";
    std::size_t color = 0;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const auto& poly = polys[i];
        os << "<polygon class=\"" << cones[i].css_class << "\" points=\"";
        for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
            Point2 p = tx(poly.vertices[k]);
            if (k) os << " ";
            os << fmt(p[0]) << "," << fmt(p[1]);
        }
        os << "\" fill=\"" << palette[color % 8]
           << "\" stroke=\"#333333\" stroke-width=\"1.5\" fill-opacity=\"0.85\"><title>"
           << cones[i].cone.label() << "</title></polygon>\n";
        ++color;
    }
    for (const auto& [name, ray] : ray_labels) {
        Point2 p = tx(slice_point(ray, functional));
        os << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
           << "\" r=\"3\" fill=\"#000000\"/>\n";
        os << "<text x=\"" << fmt(p[0] + 6) << "\" y=\"" << fmt(p[1] - 6)
           << "\" font-family=\"monospace\" font-size=\"14\">" << name << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

/// The full chamber figure for one genus: the six nef chambers inside
/// Mov(X_0) inside Psef(X_0), rays labeled with the class-table symbols.
/// Drawn with the balanced functional a0 + (a1+a2)/5, still strictly positive
/// on every listed ray, so the chambers stay visible next to the F-rays.
inline std::string render_chamber_figure(int genus) {
    require_genus(genus);
    std::vector<LabeledCone> cones;
    cones.push_back({psef_cone(genus), "psef"});
    cones.push_back({movable_cone(genus), "mov"});
    for (const auto& node : sqm_nodes()) cones.push_back({nef_cone(genus, node), "nef"});
    std::map<std::string, Vec3> labels;
    for (const auto& [key, cls] : class_table(genus))
        labels[key] = Vec3{cls.a[0], cls.a[1], cls.a[2]};
    return render_slice_svg(cones, labels, Vec3{5, 1, 1});
}

}  // namespace fanolink

#endif
