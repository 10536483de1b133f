#ifndef FANOLINK_SUITES_HPP
#define FANOLINK_SUITES_HPP

#include <fanolink/curves.hpp>
#include <fanolink/report.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanolink {

// ---------------------------------------------------------------------------
// The explicit equivariant geometry: coordinates, curves, quadrics and maps.
// ---------------------------------------------------------------------------

namespace geom {

inline std::vector<std::string> p4_vars() { return {"x0", "x1", "x2", "x3", "x4"}; }
inline std::vector<std::string> p6_vars() {
    return {"z0", "z1", "z2", "z3", "z4", "z5", "z6"};
}
inline std::vector<std::string> kp_vars() { return {"x", "y", "z", "t", "w"}; }

inline MultiPoly pp(const std::string& text, const CoeffField& f,
                    const std::vector<std::string>& vars) {
    return parse_poly(text, f, vars);
}

/// Canonical bracket text of a tuple of forms, for report witnesses.
inline std::string bracket(const std::vector<MultiPoly>& forms) {
    std::string out = "[";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i) out += " : ";
        out += forms[i].to_string();
    }
    return out + "]";
}

/// x1x3 - q x0x4 + (q-1) x2^2 over Q(q) or Q(s) (where q is rewritten as s^2).
inline Hypersurface book_quadric(const CoeffField& f) {
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);
    auto vars = p4_vars();
    MultiPoly eq = MultiPoly::zero(f, vars);
    eq.add_term({0, 1, 0, 1, 0}, one);
    eq.add_term({1, 0, 0, 0, 1}, -q);
    eq.add_term({0, 0, 2, 0, 0}, q - one);
    return Hypersurface{vars, eq};
}

/// The weight-(0,1,2,3,4) torus action on P^4.
inline WeightVector book_weights() {
    return WeightVector{{0, 1, 2, 3, 4}, "lambda.[x0:x1:x2:x3:x4] = [x0:l x1:l^2 x2:l^3 x3:l^4 x4]"};
}

/// The rational normal quartic [t0^4 : t0^3 t1 : t0^2 t1^2 : t0 t1^3 : t1^4].
inline ParametrizedCurve gamma_curve(const CoeffField& f) {
    std::vector<std::string> tv{"t0", "t1"};
    ParametrizedCurve c{{"t0", "t1"}, {}};
    for (int k = 0; k <= 4; ++k)
        c.forms.push_back(MultiPoly::monomial(f, tv, FieldElem::one(f), {4 - k, k}));
    return c;
}

/// The invariant cubic [u0^3 : u0^2 u1 : u0 u1^2 : (1-q) u1^3 : 0].
inline ParametrizedCurve cq_curve(const CoeffField& f) {
    std::vector<std::string> uv{"u0", "u1"};
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);
    ParametrizedCurve c{{"u0", "u1"}, {}};
    c.forms.push_back(MultiPoly::monomial(f, uv, one, {3, 0}));
    c.forms.push_back(MultiPoly::monomial(f, uv, one, {2, 1}));
    c.forms.push_back(MultiPoly::monomial(f, uv, one, {1, 2}));
    c.forms.push_back(MultiPoly::monomial(f, uv, one - q, {0, 3}));
    c.forms.push_back(MultiPoly::zero(f, uv));
    return c;
}

/// Coordinate reversal [x0:...:x4] -> [x4:...:x0].
inline MapByForms coordinate_reversal(const CoeffField& f) {
    auto vars = p4_vars();
    MapByForms m{vars, {}};
    for (int k = 4; k >= 0; --k) m.forms.push_back(MultiPoly::variable(f, vars, vars[k]));
    return m;
}

/// The birational involution by the five quadrics
/// [x0x2-x1^2 : s(x0x3-x1x2) : q(x0x4-x2^2) : s(x1x4-x2x3) : x2x4-x3^2].
inline MapByForms quadric_involution() {
    CoeffField f = CoeffField::Q_s();
    auto vars = p4_vars();
    FieldElem s = FieldElem::param(f, "s");
    FieldElem q = FieldElem::param(f, "q");
    auto V = [&](int i) { return MultiPoly::variable(f, vars, vars[i]); };
    MapByForms m{vars, {}};
    m.forms.push_back(V(0) * V(2) - V(1) * V(1));
    m.forms.push_back((V(0) * V(3) - V(1) * V(2)).scaled(s));
    m.forms.push_back((V(0) * V(4) - V(2) * V(2)).scaled(q));
    m.forms.push_back((V(1) * V(4) - V(2) * V(3)).scaled(s));
    m.forms.push_back(V(2) * V(4) - V(3) * V(3));
    return m;
}

/// The seven quadrics of the double-projection map into P^6, over Q(q).
inline MapByForms fujita_forms() {
    CoeffField f = CoeffField::Q_of("q");
    auto vars = p4_vars();
    MapByForms m{vars, {}};
    m.forms.push_back(pp("(q-1)/(q)*x0*x2 - (q-1)/(q)*x1^2", f, vars));
    m.forms.push_back(pp("-x0*x4", f, vars));
    m.forms.push_back(pp("x2*x4", f, vars));
    m.forms.push_back(pp("-(q)/(q-1)*x4^2", f, vars));
    m.forms.push_back(pp("x1*x4", f, vars));
    m.forms.push_back(pp("-(1)/(q)*x0*x3 - (q-1)/(q)*x1*x2", f, vars));
    m.forms.push_back(pp("(1)/(q-1)*x3*x4", f, vars));
    return m;
}

/// The five quadrics cutting out the quintic del Pezzo threefold in P^6.
inline std::vector<Hypersurface> v1_quadrics() {
    CoeffField f = CoeffField::Q_of("q");
    auto vars = p6_vars();
    std::vector<std::string> eqs = {
        "z4*z5 - z0*z2 + z1^2", "z4*z6 - z1*z3 + z2^2", "z4^2 - z0*z3 + z1*z2",
        "z1*z4 - z0*z6 - z2*z5", "z2*z4 - z3*z5 - z1*z6"};
    std::vector<Hypersurface> out;
    for (const auto& e : eqs) out.push_back(Hypersurface{vars, pp(e, f, vars)});
    return out;
}

/// The displayed parametrization of the transformed quartic in P^6.
inline ParametrizedCurve gamma1_curve() {
    CoeffField f = CoeffField::Q_of("q");
    std::vector<std::string> uv{"u0", "u1"};
    ParametrizedCurve c{{"u0", "u1"}, {}};
    c.forms.push_back(MultiPoly::zero(f, uv));
    c.forms.push_back(pp("-u0^4*u1", f, uv));
    c.forms.push_back(pp("u0^2*u1^3", f, uv));
    c.forms.push_back(pp("-(q)/(q-1)*u1^5", f, uv));
    c.forms.push_back(pp("u0^3*u1^2", f, uv));
    c.forms.push_back(pp("-u0^5", f, uv));
    c.forms.push_back(pp("(1)/(q-1)*u0*u1^4", f, uv));
    return c;
}

/// Normalization of the hyperplane section spanned by the transformed
/// quartic: the Hirzebruch surface F_3 mapping to P^6. Variables
/// (bx0, bx1, by0, by1) with by-degree one in every form.
inline MapByForms f3_normalization() {
    CoeffField f = CoeffField::Q_of("q");
    std::vector<std::string> vars{"bx0", "bx1", "by0", "by1"};
    MapByForms m{vars, {}};
    m.forms.push_back(MultiPoly::zero(f, vars));
    m.forms.push_back(pp("bx0^3*bx1*by0", f, vars));
    m.forms.push_back(pp("-bx0*bx1^3*by0", f, vars));
    m.forms.push_back(pp("-bx1*by1", f, vars));
    m.forms.push_back(pp("-bx0^2*bx1^2*by0", f, vars));
    m.forms.push_back(pp("bx0^4*by0", f, vars));
    m.forms.push_back(pp("bx0*by1 + bx1^4*by0", f, vars));
    return m;
}

// --- the genus-12 family in the quintic-form presentation -------------------

inline Hypersurface kp_quadric() {
    CoeffField f = CoeffField::Q_of("u");
    auto vars = kp_vars();
    return Hypersurface{vars, pp("(u)*x*w - (u)*z^2 + z^2 - y*t", f, vars)};
}

inline WeightVector kp_weights() {
    return WeightVector{{0, 1, 3, 5, 6}, "lambda.[x:y:z:t:w] = [x:l y:l^3 z:l^5 t:l^6 w]"};
}

/// The invariant sextic [s0^6 : s0^5 s1 : s0^3 s1^3 : s0 s1^5 : s1^6].
inline ParametrizedCurve lambda_curve() {
    CoeffField f = CoeffField::Q_of("u");
    std::vector<std::string> sv{"s0", "s1"};
    ParametrizedCurve c{{"s0", "s1"}, {}};
    for (int k : {0, 1, 3, 5, 6})
        c.forms.push_back(MultiPoly::monomial(f, sv, FieldElem::one(f), {6 - k, k}));
    return c;
}

inline MultiPoly kp_f() { return pp("x*w - y*t", CoeffField::Q_of("u"), kp_vars()); }

inline std::map<int, MultiPoly> kp_h_polys() {
    CoeffField f = CoeffField::Q_of("u");
    auto v = kp_vars();
    MultiPoly ff = kp_f();
    std::map<int, MultiPoly> h;
    h[3] = pp("y^3 - x^2*z", f, v);
    h[5] = pp("x^2*t - y^2*z", f, v);
    h[6] = pp("x", f, v) * ff;
    h[7] = pp("y", f, v) * ff;
    h[8] = pp("y^2*w - x*z*t", f, v);
    h[9] = pp("z", f, v) * ff;
    h[10] = pp("x*t^2 - y*z*w", f, v);
    h[11] = pp("t", f, v) * ff;
    h[12] = pp("w", f, v) * ff;
    h[13] = pp("y*w^2 - z*t^2", f, v);
    h[15] = pp("t^3 - z*w^2", f, v);
    return h;
}

inline std::map<int, MultiPoly> kp_sporadic_g() {
    CoeffField f = CoeffField::Q_of("u");
    auto v = kp_vars();
    std::map<int, MultiPoly> g;
    g[10] = pp("(u-1)*x^2*y*z*w - 3*x*y^2*z*t + (-u+2)*x*y*z^3 + y^4*w + x^3*t^2", f, v);
    g[15] = pp("(u-1)*x^2*t^3 + (u-1)*y^3*w^2 + (-u-4)*y^2*z*t^2 + (3*u+2)*x*y*z*t*w + (-4*u+4)*y*z^3*t",
               f, v);
    g[20] = pp("(u-1)*x*z*t*w^2 - 3*y*z*t^2*w + (-u+2)*z^3*t*w + x*t^4 + y^2*w^3", f, v);
    return g;
}

/// [(1-u)/u h13 : h12 : h11 : h10 : h9], the composite onto the first quadric.
inline MapByForms mu1_mu0() {
    CoeffField f = CoeffField::Q_of("u");
    auto h = kp_h_polys();
    FieldElem u = FieldElem::param(f, "u");
    FieldElem c = (FieldElem::one(f) - u) / u;
    MapByForms m{kp_vars(), {h[13].scaled(c), h[12], h[11], h[10], h[9]}};
    return m;
}

/// x1x3 - x2^2 + u/(u-1)(x2^2 - x0x4), the target quadric of the composite.
inline Hypersurface kp_target_quadric() {
    CoeffField f = CoeffField::Q_of("u");
    auto vars = p4_vars();
    return Hypersurface{
        vars, pp("x1*x3 - x2^2 + (u)/(u-1)*x2^2 - (u)/(u-1)*x0*x4", f, vars)};
}

}  // namespace geom

// ---------------------------------------------------------------------------
// Suite: membership and weights of the explicit curves (g = 12 family).
// ---------------------------------------------------------------------------

inline VerificationReport book_curve_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    Hypersurface Q = geom::book_quadric(f);
    ParametrizedCurve G = geom::gamma_curve(f);
    ParametrizedCurve C = geom::cq_curve(f);
    rep.check("book.gamma_on_quadric", "x1x3 - qx0x4 + (q-1)x2^2 = 0 contains the quartic",
              curve_on_hypersurface(G, Q));
    rep.check("book.cq_on_quadric", "(1-q)u0^2u1^4 - 0 + (q-1)u0^2u1^4 = 0",
              curve_on_hypersurface(C, Q));
    Hypersurface x4_hyperplane{geom::p4_vars(),
                               MultiPoly::variable(f, geom::p4_vars(), "x4")};
    rep.check("book.gamma_not_in_hyperplane", "t1^4 does not vanish identically",
              !curve_on_hypersurface(G, x4_hyperplane));
    auto wq = equivariance_weight(Q.equation, geom::book_weights());
    rep.check("book.quadric_weight", "all monomials of the quadric have weight 4",
              wq.has_value() && *wq == 4, wq ? std::to_string(*wq) : "none", "4");
    MultiPoly mixed = MultiPoly::variable(f, geom::p4_vars(), "x0") +
                      MultiPoly::variable(f, geom::p4_vars(), "x1");
    rep.check("book.mixed_weight", "x0 + x1 is not semi-invariant",
              !equivariance_weight(mixed, geom::book_weights()).has_value());
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: local lengths of the invariant cubic against the quartic (gm.length).
// ---------------------------------------------------------------------------

inline VerificationReport gm_length_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);

    // Ideal generators of the cubic in the affine chart x0 = 1, with the
    // orbit parameters a1, a2 symbolic.
    std::vector<std::string> xv{"x1", "x2", "x3", "x4", "a1", "a2"};
    auto X = [&](const std::string& n) { return MultiPoly::variable(f, xv, n); };
    MultiPoly a1 = X("a1"), a2 = X("a2");
    std::vector<MultiPoly> ideal = {
        X("x4"), a1 * a1 * X("x2") - a2 * X("x1") * X("x1"),
        a1 * a1 * X("x3") - (a2 * X("x1") * X("x2")).scaled(one - q),
        X("x1") * X("x3") - (X("x2") * X("x2")).scaled(one - q)};

    // Push through x_i -> t^i.
    std::vector<std::string> tv{"t", "a1", "a2"};
    auto T = [&](int k) {
        return MultiPoly::monomial(f, tv, FieldElem::one(f), {k, 0, 0});
    };
    std::vector<MultiPoly> images = {T(1), T(2), T(3), T(4),
                                     MultiPoly::variable(f, tv, "a1"),
                                     MultiPoly::variable(f, tv, "a2")};
    std::vector<MultiPoly> pushed;
    for (const auto& g : ideal) pushed.push_back(g.substitute(images));

    // The displayed generator list (t^4, (a1^2-a2)t^2, (a1^2-(1-q))t^3, q t^4).
    auto A1 = MultiPoly::variable(f, tv, "a1");
    auto A2 = MultiPoly::variable(f, tv, "a2");
    std::vector<MultiPoly> displayed = {
        T(4), (A1 * A1 - A2) * T(2),
        (A1 * A1 - MultiPoly::constant(f, tv, one - q)) * T(3), T(4).scaled(q)};

    rep.check("gm.length.push.x4", "x4 -> t^4", pushed[0] == displayed[0],
              pushed[0].to_string(), displayed[0].to_string());
    rep.check("gm.length.push.gen2", "a1^2 x2 - a2 x1^2 -> (a1^2 - a2) t^2",
              pushed[1] == displayed[1], pushed[1].to_string(), displayed[1].to_string());
    rep.check("gm.length.push.gen4", "x1x3 - (1-q)x2^2 -> q t^4", pushed[3] == displayed[3],
              pushed[3].to_string(), displayed[3].to_string());

    // Order in t of a polynomial with symbolic a's: the least t-power whose
    // coefficient is a nonzero polynomial.
    auto ord_t = [&](const MultiPoly& p) -> VanishingOrder {
        if (p.is_zero()) return VanishingOrder::infinite();
        return VanishingOrder::finite(static_cast<unsigned>(p.min_degree_in("t")));
    };
    auto min_ord = [&](const std::vector<MultiPoly>& gens) {
        VanishingOrder best = VanishingOrder::infinite();
        for (const auto& g : gens) {
            VanishingOrder o = ord_t(g);
            if (o < best) best = o;
        }
        return best;
    };

    rep.check("gm.length.generic", "generic orbit parameters give length 2",
              min_ord(displayed) == VanishingOrder::finite(2),
              min_ord(displayed).to_string(), "2");

    std::vector<MultiPoly> special;
    for (const auto& g : displayed) special.push_back(g.substitute({
        MultiPoly::variable(f, tv, "t"), MultiPoly::variable(f, tv, "a1"),
        A1 * A1 }));  // a2 -> a1^2
    rep.check("gm.length.square", "a2 = a1^2 forces length 3",
              min_ord(special) == VanishingOrder::finite(3), min_ord(special).to_string(), "3");

    // Fully specialized degenerate stratum a1^2 = 1-q, a2 = a1^2: the list
    // becomes (t^4, 0, 0, q t^4) and the local length is computed by the
    // univariate operation itself.
    std::vector<UniPoly> strata = {
        UniPoly::monomial(f, "t", FieldElem::one(f), 4), UniPoly::zero(f, "t"),
        UniPoly::zero(f, "t"), UniPoly::monomial(f, "t", q, 4)};
    rep.check("gm.length.degenerate",
              "a1^2 = 1-q on the square locus leaves only the t^4 generators",
              local_ideal_length(strata, FieldElem::zero(f)) == VanishingOrder::finite(4),
              local_ideal_length(strata, FieldElem::zero(f)).to_string(), "4");

    // The quartic and the cubic meet only at [1:0:0:0:0].
    ParametrizedCurve G = geom::gamma_curve(f);
    ParametrizedCurve C = geom::cq_curve(f);
    bool c_in_x4 = C.forms[4].is_zero();
    // the last coordinate of the quartic is t1^4: its only root is t1 = 0
    const MultiPoly& last = G.forms[4];
    bool last_monomial = last.terms().size() == 1 &&
                         last.terms().begin()->first == ExpVec{0, 4};
    bool same_point = true;
    for (int k = 1; k <= 4; ++k)
        same_point &= G.forms[k].with_var_set("t1", FieldElem::zero(f)).is_zero() &&
                      C.forms[k].with_var_set("u1", FieldElem::zero(f)).is_zero();
    rep.check("gm.length.support",
              "the quartic meets the cubic only at the weight-0 fixed point",
              c_in_x4 && last_monomial && same_point);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: the two invariant lines on the quadric (gm.flop_lines).
// ---------------------------------------------------------------------------

inline VerificationReport line_checks_gm_flop() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    Hypersurface Q = geom::book_quadric(f);
    std::vector<std::string> pv{"p0", "p1"};
    auto zero = MultiPoly::zero(f, pv);
    auto P0 = MultiPoly::variable(f, pv, "p0");
    auto P1 = MultiPoly::variable(f, pv, "p1");

    // x0 = x1 = x2 = 0
    ParametrizedCurve line1{{"p0", "p1"}, {zero, zero, zero, P0, P1}};
    rep.check("gm.flop.line1_on_quadric", "the line x0 = x1 = x2 = 0 lies on the quadric",
              curve_on_hypersurface(line1, Q));
    // x1 = x2 = x4 = 0
    ParametrizedCurve line2{{"p0", "p1"}, {P0, zero, zero, P1, zero}};
    rep.check("gm.flop.line2_on_quadric", "the line x1 = x2 = x4 = 0 lies on the quadric",
              curve_on_hypersurface(line2, Q));

    auto w = geom::book_weights().weights;
    rep.check("gm.flop.line1_invariant", "spanned by coordinate axes of weights 3 and 4",
              w[3] != w[4], std::to_string(w[3]) + "," + std::to_string(w[4]));
    rep.check("gm.flop.line2_invariant", "spanned by coordinate axes of weights 0 and 3",
              w[0] != w[3], std::to_string(w[0]) + "," + std::to_string(w[3]));

    // length of the cubic against the line x1 = x2 = x4 = 0: the pulled-back
    // linear forms are u0^2 u1, u0 u1^2 and 0.
    ParametrizedCurve C = geom::cq_curve(f);
    auto to_uni = [&](const MultiPoly& m, const std::string& kept) {
        UniPoly u = UniPoly::zero(f, kept);
        std::size_t idx = m.var_index(kept);
        for (const auto& [e, c] : m.terms())
            u = u + UniPoly::monomial(f, kept, c, static_cast<unsigned>(e[idx]));
        return u;
    };
    std::vector<UniPoly> at_10, at_01;
    bool monomials = true;
    for (int k : {1, 2, 4}) {
        const MultiPoly& pulled = C.forms[k];
        monomials &= pulled.is_zero() || pulled.terms().size() == 1;
        at_10.push_back(to_uni(pulled.with_var_set("u0", FieldElem::one(f)), "u1"));
        at_01.push_back(to_uni(pulled.with_var_set("u1", FieldElem::one(f)), "u0"));
    }
    VanishingOrder l10 = local_ideal_length(at_10, FieldElem::zero(f));
    VanishingOrder l01 = local_ideal_length(at_01, FieldElem::zero(f));
    bool total_two = monomials && l10 == VanishingOrder::finite(1) &&
                     l01 == VanishingOrder::finite(1);
    rep.check("gm.flop.length_two",
              "length 1 at each torus-fixed parameter, total intersection length 2", total_two,
              l10.to_string() + " + " + l01.to_string(), "1 + 1");
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: the involutions over Q(s), q = s^2 (mumu2.involutions).
// ---------------------------------------------------------------------------

inline VerificationReport involution_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_s();
    Hypersurface Q = geom::book_quadric(f);
    ParametrizedCurve G = geom::gamma_curve(f);
    ParametrizedCurve C = geom::cq_curve(f);
    MapByForms rev = geom::coordinate_reversal(f);
    MapByForms inv = geom::quadric_involution();

    // (i) the reversal fixes the quadric
    MultiPoly pulled = Q.equation.substitute(rev.forms);
    rep.check("mumu2.inv.reversal_fixes_quadric", "x1x3 and x0x4 are symmetric under reversal",
              pulled == Q.equation, pulled.to_string(), Q.equation.to_string());

    // (ii) the reversal carries the quartic to itself (parameter swap)
    rep.check("mumu2.inv.reversal_fixes_gamma", "reversal acts as the parameter swap",
              image_curve_match(rev, G, G, true));

    // (iii) the five quadrics map the generic point of Q back onto Q
    rep.check("mumu2.inv.involution_preserves_quadric",
              "the quadratic involution is birational on the quadric",
              map_image_on_hypersurface(inv, Q, "x3", Q));

    // (iv) applied twice it fixes the generic point projectively
    {
        GenericPoint p = generic_point(Q, "x3");
        std::vector<MultiPoly> v1 = inv.apply(p.coords);
        std::vector<MultiPoly> v2 = inv.apply(v1);
        bool ok = true, nonzero = false;
        for (const auto& g : v2) nonzero |= !g.is_zero();
        for (std::size_t i = 0; i < v2.size() && ok; ++i)
            for (std::size_t j = i + 1; j < v2.size() && ok; ++j)
                ok = (v2[i] * p.coords[j] - v2[j] * p.coords[i]).is_zero();
        rep.check("mumu2.inv.involution_squared", "a birational involution squares to the identity",
                  ok && nonzero);
    }

    // (v) the composite carries the invariant cubic to itself projectively
    {
        std::vector<MultiPoly> reversed;
        for (int k = 4; k >= 0; --k) reversed.push_back(C.forms[k]);
        ParametrizedCurve c_rev{C.params, reversed};
        rep.check("mumu2.inv.composite_fixes_cubic",
                  "the composite involution preserves the invariant cubic",
                  image_curve_match(inv, c_rev, C, true));
        // the literal image of the quartic under the five quadrics is zero:
        // the quartic is their common zero locus, so that check is degenerate
        std::vector<MultiPoly> on_gamma = inv.apply(G.forms);
        bool all_zero = true;
        for (const auto& g : on_gamma) all_zero &= g.is_zero();
        if (all_zero)
            rep.skip("mumu2.inv.quartic_literal",
                     "the five quadrics vanish on the quartic; certified via the composite instead",
                     "zero image");
        else
            rep.check("mumu2.inv.quartic_literal", "unexpected nonzero image", false);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: the stabilizer computation in the symmetric power (mumu2.stabilizer).
// ---------------------------------------------------------------------------

inline VerificationReport stabilizer_constraints() {
    VerificationReport rep;

    // Part 1: over Q with (a,b,c,d) symbolic, the image of [1:0:0:0:0]
    // is the first column (a^4, a^3c, a^2c^2, ac^3, c^4); fixing the point
    // forces c = 0.
    {
        CoeffField f = CoeffField::Q();
        std::vector<std::string> vars{"a", "b", "c", "d"};
        auto V = [&](const std::string& n) { return MultiPoly::variable(f, vars, n); };
        auto scalar = [&](long k) { return MultiPoly::constant(f, vars, FieldElem(f, Rational(k))); };
        auto m = sym4_entries<MultiPoly>(V("a"), V("b"), V("c"), V("d"), scalar);
        std::vector<MultiPoly> col0;
        for (int i = 0; i <= 4; ++i) col0.push_back(m[i][0]);
        bool expected = col0[0] == V("a").pow(4) && col0[1] == V("a").pow(3) * V("c") &&
                        col0[2] == V("a").pow(2) * V("c").pow(2) &&
                        col0[3] == V("a") * V("c").pow(3) && col0[4] == V("c").pow(4);
        bool c_divides = true, nonzero = true;
        for (int i = 1; i <= 4; ++i) {
            c_divides &= col0[i].with_var_set("c", FieldElem::zero(f)).is_zero();
            nonzero &= !col0[i].is_zero();
        }
        rep.check("mumu2.stab.c_zero",
                  "theta(p_{x0}) = [a^4 : a^3c : a^2c^2 : ac^3 : c^4] fixes p_{x0} iff c = 0",
                  expected && c_divides && nonzero);
    }

    // Part 2: with c = 0 and d = 1/a (cleared projectively to the Borel form
    // (a^2, ab, 0, 1)), the image of the cubic satisfies its ideal iff b = 0.
    {
        CoeffField f = CoeffField::Q_of("q");
        FieldElem q = FieldElem::param(f, "q");
        FieldElem one = FieldElem::one(f);
        std::vector<std::string> vars{"u0", "u1", "a", "b"};
        auto V = [&](const std::string& n) { return MultiPoly::variable(f, vars, n); };
        auto scalar = [&](long k) { return MultiPoly::constant(f, vars, FieldElem(f, Rational(k))); };
        auto m = sym4_entries<MultiPoly>(V("a") * V("a"), V("a") * V("b"),
                                         MultiPoly::zero(f, vars), scalar(1), scalar);
        // the cubic's coordinates
        std::vector<MultiPoly> x = {V("u0").pow(3), V("u0").pow(2) * V("u1"),
                                    V("u0") * V("u1").pow(2),
                                    V("u1").pow(3).scaled(one - q), MultiPoly::zero(f, vars)};
        std::vector<MultiPoly> y(5, MultiPoly::zero(f, vars));
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) y[i] = y[i] + m[i][j] * x[j];
        // ideal generators of the cubic
        std::vector<MultiPoly> gens = {
            y[4], y[0] * y[2] - y[1] * y[1], y[1] * y[3] - (y[2] * y[2]).scaled(one - q),
            y[0] * y[3] - (y[1] * y[2]).scaled(one - q)};
        bool vanish_at_b0 = true;
        bool some_obstruction = false;
        for (const auto& g : gens) {
            vanish_at_b0 &= g.with_var_set("b", FieldElem::zero(f)).is_zero();
            some_obstruction |= !g.is_zero();
        }
        rep.check("mumu2.stab.b_zero_sufficient",
                  "at b = 0 every ideal generator vanishes identically", vanish_at_b0);
        rep.check("mumu2.stab.b_zero_necessary",
                  "some generator is a nonzero polynomial with b dividing it",
                  some_obstruction);
    }

    // Part 3: the identity matrix fixes everything.
    {
        CoeffField f = CoeffField::Q();
        FieldElem one = FieldElem::one(f), zero = FieldElem::zero(f);
        auto m = sym4_matrix(one, zero, zero, one);
        bool id = true;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) id &= m[i][j] == (i == j ? one : zero);
        rep.check("mumu2.stab.identity", "the identity acts trivially", id);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suites: the double-projection image in P^6 (fujita.*).
// ---------------------------------------------------------------------------

inline VerificationReport fujita_v1_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    Hypersurface Q = geom::book_quadric(f);
    MapByForms seven = geom::fujita_forms();
    auto quadrics = geom::v1_quadrics();
    static const char* names[] = {"z4z5-z0z2+z1^2", "z4z6-z1z3+z2^2", "z4^2-z0z3+z1z2",
                                  "z1z4-z0z6-z2z5", "z2z4-z3z5-z1z6"};
    for (std::size_t k = 0; k < quadrics.size(); ++k)
        rep.check("fujita.v1.quadrics." + std::to_string(k), names[k],
                  map_image_on_hypersurface(seven, Q, "x3", quadrics[k]));
    return rep;
}

inline VerificationReport fujita_gamma1_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    ParametrizedCurve G = geom::gamma_curve(f);
    ParametrizedCurve G1 = geom::gamma1_curve();
    std::vector<MultiPoly> cleared =
        detail::clear_common_factors(geom::fujita_forms().apply(G.forms));
    rep.check("fujita.gamma1.match",
              "the quartic maps onto the displayed quintic parametrization",
              image_curve_match(geom::fujita_forms(), G, G1, false), "", "",
              geom::bracket(cleared));
    bool on_v1 = true;
    for (const auto& q : geom::v1_quadrics())
        on_v1 &= q.equation.substitute(G1.forms).is_zero();
    rep.check("fujita.gamma1.on_v1", "the image curve satisfies the five quadrics", on_v1);
    rep.check("fujita.gamma1.z0", "the image curve lies in z0 = 0", G1.forms[0].is_zero());
    return rep;
}

inline VerificationReport upsilon_match_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("q");
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);
    MapByForms nu = geom::f3_normalization();

    // nu lands on the five quadrics and on z0 = 0
    {
        bool ok = true;
        for (const auto& quad : geom::v1_quadrics())
            ok &= quad.equation.substitute(nu.forms).is_zero();
        rep.check("fujita.upsilon.nu_on_v1", "the normalization lands on the quintic threefold",
                  ok && nu.forms[0].is_zero());
    }

    // restrict to the curve v bx0 by1 + bx1^4 by0 = 0 via (by0, by1) =
    // (-v bx0, bx1^4), with v symbolic
    std::vector<std::string> uv{"u0", "u1", "v"};
    auto U0 = MultiPoly::variable(f, uv, "u0");
    auto U1 = MultiPoly::variable(f, uv, "u1");
    auto VV = MultiPoly::variable(f, uv, "v");
    std::vector<MultiPoly> restriction = {U0, U1, -(VV * U0), U1.pow(4)};
    std::vector<MultiPoly> image;
    for (const auto& g : nu.forms) image.push_back(g.substitute(restriction));

    // frozen display of the restricted image
    std::vector<MultiPoly> displayed = {
        MultiPoly::zero(f, uv),
        -(VV * U0.pow(4) * U1),
        VV * U0.pow(2) * U1.pow(3),
        -U1.pow(5),
        VV * U0.pow(3) * U1.pow(2),
        -(VV * U0.pow(5)),
        U0 * U1.pow(4) - VV * U0 * U1.pow(4)};
    bool display_ok = image.size() == displayed.size();
    for (std::size_t i = 0; display_ok && i < image.size(); ++i)
        display_ok = image[i] == displayed[i];
    rep.check("fujita.upsilon.display", "[0 : -vu0^4u1 : vu0^2u1^3 : -u1^5 : vu0^3u1^2 : -vu0^5 : (1-v)u0u1^4]",
              display_ok, "", "", geom::bracket(image));

    // cross products against the quintic parametrization: all vanish exactly
    // at v = (q-1)/q, and not identically in v
    ParametrizedCurve G1 = geom::gamma1_curve();
    std::vector<MultiPoly> target;
    for (const auto& g : G1.forms) {
        MultiPoly lifted = MultiPoly::zero(f, uv);
        for (const auto& [e, c] : g.terms()) lifted.add_term({e[0], e[1], 0}, c);
        target.push_back(lifted);
    }
    FieldElem v_special = (q - one) / q;
    bool vanish_at_special = true;
    bool some_nonzero = false;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            MultiPoly cross = image[i] * target[j] - image[j] * target[i];
            if (!cross.with_var_set("v", v_special).is_zero()) vanish_at_special = false;
            if (!cross.is_zero()) some_nonzero = true;
        }
    rep.check("fujita.upsilon.match_at_special", "the pullback matches exactly at v = (q-1)/q",
              vanish_at_special);
    rep.check("fujita.upsilon.mismatch_generic",
              "with v symbolic the difference is a nonzero function-field element", some_nonzero);
    return rep;
}

// ---------------------------------------------------------------------------
// Suites: the quintic-form system (kp.*).
// ---------------------------------------------------------------------------

inline VerificationReport kp_polynomial_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("u");
    Hypersurface Q = geom::kp_quadric();
    ParametrizedCurve L = geom::lambda_curve();
    rep.check("kp.lambda.on_quadric", "u(xw - z^2) + (z^2 - yt) vanishes on the sextic",
              curve_on_hypersurface(L, Q));

    auto h = geom::kp_h_polys();
    auto g = geom::kp_sporadic_g();
    MultiPoly ff = geom::kp_f();
    WeightVector w = geom::kp_weights();

    auto wf = equivariance_weight(ff, w);
    rep.check("kp.weights.f", "xw - yt has weight 6", wf && *wf == 6,
              wf ? std::to_string(*wf) : "none", "6");
    bool hw = true;
    for (const auto& [j, hj] : h) {
        auto ww = equivariance_weight(hj, w);
        hw &= ww.has_value() && *ww == j;
    }
    rep.check("kp.weights.h", "each h_j is semi-invariant of weight j", hw);
    bool gw = true;
    for (const auto& [k, gk] : g) {
        auto ww = equivariance_weight(gk, w);
        gw &= ww.has_value() && *ww == k;
    }
    rep.check("kp.weights.g", "the sporadic quintics have weights 10, 15, 20", gw);

    // vanishing on the sextic
    bool vanish = ff.substitute(L.forms).is_zero();
    for (const auto& [j, hj] : h) vanish &= hj.substitute(L.forms).is_zero();
    for (const auto& [k, gk] : g) vanish &= gk.substitute(L.forms).is_zero();
    rep.check("kp.lambda.h_and_g_vanish", "every listed polynomial vanishes on the sextic",
              vanish);

    // the product identities g_{j+6} = f h_j; the j = 3 case frozen explicitly
    MultiPoly g9 = ff * h[3];
    MultiPoly g9_expanded =
        geom::pp("x*y^3*w - x^3*z*w - y^4*t + x^2*y*z*t", f, geom::kp_vars());
    rep.check("kp.identity.g9", "g_9 := f h_3 expands to xy^3w - x^3zw - y^4t + x^2yzt",
              g9 == g9_expanded, g9.to_string(), g9_expanded.to_string());
    MultiPoly zf = geom::pp("z", f, geom::kp_vars()) * ff;
    rep.check("kp.identity.g9_not_zf", "g_9 differs from z f (= h_9's product)", !(g9 == zf));
    bool products = true;
    for (const auto& [j, hj] : h) {
        auto wjk = equivariance_weight(ff * hj, w);
        products &= wjk.has_value() && *wjk == j + 6;
    }
    rep.check("kp.identity.products", "g_{j+6} := f h_j is semi-invariant of weight j+6",
              products);
    return rep;
}

inline VerificationReport kp_map_suite() {
    VerificationReport rep;
    CoeffField f = CoeffField::Q_of("u");
    Hypersurface Q = geom::kp_quadric();
    MapByForms m = geom::mu1_mu0();
    Hypersurface target = geom::kp_target_quadric();
    rep.check("kp.mu1mu0.quadric",
              "the image satisfies x1x3 - x2^2 + u/(u-1)(x2^2 - x0x4) = 0",
              map_image_on_hypersurface(m, Q, "y", target, std::string("t")));

    // the surface h15 = 0 maps onto the twisted quartic
    std::vector<std::string> sv{"x", "w"};
    auto X = MultiPoly::variable(f, sv, "x");
    auto W = MultiPoly::variable(f, sv, "w");
    FieldElem u = FieldElem::param(f, "u");
    FieldElem one = FieldElem::one(f);
    std::vector<MultiPoly> P = {X * W.pow(4),
                                (X * W.pow(5)).scaled(u) + MultiPoly::constant(f, sv, one - u),
                                W.pow(2), W.pow(4), W.pow(5)};
    bool on_q = Q.equation.substitute(P).is_zero();
    auto h = geom::kp_h_polys();
    bool on_h15 = h[15].substitute(P).is_zero();
    rep.check("kp.twisted_quartic.surface_point",
              "[xw^4 : uxw^5 + (1-u) : w^2 : w^4 : w^5] lies on the quadric and on h15 = 0",
              on_q && on_h15);
    std::vector<MultiPoly> image = m.apply(P);
    std::vector<MultiPoly> T = {W.pow(4), W.pow(3), W.pow(2), W,
                                MultiPoly::constant(f, sv, one)};
    bool cross_ok = true, nonzero = false;
    for (const auto& g2 : image) nonzero |= !g2.is_zero();
    for (std::size_t i = 0; i < image.size() && cross_ok; ++i)
        for (std::size_t j = i + 1; j < image.size() && cross_ok; ++j)
            cross_ok = (image[i] * T[j] - image[j] * T[i]).is_zero();
    // witness: the common factor (xw^5 - 1) clears from the last coordinate
    std::string witness;
    MultiPoly factor = X * W.pow(5) - MultiPoly::constant(f, sv, one);
    if (auto quo = image[4].exact_divide(factor)) witness = quo->to_string();
    rep.check("kp.twisted_quartic.image",
              "the dominant image closure is [w^4 : w^3 : w^2 : w : 1]", cross_ok && nonzero,
              "", "", witness);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: the parameter correspondences (param.relations).
// ---------------------------------------------------------------------------

inline VerificationReport parameter_relations() {
    VerificationReport rep;
    CoeffField fv = CoeffField::Q_of("v");
    FieldElem v = FieldElem::param(fv, "v");
    FieldElem one = FieldElem::one(fv);
    FieldElem q_of_v = one / (one - v);
    FieldElem u_of_v = q_of_v / (q_of_v - one);

    CoeffField fq = CoeffField::Q_of("q");
    FieldElem q = FieldElem::param(fq, "q");
    FieldElem oneq = FieldElem::one(fq);
    FieldElem u_of_q = q / (q - oneq);
    FieldElem back = u_of_q / (u_of_q - oneq);  // q = u/(u-1) inverts u = q/(q-1)
    rep.check("param.relations.identities",
              "q = 1/(1-v), u = q/(q-1) compose to u = 1/v; q = u/(u-1) inverts",
              u_of_v == one / v && back == q, u_of_v.to_string(), (one / v).to_string());

    Rational qv = q_of_v.eval(Rational(-4));
    Rational uv = u_of_v.eval(Rational(-4));
    rep.check("param.relations.special_q", "v = -4 gives q = 1/5", qv == Rational(1, 5),
              rat_to_string(qv), "1/5");
    rep.check("param.relations.special_u", "v = -4 gives u = -1/4", uv == Rational(-1, 4),
              rat_to_string(uv), "-1/4");
    return rep;
}

}  // namespace fanolink

#endif
