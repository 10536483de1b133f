#ifndef FANOLINK_CURVES_HPP
#define FANOLINK_CURVES_HPP

#include <fanolink/multipoly.hpp>
#include <fanolink/unipoly.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fanolink {

// ---------------------------------------------------------------------------
// Parametrized curves, hypersurfaces and maps given by forms.
// ---------------------------------------------------------------------------

/// Homogeneous parametrization P1 -> P^n: forms of one common degree in the
/// two parameters, not all zero.
struct ParametrizedCurve {
    std::array<std::string, 2> params;
    std::vector<MultiPoly> forms;

    int common_degree() const {
        for (const auto& f : forms)
            if (!f.is_zero()) return f.total_degree();
        throw DegeneracyError("all forms of the parametrized curve vanish");
    }
    void validate() const {
        bool any = false;
        int deg = -1;
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            any = true;
            if (!f.is_homogeneous()) throw StructuralError("curve form is not homogeneous");
            if (deg < 0) deg = f.total_degree();
            else if (deg != f.total_degree())
                throw StructuralError("curve forms have different degrees");
        }
        if (!any) throw DegeneracyError("all forms of the parametrized curve vanish");
    }
};

struct Hypersurface {
    std::vector<std::string> ambient_vars;
    MultiPoly equation;
};

struct MapByForms {
    std::vector<std::string> source_vars;
    std::vector<MultiPoly> forms;

    std::vector<MultiPoly> apply(const std::vector<MultiPoly>& point) const {
        if (point.size() != source_vars.size())
            throw StructuralError("point arity does not match the map source");
        std::vector<MultiPoly> out;
        out.reserve(forms.size());
        for (const auto& f : forms) out.push_back(f.substitute(point));
        return out;
    }
};

/// Integer weight per coordinate of a diagonal multiplicative-group action.
struct WeightVector {
    std::vector<int> weights;
    std::string scale_action;
};

/// True iff the hypersurface equation pulls back to the identically zero
/// polynomial in the curve parameters.
inline bool curve_on_hypersurface(const ParametrizedCurve& c, const Hypersurface& h) {
    if (h.ambient_vars.size() != c.forms.size())
        throw StructuralError("curve/hypersurface arity mismatch");
    c.validate();
    return h.equation.substitute(c.forms).is_zero();
}

/// The common weight of all monomials if the polynomial is semi-invariant,
/// nothing otherwise.
inline std::optional<long> equivariance_weight(const MultiPoly& f, const WeightVector& w) {
    if (w.weights.size() != f.vars().size())
        throw StructuralError("weight vector length does not match the variable list");
    std::optional<long> common;
    for (const auto& [e, c] : f.terms()) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * w.weights[i];
        if (!common) common = s;
        else if (*common != s) return std::nullopt;
    }
    return common;
}

// ---------------------------------------------------------------------------
// Generic points.
// ---------------------------------------------------------------------------

/// Coordinates of the generic point of a hypersurface solved for one variable,
/// with the common denominator cleared: polynomial coordinates in the
/// remaining variables whose substitution into the equation gives exactly 0.
/// With a chart variable the equation is first restricted to chart_var = 1.
struct GenericPoint {
    std::vector<std::string> vars;  // ambient variable list (the ring of the coords)
    std::vector<MultiPoly> coords;
};

inline GenericPoint generic_point(const Hypersurface& h, const std::string& solve_var,
                                  const std::optional<std::string>& chart_var = std::nullopt) {
    MultiPoly eq = h.equation;
    if (chart_var) eq = eq.with_var_set(*chart_var, FieldElem::one(eq.field()));
    auto [n, d] = solve_linear_variable(eq, solve_var);
    GenericPoint p;
    p.vars = h.ambient_vars;
    std::size_t solve_idx = eq.var_index(solve_var);
    for (std::size_t i = 0; i < h.ambient_vars.size(); ++i) {
        if (i == solve_idx) {
            p.coords.push_back(n);
        } else if (chart_var && h.ambient_vars[i] == *chart_var) {
            p.coords.push_back(d);
        } else {
            p.coords.push_back(
                MultiPoly::variable(eq.field(), eq.vars(), h.ambient_vars[i]) * d);
        }
    }
    // the defining post-condition, re-asserted on every constructed point
    MultiPoly back = chart_var ? h.equation.with_var_set(*chart_var, FieldElem::one(eq.field()))
                               : h.equation;
    if (!back.substitute(p.coords).is_zero())
        throw StructuralError("generic point fails to satisfy its hypersurface");
    return p;
}

/// True iff tgt's equation vanishes identically at the image of the generic
/// point of src under m.
inline bool map_image_on_hypersurface(const MapByForms& m, const Hypersurface& src,
                                      const std::string& solve_var, const Hypersurface& tgt,
                                      const std::optional<std::string>& chart_var = std::nullopt) {
    if (m.source_vars != src.ambient_vars)
        throw StructuralError("map source does not match the hypersurface");
    GenericPoint p = generic_point(src, solve_var, chart_var);
    std::vector<MultiPoly> image = m.apply(p.coords);
    bool all_zero = true;
    for (const auto& f : image) all_zero &= f.is_zero();
    if (all_zero) throw DegeneracyError("map is undefined at the generic point (zero image)");
    return tgt.equation.substitute(image).is_zero();
}

// ---------------------------------------------------------------------------
// Projective curve matching up to diagonal reparametrization.
// ---------------------------------------------------------------------------

namespace detail {

/// Clear the common monomial content and the common univariate gcd of a tuple
/// of homogeneous bivariate forms.
inline std::vector<MultiPoly> clear_common_factors(std::vector<MultiPoly> forms) {
    const CoeffField field = forms.front().field();
    const std::vector<std::string> vars = forms.front().vars();
    // monomial content over the nonzero forms
    for (const auto& v : vars) {
        int m = -1;
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            int d = f.min_degree_in(v);
            m = m < 0 ? d : std::min(m, d);
        }
        if (m > 0) {
            MultiPoly mono = MultiPoly::variable(field, vars, v).pow(m);
            for (auto& f : forms) {
                if (f.is_zero()) continue;
                auto q = f.exact_divide(mono);
                if (!q) throw StructuralError("monomial content division failed");
                f = *q;
            }
        }
    }
    // univariate gcd in the dehomogenization t = second parameter
    const std::string& p0 = vars[0];
    const std::string& p1 = vars[1];
    auto dehom = [&](const MultiPoly& f) {
        UniPoly u = UniPoly::zero(field, p1);
        for (const auto& [e, c] : f.terms())
            u = u + UniPoly::monomial(field, p1, c, static_cast<unsigned>(e[1]));
        return u;
    };
    UniPoly g = UniPoly::zero(field, p1);
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? dehom(f) : UniPoly::gcd(g, dehom(f));
    }
    if (!g.is_zero() && g.degree() > 0) {
        // divide each nonzero form by the homogenization of g to its degree
        for (auto& f : forms) {
            if (f.is_zero()) continue;
            int target_deg = f.total_degree() - g.degree();
            UniPoly q = UniPoly::zero(field, p1), r = q;
            UniPoly::divmod(dehom(f), g, q, r);
            if (!r.is_zero()) throw StructuralError("gcd clearing failed (non-exact division)");
            MultiPoly out = MultiPoly::zero(field, {p0, p1});
            for (int k = 0; k <= q.degree(); ++k) {
                FieldElem c = q.coeff(static_cast<std::size_t>(k));
                if (c.is_zero()) continue;
                out.add_term({target_deg - k, k}, c);
            }
            f = out;
        }
    }
    return forms;
}

inline std::optional<std::pair<ExpVec, FieldElem>> single_monomial(const MultiPoly& f) {
    if (f.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *f.terms().begin();
    return std::make_pair(e, c);
}

/// Diagonal-reparametrization matching of two tuples of bivariate monomial
/// forms: decide whether image_i = gamma * alpha^{a_i} beta^{b_i} * target_i
/// for scalars gamma, alpha, beta. With all degrees equal this reduces to
/// ratio_i = delta * rho^{a_i}; rho is pinned from a unit gap in the
/// exponents.
inline bool monomial_tuples_match(const std::vector<std::pair<ExpVec, FieldElem>>& image,
                                  const std::vector<std::pair<ExpVec, FieldElem>>& target) {
    std::vector<std::pair<long, FieldElem>> ratios;  // (a_i, image_c / target_c)
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i].first != target[i].first) return false;
        ratios.push_back({image[i].first[0], image[i].second / target[i].second});
    }
    if (ratios.size() <= 1) return true;
    std::sort(ratios.begin(), ratios.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::optional<FieldElem> rho;
    for (std::size_t i = 0; i + 1 < ratios.size() && !rho; ++i)
        if (ratios[i + 1].first == ratios[i].first + 1)
            rho = ratios[i + 1].second / ratios[i].second;
    if (!rho) {
        // no unit gap: fall back to requiring a single common scalar
        for (std::size_t i = 1; i < ratios.size(); ++i)
            if (!(ratios[i].second == ratios[0].second)) return false;
        return true;
    }
    FieldElem delta = ratios[0].second / rho->pow(ratios[0].first);
    for (const auto& [a, r] : ratios)
        if (!(r == delta * rho->pow(a))) return false;
    return true;
}

}  // namespace detail

/// Compose the map with the curve, clear common factors, and decide projective
/// equality with the target up to a reparametrization (p0,p1) -> (alpha p0,
/// beta p1), optionally composed with the parameter swap.
inline bool image_curve_match(const MapByForms& m, const ParametrizedCurve& c,
                              const ParametrizedCurve& target, bool allow_swap = true) {
    if (m.source_vars.size() != c.forms.size())
        throw StructuralError("map source arity does not match the curve");
    c.validate();
    target.validate();
    std::vector<MultiPoly> image = m.apply(c.forms);
    bool any = false;
    for (const auto& f : image) any |= !f.is_zero();
    if (!any) throw DegeneracyError("zero image: the map is undefined along the curve");
    if (image.size() != target.forms.size()) return false;
    image = detail::clear_common_factors(std::move(image));

    // target forms rebuilt positionally over the image's parameter ring
    const CoeffField field = image.front().field();
    const std::vector<std::string> ring = image.front().vars();
    auto to_image_ring = [&](const MultiPoly& f, bool swapped) {
        MultiPoly out = MultiPoly::zero(field, ring);
        for (const auto& [e, k] : f.terms())
            out.add_term(swapped ? ExpVec{e[1], e[0]} : e, k);
        return out;
    };

    auto try_match = [&](bool swapped) {
        std::vector<std::pair<ExpVec, FieldElem>> im, tg;
        for (std::size_t i = 0; i < image.size(); ++i) {
            MultiPoly tform = to_image_ring(target.forms[i], swapped);
            if (image[i].is_zero() != tform.is_zero()) return false;
            if (image[i].is_zero()) continue;
            auto mi = detail::single_monomial(image[i]);
            auto ti = detail::single_monomial(tform);
            if (!mi || !ti) {
                // general forms: require equality up to one common scalar via
                // cross products
                for (std::size_t j = 0; j < image.size(); ++j) {
                    MultiPoly tj = to_image_ring(target.forms[j], swapped);
                    if (!(image[i] * tj - image[j] * tform).is_zero()) return false;
                }
                continue;
            }
            im.push_back(*mi);
            tg.push_back(*ti);
        }
        return detail::monomial_tuples_match(im, tg);
    };
    if (try_match(false)) return true;
    return allow_swap && try_match(true);
}

// ---------------------------------------------------------------------------
// The degree-4 symmetric power of a 2x2 matrix.
// ---------------------------------------------------------------------------

namespace detail {
inline long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace detail

/// Entries of the symmetric-power action on binary quartics for a matrix
/// [[a,b],[c,d]]: row i consists of the coefficients of
/// (a t0 + b t1)^{4-i} (c t0 + d t1)^i.
template <class T, class Scalar>
std::array<std::array<T, 5>, 5> sym4_entries(const T& a, const T& b, const T& c, const T& d,
                                             Scalar scalar) {
    std::array<std::array<T, 5>, 5> m{};
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            // coefficient of t0^{4-j} t1^{j}
            T acc = scalar(0);
            for (int k1 = 0; k1 <= 4 - i; ++k1) {
                int k2 = (4 - j) - k1;
                if (k2 < 0 || k2 > i) continue;
                long coef = detail::binom(4 - i, k1) * detail::binom(i, k2);
                T term = scalar(coef);
                for (int e = 0; e < k1; ++e) term = term * a;
                for (int e = 0; e < (4 - i) - k1; ++e) term = term * b;
                for (int e = 0; e < k2; ++e) term = term * c;
                for (int e = 0; e < i - k2; ++e) term = term * d;
                acc = acc + term;
            }
            m[i][j] = acc;
        }
    }
    return m;
}

/// The displayed 5x5 matrix of the degree-4 symmetric power action for a
/// determinant-one 2x2 matrix over a coefficient field.
inline std::array<std::array<FieldElem, 5>, 5> sym4_matrix(const FieldElem& a, const FieldElem& b,
                                                           const FieldElem& c, const FieldElem& d) {
    if (!(a * d - b * c == FieldElem::one(a.field())))
        throw ContractViolation("sym4_matrix needs ad - bc = 1");
    auto scalar = [&](long k) { return FieldElem(a.field(), Rational(k)); };
    return sym4_entries<FieldElem>(a, b, c, d, scalar);
}

inline std::array<FieldElem, 5> apply_sym4(const std::array<std::array<FieldElem, 5>, 5>& m,
                                           const std::array<FieldElem, 5>& x) {
    std::array<FieldElem, 5> out;
    for (int i = 0; i <= 4; ++i) {
        FieldElem acc = FieldElem::zero(x[0].field());
        for (int j = 0; j <= 4; ++j) acc = acc + m[i][j] * x[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace fanolink

#endif
