#ifndef FANOLINK_LATTICE_HPP
#define FANOLINK_LATTICE_HPP

#include <fanolink/rational.hpp>
#include <fanolink/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fanolink {

inline void require_genus(int g) {
    if (g != 9 && g != 10 && g != 12) throw StructuralError("unsupported genus " + std::to_string(g));
}

/// Divisor class [a0,a1,a2] in the basis (O_X(1), F1, F2) of Pic X_0.
struct DivisorClass {
    int genus = 12;
    std::array<long, 3> a{0, 0, 0};

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.genus == y.genus && x.a == y.a;
    }
    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        if (x.genus != y.genus) throw StructuralError("genus mismatch in class arithmetic");
        return {x.genus, {x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2]}};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        if (x.genus != y.genus) throw StructuralError("genus mismatch in class arithmetic");
        return {x.genus, {x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2]}};
    }
    DivisorClass scaled(long k) const { return {genus, {k * a[0], k * a[1], k * a[2]}}; }
    std::string to_string() const {
        std::ostringstream os;
        os << "[" << a[0] << "," << a[1] << "," << a[2] << "]";
        return os.str();
    }
};

/// Curve class (c0,c1,c2), dual to the divisor basis via the plain dot product.
struct CurveClass {
    int genus = 12;
    std::array<long, 3> c{0, 0, 0};

    friend bool operator==(const CurveClass& x, const CurveClass& y) {
        return x.genus == y.genus && x.c == y.c;
    }
    CurveClass negated() const { return {genus, {-c[0], -c[1], -c[2]}}; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    std::string to_string() const {
        std::ostringstream os;
        os << "(" << c[0] << "," << c[1] << "," << c[2] << ")";
        return os.str();
    }
};

/// The one bilinear contract used everywhere: <[a],(c)> = a0c0 + a1c1 + a2c2.
inline long pair(const DivisorClass& d, const CurveClass& c) {
    if (d.genus != c.genus) throw StructuralError("genus mismatch in pairing");
    return d.a[0] * c.c[0] + d.a[1] * c.c[1] + d.a[2] * c.c[2];
}

// ---------------------------------------------------------------------------
// Cubic intersection forms.
// ---------------------------------------------------------------------------

/// Symmetric rank-3 trilinear form over a labeled basis, together with the
/// anticanonical class in that basis. Houses all triple products D.D'.D''.
class CubicForm {
public:
    CubicForm(std::vector<std::string> labels, std::vector<Rational> k_class)
        : labels_(std::move(labels)), k_class_(std::move(k_class)) {
        if (labels_.empty() || labels_.size() != k_class_.size())
            throw StructuralError("cubic form needs matching labels and anticanonical class");
        std::size_t n = labels_.size();
        coeffs_.assign(n * n * n, Rational(0));
    }

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& k_class() const { return k_class_; }

    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        // full symmetry under index permutation
        std::size_t n = rank();
        std::array<std::size_t, 3> ix{i, j, k};
        std::sort(ix.begin(), ix.end());
        do {
            coeffs_[(ix[0] * n + ix[1]) * n + ix[2]] = v;
        } while (std::next_permutation(ix.begin(), ix.end()));
    }
    const Rational& get(std::size_t i, std::size_t j, std::size_t k) const {
        std::size_t n = rank();
        return coeffs_[(i * n + j) * n + k];
    }

    /// Exact trilinear evaluation.
    Rational triple(const std::vector<Rational>& x, const std::vector<Rational>& y,
                    const std::vector<Rational>& z) const {
        std::size_t n = rank();
        if (x.size() != n || y.size() != n || z.size() != n)
            throw StructuralError("class dimension does not match the cubic form");
        Rational acc(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (z[k] == 0) continue;
                    acc += x[i] * y[j] * z[k] * get(i, j, k);
                }
            }
        }
        return acc;
    }
    Rational cube(const std::vector<Rational>& x) const { return triple(x, x, x); }
    Rational k_cube() const { return cube(k_class_); }
    Rational k_squared_dot(const std::vector<Rational>& d) const {
        return triple(k_class_, k_class_, d);
    }
    Rational k_dot(const std::vector<Rational>& d, const std::vector<Rational>& e) const {
        return triple(k_class_, d, e);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["basis"] = labels_;
        nlohmann::ordered_json kc = nlohmann::ordered_json::array();
        for (const auto& v : k_class_) kc.push_back(rat_to_string(v));
        j["k_class"] = kc;
        nlohmann::ordered_json t = nlohmann::ordered_json::array();
        std::size_t n = rank();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i; k < n; ++k)
                for (std::size_t l = k; l < n; ++l) {
                    if (get(i, k, l) == 0) continue;
                    t.push_back({{"i", i}, {"j", k}, {"k", l}, {"value", rat_to_string(get(i, k, l))}});
                }
        j["tensor"] = t;
        return j;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Rational> coeffs_;  // dense symmetric storage
    std::vector<Rational> k_class_;
};

/// One blowup step: the pairing of the blown-up curve against each current
/// basis divisor plus the curve genus.
struct CurveData {
    std::vector<Rational> degrees;
    unsigned genus_of_curve = 0;
    std::string label;  // name for the new exceptional basis element
};

struct BlowupChain {
    CubicForm ambient;
    std::vector<CurveData> steps;
};

/// Extend the cubic form of `ambient` along the chain by the standard rules:
/// pullback products unchanged; (pullback)^2 . E = 0; (pullback D) . E^2 =
/// -(D . C); E^3 = 2 - 2g(C) + (K . C); the anticanonical class updates to
/// sigma^*K + E (stored as -K, so -K_new = -K_old - E).
inline CubicForm blowup_cubic_form(const BlowupChain& chain) {
    CubicForm form = chain.ambient;
    for (const auto& step : chain.steps) {
        std::size_t n = form.rank();
        if (step.degrees.size() != n)
            throw StructuralError("blowup step degree vector does not match the current basis");
        std::vector<std::string> labels = form.labels();
        labels.push_back(step.label.empty() ? "E" + std::to_string(n) : step.label);
        // -K_new = -K_old(pulled back) - E
        std::vector<Rational> kc = form.k_class();
        kc.push_back(Rational(-1));
        CubicForm next(labels, kc);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = j; k < n; ++k) next.set(i, j, k, form.get(i, j, k));
        // (pullback)^2 . E = 0 : already zero-initialized.
        for (std::size_t i = 0; i < n; ++i) next.set(i, n, n, -step.degrees[i]);
        // E^3 = 2 - 2g + (K . C), with K = -(stored anticanonical)
        Rational k_dot_c(0);
        for (std::size_t i = 0; i < n; ++i) k_dot_c += -form.k_class()[i] * step.degrees[i];
        next.set(n, n, n, Rational(2) - Rational(2) * Rational(step.genus_of_curve) + k_dot_c);
        form = next;
    }
    return form;
}

inline Rational triple_product(const CubicForm& f, const std::vector<Rational>& a,
                               const std::vector<Rational>& b, const std::vector<Rational>& c) {
    return f.triple(a, b, c);
}

/// Exact solve of the 3x3 rational system expressing `cls` in the span of the
/// three given basis classes. Throws DegeneracyError on a singular basis.
inline std::array<Rational, 3> change_of_basis(const std::array<DivisorClass, 3>& basis,
                                               const DivisorClass& cls) {
    // columns are the basis classes
    std::array<std::array<Rational, 4>, 3> m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) m[r][c] = Rational(basis[c].a[r]);
        m[r][3] = Rational(cls.a[r]);
    }
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DegeneracyError("singular basis in change_of_basis");
        std::swap(m[col], m[piv]);
        Rational p = m[col][col];
        for (int c = col; c < 4; ++c) m[col][c] /= p;
        for (int r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return {m[0][3], m[1][3], m[2][3]};
}

/// Cubic form of a conic bundle over P1 x P1 in the basis (A, B, -K) with A, B
/// the pullbacks of the two rulings: A.A.? = B.B.? = 0, A.B.(-K) = fiberDeg,
/// A.B.A = A.B.B = 0; the three K-products are transported inputs.
struct KProducts {
    Rational kkA, kkB, kkk;
};

inline CubicForm conic_bundle_cubic_form(const Rational& fiber_deg, const KProducts& kp,
                                         const std::string& a_label = "A",
                                         const std::string& b_label = "B") {
    CubicForm f({a_label, b_label, "-K"}, {Rational(0), Rational(0), Rational(1)});
    f.set(0, 1, 2, fiber_deg);
    f.set(0, 2, 2, kp.kkA);
    f.set(1, 2, 2, kp.kkB);
    f.set(2, 2, 2, kp.kkk);
    return f;
}

/// Products with a factor of -K are unchanged across any flop (flopping curves
/// are K-trivial), so values computed on one small Q-factorial modification
/// are valid on every other one.
inline std::vector<Rational> flop_transport_k_products(const CubicForm& source,
                                                       const std::vector<std::vector<Rational>>& classes) {
    std::vector<Rational> out;
    out.reserve(classes.size());
    for (const auto& d : classes) out.push_back(source.k_squared_dot(d));
    return out;
}

// ---------------------------------------------------------------------------
// Class tables.
// ---------------------------------------------------------------------------

/// Pretty label of the variety X_i maps to under the double projection.
inline std::string xx_side_name(int genus) {
    switch (genus) {
        case 12: return "V";
        case 10: return "Q";
        default: return "P3_";
    }
}
inline std::string yy_side_name(int genus) {
    switch (genus) {
        case 12: return "Q";
        case 10: return "P2_";
        default: return "P1_";
    }
}

/// Complete divisor-class table for the blowup of a genus-g prime Fano
/// threefold along a totally disjoint pair of lines, keyed by the symbols of
/// the corresponding contraction targets.
inline std::map<std::string, DivisorClass> class_table(int genus) {
    require_genus(genus);
    std::map<std::string, DivisorClass> t;
    auto put = [&](const std::string& key, long a0, long a1, long a2) {
        t[key] = DivisorClass{genus, {a0, a1, a2}};
    };
    put("O_X", 1, 0, 0);
    put("F1", 0, 1, 0);
    put("F2", 0, 0, 1);
    put("O_Xbar1", 1, -1, 0);
    put("O_Xbar2", 1, 0, -1);
    put("O_Xbar0", 1, -1, -1);
    const std::string xn = xx_side_name(genus);
    const std::string yn = yy_side_name(genus);
    put("O_" + xn + "1", 1, -2, 0);
    put("O_" + xn + "2", 1, 0, -2);
    put("O_" + yn + "1", 1, -2, -1);
    put("O_" + yn + "2", 1, -1, -2);
    switch (genus) {
        case 12:
            put("S1", 1, -3, 0);
            put("S2", 1, 0, -3);
            put("E", 1, -2, -2);
            break;
        case 10:
            put("S1", 2, -5, 0);
            put("S2", 2, 0, -5);
            put("E", 3, -5, -5);
            break;
        default:  // 9
            put("S1", 3, -7, 0);
            put("S2", 3, 0, -7);
            break;
    }
    return t;
}

inline DivisorClass table_class(int genus, const std::string& key) {
    auto t = class_table(genus);
    auto it = t.find(key);
    if (it == t.end()) throw StructuralError("no class '" + key + "' for genus " + std::to_string(genus));
    return it->second;
}
/// Role accessors independent of the per-genus symbol names.
inline DivisorClass xx_class(int genus, int i) {
    return DivisorClass{genus, {1, i == 1 ? -2 : 0, i == 1 ? 0 : -2}};
}
inline DivisorClass yy_class(int genus, int i) {
    return DivisorClass{genus, {1, i == 1 ? -2 : -1, i == 1 ? -1 : -2}};
}
inline DivisorClass xbar_class(int genus, int i) {
    return DivisorClass{genus, {1, i == 1 ? -1 : 0, i == 1 ? 0 : -1}};
}
inline DivisorClass anticanonical_class(int genus) { return DivisorClass{genus, {1, -1, -1}}; }

inline nlohmann::ordered_json class_table_json(int genus) {
    nlohmann::ordered_json j;
    j["genus"] = genus;
    nlohmann::ordered_json entries;
    for (const auto& [key, cls] : class_table(genus))
        entries[key] = {cls.a[0], cls.a[1], cls.a[2]};
    j["classes"] = entries;
    return j;
}

// ---------------------------------------------------------------------------
// Chain-built cubic forms for the varieties in the link.
// ---------------------------------------------------------------------------

/// Cubic form of X_0 in the basis (O_X, F1, F2): blow up the genus-g prime
/// Fano threefold (H^3 = 2g-2, -K = H) along two disjoint lines.
inline CubicForm x0_cubic_form(int genus) {
    require_genus(genus);
    CubicForm ambient({"O_X"}, {Rational(1)});
    ambient.set(0, 0, 0, Rational(2 * genus - 2));
    BlowupChain chain{ambient,
                      {CurveData{{Rational(1)}, 0, "F1"},
                       CurveData{{Rational(1), Rational(0)}, 0, "F2"}}};
    return blowup_cubic_form(chain);
}

/// Per-genus data of the curve Gamma_i blown up in the second step of the
/// W_i^+ chain: (degree against the pullback polarization, degree against the
/// first exceptional divisor, genus).
struct SecondStepData {
    Rational h_deg, e_deg;
    unsigned genus_of_curve;
};

inline SecondStepData wplus_gamma_data(int genus) {
    switch (genus) {
        case 12: return {Rational(5), Rational(1), 0};  // twisted quintic in V
        case 10: return {Rational(7), Rational(2), 2};  // bi-quintic side curve
        default: return {Rational(7), Rational(3), 3};  // genus-3 space curve
    }
}

/// Ambient of the W_i^+ chain: V (dP quintic, -K = 2H, H^3 = 5), the quadric
/// (-K = 3H, H^3 = 2) or P^3 (-K = 4H, H^3 = 1).
inline CubicForm wplus_ambient_form(int genus) {
    require_genus(genus);
    long h3 = genus == 12 ? 5 : genus == 10 ? 2 : 1;
    long index = genus == 12 ? 2 : genus == 10 ? 3 : 4;
    CubicForm amb({"H"}, {Rational(index)});
    amb.set(0, 0, 0, Rational(h3));
    return amb;
}

/// Cubic form of W_1^+ in the chain basis (H, F, S): blow up a line, then the
/// strict transform of Gamma_1.
inline CubicForm wplus_cubic_form(int genus) {
    CubicForm amb = wplus_ambient_form(genus);
    SecondStepData g = wplus_gamma_data(genus);
    BlowupChain chain{amb,
                      {CurveData{{Rational(1)}, 0, "F"},
                       CurveData{{g.h_deg, g.e_deg}, g.genus_of_curve, "S"}}};
    return blowup_cubic_form(chain);
}

/// Chain basis of W_1^+ expressed in [a0,a1,a2] coordinates: the pullback of
/// the double-projection polarization, F2, S1.
inline std::array<DivisorClass, 3> wplus_chain_basis(int genus) {
    return {xx_class(genus, 1), table_class(genus, "F2"), table_class(genus, "S1")};
}

/// Cubic form of X_0^+ built from the far end of the link. For g=12 the chain
/// is quadric -> blowup of a twisted quartic -> blowup of the bi-cubic curve;
/// for g=10 it is the degree-6 rank-2 del Pezzo threefold blown up along the
/// bi-quintic curve of genus 2. For g=9 there is no blowup chain (the far end
/// is a conic bundle over P1 x P1) and the conic-bundle form is used instead.
inline CubicForm x0plus_cubic_form(int genus) {
    require_genus(genus);
    if (genus == 12) {
        CubicForm q({"O_Q1"}, {Rational(3)});
        q.set(0, 0, 0, Rational(2));
        BlowupChain chain{q,
                          {CurveData{{Rational(4)}, 0, "S1"},
                           CurveData{{Rational(3), Rational(3)}, 0, "E+"}}};
        return blowup_cubic_form(chain);
    }
    if (genus == 10) {
        CubicForm u({"A", "B"}, {Rational(2), Rational(2)});
        u.set(0, 0, 1, Rational(1));
        u.set(0, 1, 1, Rational(1));
        BlowupChain chain{u, {CurveData{{Rational(5), Rational(5)}, 2, "E+"}}};
        return blowup_cubic_form(chain);
    }
    // g = 9: conic bundle over P1 x P1 with fibers of anticanonical degree 2;
    // K-products transported from the X_0 chain form.
    CubicForm x0 = x0_cubic_form(9);
    auto coords = [](const DivisorClass& d) {
        return std::vector<Rational>{Rational(d.a[0]), Rational(d.a[1]), Rational(d.a[2])};
    };
    KProducts kp{x0.k_squared_dot(coords(yy_class(9, 1))),
                 x0.k_squared_dot(coords(yy_class(9, 2))), x0.k_cube()};
    return conic_bundle_cubic_form(Rational(2), kp, "O_P1_1", "O_P1_2");
}

/// Basis of the X_0^+ form in [a0,a1,a2] coordinates.
inline std::array<DivisorClass, 3> x0plus_basis(int genus) {
    require_genus(genus);
    if (genus == 12) return {yy_class(12, 1), table_class(12, "S1"), table_class(12, "E")};
    if (genus == 10) return {yy_class(10, 1), yy_class(10, 2), table_class(10, "E")};
    return {yy_class(9, 1), yy_class(9, 2), anticanonical_class(9)};
}

/// Evaluate a [a0,a1,a2]-class on a form whose basis is given in the same
/// coordinates, by exact change of basis.
inline Rational cube_in_basis(const CubicForm& form, const std::array<DivisorClass, 3>& basis,
                              const DivisorClass& cls) {
    auto c = change_of_basis(basis, cls);
    return form.cube({c[0], c[1], c[2]});
}

// ---------------------------------------------------------------------------
// Class identities.
// ---------------------------------------------------------------------------

inline VerificationReport verify_class_identities(int genus) {
    require_genus(genus);
    VerificationReport rep;
    std::string G = std::to_string(genus);
    auto eq = [&](const std::string& id, const std::string& anchor, const DivisorClass& lhs,
                  const DivisorClass& rhs) {
        rep.check("pic.identity." + id + ".g" + G, anchor, lhs == rhs, lhs.to_string(),
                  rhs.to_string());
    };
    auto T = [&](const std::string& k) { return table_class(genus, k); };

    // Defining expansions of every table entry in terms of O_X, F1, F2.
    const DivisorClass OX = T("O_X"), F1 = T("F1"), F2 = T("F2");
    eq("def.O_Xbar1", "O_Xbar_i = O_X - F_i", T("O_Xbar1"), OX - F1);
    eq("def.O_Xbar2", "O_Xbar_i = O_X - F_i", T("O_Xbar2"), OX - F2);
    eq("def.O_Xbar0", "-K_X0 = sigma^*(-K_X) - F1 - F2", T("O_Xbar0"), OX - F1 - F2);
    eq("def.xx1", "double projection model class sigma^*(-K_X) - 2F_i", xx_class(genus, 1),
       OX - F1.scaled(2));
    eq("def.xx2", "double projection model class sigma^*(-K_X) - 2F_i", xx_class(genus, 2),
       OX - F2.scaled(2));
    eq("def.yy1", "O_YY1 ~ [1,-2,-1]", yy_class(genus, 1), OX - F1.scaled(2) - F2);
    eq("def.yy2", "O_YY2 ~ [1,-1,-2]", yy_class(genus, 2), OX - F1 - F2.scaled(2));
    if (genus == 12) {
        eq("def.S1", "S_1 ~ [1,-3,0]", T("S1"), OX - F1.scaled(3));
        eq("def.E", "strict transform of |sigma^*(-K_X)-2(F1+F2)|", T("E"),
           OX - F1.scaled(2) - F2.scaled(2));
    } else if (genus == 10) {
        eq("def.S1", "S_1 ~ [2,-5,0]", T("S1"), OX.scaled(2) - F1.scaled(5));
        eq("def.E", "strict transform of |3sigma^*(-K_X)-5(F1+F2)|", T("E"),
           OX.scaled(3) - F1.scaled(5) - F2.scaled(5));
    } else {
        eq("def.S1", "S_1 ~ [3,-7,0]", T("S1"), OX.scaled(3) - F1.scaled(7));
    }

    // The Y-side anticanonical model class is shared by all genera.
    eq("yclass", "m(sigma^*(-2K_X) - 3(F1+F2)) defines the far contraction",
       yy_class(genus, 1) + yy_class(genus, 2), DivisorClass{genus, {2, -3, -3}});

    if (genus == 12) {
        eq("type221.1", "rho_2^*O_{Q_2}(1) ~ rho_1^*O_{Q_1}(2) - S_1", T("O_Q2"),
           T("O_Q1").scaled(2) - T("S1"));
        eq("type221.2", "rho_1^*O_{Q_1}(1) ~ rho_2^*O_{Q_2}(2) - S_2", T("O_Q1"),
           T("O_Q2").scaled(2) - T("S2"));
        eq("type221.K", "-K ~ rho_1^*O_{Q_1}(1) + rho_2^*O_{Q_2}(1)", T("O_Q1") + T("O_Q2"),
           DivisorClass{12, {2, -3, -3}});
        eq("nefnef", "-2K ~ (O_{Q_1}(2)-E) + (O_{Q_2}(2)-E)",
           T("O_Q1").scaled(2) - T("E") + T("O_Q2").scaled(2) - T("E"),
           T("O_Xbar0").scaled(2));
        eq("E.decomp", "O_{Q_1} + O_{Q_2} = -K_{X_0} + E", T("O_Q1") + T("O_Q2"),
           T("O_Xbar0") + T("E"));
    }
    if (genus == 10) {
        eq("uK", "tau^*(-K_U) = -K + E+ ~ [4,-6,-6]", T("O_Xbar0") + T("E"),
           DivisorClass{10, {4, -6, -6}});
        eq("uL", "tau^*L ~ [2,-3,-3], L - rho_1^*O(1) ~ [1,-1,-2]",
           DivisorClass{10, {2, -3, -3}} - yy_class(10, 1), yy_class(10, 2));
        eq("E.S.decomp", "E + O_X = S_1 + S_2", T("E") + T("O_X"), T("S1") + T("S2"));
    }
    if (genus == 9) {
        // 2(-K) - S_1 ~ [-1,5,-2]: the half-S relation of the dP fibration.
        eq("dP.halfS", "-K - S_1/2 ~ [-1/2,5/2,-1]", T("O_Xbar0").scaled(2) - T("S1"),
           DivisorClass{9, {-1, 5, -2}});
        eq("picY", "tau^*Pic Y = Z[1,-2,-1] + Z[1,-1,-2]", yy_class(9, 1) + yy_class(9, 2),
           DivisorClass{9, {2, -3, -3}});
    }
    eq("anticanonical", "O_Xbar0(1) = -K_X0 ~ [1,-1,-1]", T("O_Xbar0"), anticanonical_class(genus));
    return rep;
}

}  // namespace fanolink

#endif
