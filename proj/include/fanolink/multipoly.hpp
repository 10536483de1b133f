#ifndef FANOLINK_MULTIPOLY_HPP
#define FANOLINK_MULTIPOLY_HPP

#include <fanolink/field.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fanolink {

using ExpVec = std::vector<int>;

/// Graded lexicographic, descending: higher total degree first, then lex on
/// the declared variable order. Map iteration therefore prints canonically.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponents
    }
};

/// Sparse multivariate polynomial over one of the closed coefficient fields.
/// No zero coefficients are stored; exponent vectors match the variable list.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, FieldElem, GradedLexGreater>;

    MultiPoly() : field_(CoeffField::Q()) {}
    MultiPoly(CoeffField field, std::vector<std::string> vars)
        : field_(std::move(field)), vars_(std::move(vars)) {}

    static MultiPoly zero(const CoeffField& f, const std::vector<std::string>& vars) {
        return MultiPoly(f, vars);
    }
    static MultiPoly constant(const CoeffField& f, const std::vector<std::string>& vars,
                              const FieldElem& c) {
        MultiPoly p(f, vars);
        if (!c.is_zero()) p.terms_[ExpVec(vars.size(), 0)] = c;
        return p;
    }
    static MultiPoly variable(const CoeffField& f, const std::vector<std::string>& vars,
                              const std::string& v) {
        MultiPoly p(f, vars);
        ExpVec e(vars.size(), 0);
        e[p.var_index(v)] = 1;
        p.terms_[e] = FieldElem::one(f);
        return p;
    }
    static MultiPoly monomial(const CoeffField& f, const std::vector<std::string>& vars,
                              const FieldElem& c, const ExpVec& e) {
        MultiPoly p(f, vars);
        if (e.size() != vars.size()) throw StructuralError("exponent vector length mismatch");
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const CoeffField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t var_index(const std::string& v) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == v) return i;
        throw StructuralError("unknown variable '" + v + "'");
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(const std::string& v) const {
        std::size_t i = var_index(v);
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }
    int min_degree_in(const std::string& v) const {
        if (is_zero()) throw StructuralError("min degree of the zero polynomial");
        std::size_t i = var_index(v);
        int d = terms_.begin()->first[i];
        for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d < 0) d = s;
            else if (s != d) return false;
        }
        return true;
    }

    void add_term(const ExpVec& e, const FieldElem& c) {
        if (e.size() != vars_.size()) throw StructuralError("exponent vector length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(field_, vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly r(a.field_, a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly scaled(const FieldElem& c) const {
        MultiPoly r(field_, vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }
    MultiPoly pow(int n) const {
        if (n < 0) throw StructuralError("negative polynomial power");
        MultiPoly acc = constant(field_, vars_, FieldElem::one(field_));
        MultiPoly b = *this;
        while (n > 0) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.field_ == b.field_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Ring-homomorphism image. Every variable must have an image; all images
    /// share one target ring.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size())
            throw StructuralError("substitute needs one image per variable");
        for (const auto& im : images) {
            if (!(im.field() == images.front().field()) || im.vars() != images.front().vars())
                throw StructuralError("substitution images live in different rings");
        }
        const CoeffField& tf = images.empty() ? field_ : images.front().field();
        const std::vector<std::string>& tv =
            images.empty() ? vars_ : images.front().vars();
        if (!(tf == field_))
            throw StructuralError("substitution across coefficient fields is not defined here");
        MultiPoly r = zero(tf, tv);
        for (const auto& [e, c] : terms_) {
            MultiPoly term = constant(tf, tv, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term = term * images[i].pow(e[i]);
            r = r + term;
        }
        return r;
    }

    /// Substitute a single variable by a constant, keeping the variable list.
    MultiPoly with_var_set(const std::string& v, const FieldElem& value) const {
        std::size_t idx = var_index(v);
        MultiPoly r(field_, vars_);
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            FieldElem c2 = c * value.pow(e[idx]);
            e2[idx] = 0;
            r.add_term(e2, c2);
        }
        return r;
    }

    /// Collect as a polynomial in `v`: map degree -> coefficient (in the same ring).
    std::map<int, MultiPoly> collect(const std::string& v) const {
        std::size_t idx = var_index(v);
        std::map<int, MultiPoly> out;
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            int k = e2[idx];
            e2[idx] = 0;
            auto it = out.find(k);
            if (it == out.end()) it = out.emplace(k, zero(field_, vars_)).first;
            it->second.add_term(e2, c);
        }
        return out;
    }

    /// Exact division test by long division under the graded-lex order.
    /// Returns the quotient iff the division is exact.
    std::optional<MultiPoly> exact_divide(const MultiPoly& d) const {
        require_same_ring(d);
        if (d.is_zero()) throw DegeneracyError("division by the zero polynomial");
        MultiPoly rem = *this;
        MultiPoly quo(field_, vars_);
        const auto& dlead = *d.terms_.begin();
        while (!rem.is_zero()) {
            const auto& rlead = *rem.terms_.begin();
            ExpVec e(rlead.first);
            bool divisible = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] -= dlead.first[i];
                if (e[i] < 0) divisible = false;
            }
            if (!divisible) return std::nullopt;
            FieldElem c = rlead.second / dlead.second;
            MultiPoly t = monomial(field_, vars_, c, e);
            quo = quo + t;
            rem = rem - t * d;
        }
        return quo;
    }

    std::string to_string() const;

private:
    void require_same_ring(const MultiPoly& o) const {
        if (!(field_ == o.field_))
            throw StructuralError("coefficient field mismatch: " + field_.name() + " vs " +
                                  o.field_.name());
        if (vars_ != o.vars_) throw StructuralError("variable list mismatch");
    }

    CoeffField field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw StructuralError("unknown ring operation");
}

/// h must have degree exactly 1 in v; returns (n, d) with h = d*v - n,
/// normalized so that d's leading coefficient is a positive rational when
/// that makes sense. Substituting v = n/d into h gives 0 identically.
inline std::pair<MultiPoly, MultiPoly> solve_linear_variable(const MultiPoly& h,
                                                             const std::string& v) {
    if (h.degree_in(v) != 1)
        throw UnsupportedShapeError("polynomial is not linear in '" + v + "'");
    auto parts = h.collect(v);
    MultiPoly d = parts.count(1) ? parts.at(1) : MultiPoly::zero(h.field(), h.vars());
    MultiPoly n = parts.count(0) ? -parts.at(0) : MultiPoly::zero(h.field(), h.vars());
    for (const auto& [k, c] : parts)
        if (k > 1 && !c.is_zero()) throw UnsupportedShapeError("degree in solve variable exceeds 1");
    // Sign normalization: leading coefficient of d gets a positive leading
    // rational numerator.
    const FieldElem& lead = d.terms().begin()->second;
    Rational probe = lead.num().leading();
    if (probe < 0) {
        d = -d;
        n = -n;
    }
    return {n, d};
}

// ---------------------------------------------------------------------------
// Canonical textual serialization: terms in graded-lex order, coefficients as
// num/den rationals or parenthesized parameter polynomials, e.g. (q-1)*x2^2.
// ---------------------------------------------------------------------------

inline std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative_const = c.is_rational_constant() && c.rational_value() < 0;
        if (!first) os << (negative_const ? " - " : " + ");
        else if (negative_const) os << "-";
        FieldElem cc = negative_const ? -c : c;
        bool has_mono = false;
        for (int x : e)
            if (x > 0) has_mono = true;
        std::string coeff_str;
        if (cc.is_rational_constant()) {
            if (!has_mono || cc.rational_value() != 1) coeff_str = rat_to_string(cc.rational_value());
        } else {
            coeff_str = cc.to_string();
        }
        os << coeff_str;
        bool emitted = !coeff_str.empty();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (emitted) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            emitted = true;
        }
        first = false;
    }
    return os.str();
}

namespace detail {

/// Minimal recursive-descent parser for the canonical form (and harmless
/// whitespace variants). The parameter of the coefficient field is accepted
/// inside parenthesized coefficients; fraction coefficients appear as
/// (num)/(den).
class PolyParser {
public:
    PolyParser(std::string text, CoeffField field, std::vector<std::string> vars)
        : s_(std::move(text)), field_(std::move(field)), vars_(std::move(vars)) {}

    MultiPoly parse() {
        MultiPoly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) throw StructuralError("trailing input in polynomial text");
        return p;
    }

private:
    MultiPoly parse_sum() {
        MultiPoly acc = parse_term(consume_sign());
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                int sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                acc = acc + parse_term(sign);
            } else {
                break;
            }
        }
        return acc;
    }

    int consume_sign() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return -1;
        }
        if (pos_ < s_.size() && s_[pos_] == '+') ++pos_;
        return 1;
    }

    MultiPoly parse_term(int sign) {
        MultiPoly acc = MultiPoly::constant(field_, vars_,
                                            FieldElem(field_, Rational(sign)));
        bool expect_factor = true;
        while (expect_factor) {
            acc = acc * parse_factor();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        return acc;
    }

    MultiPoly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw StructuralError("unexpected end of polynomial text");
        char c = s_[pos_];
        if (c == '(') {
            FieldElem coeff = parse_field_group();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != '(')
                    throw StructuralError("expected parenthesized denominator");
                FieldElem den = parse_field_group();
                coeff = coeff / den;
            }
            return MultiPoly::constant(field_, vars_, coeff);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_rational();
            return MultiPoly::constant(field_, vars_, FieldElem(field_, r));
        }
        std::string name = parse_name();
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = static_cast<int>(parse_unsigned());
        }
        if (field_.kind != FieldKind::rationals && name == field_.param)
            return MultiPoly::constant(field_, vars_, FieldElem::generator(field_).pow(e));
        return MultiPoly::variable(field_, vars_, name).pow(e);
    }

    /// Parse "( ... )" where the inside is a polynomial in the field parameter.
    FieldElem parse_field_group() {
        ++pos_;  // consume '('
        // Reuse the full parser with the parameter as the only variable, then
        // read the result back as a field element.
        int depth = 1;
        std::size_t start = pos_;
        while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth != 0) throw StructuralError("unbalanced parentheses");
        std::string inner = s_.substr(start, pos_ - 1 - start);
        if (field_.kind == FieldKind::rationals)
            throw StructuralError("parenthesized parameter coefficient over Q");
        PolyParser sub(inner, field_, {field_.param});
        MultiPoly p = sub.parse();
        FieldElem acc = FieldElem::zero(field_);
        FieldElem gen = FieldElem::generator(field_);
        for (const auto& [e, k] : p.terms()) acc = acc + k * gen.pow(e[0]);
        return acc;
    }

    Rational parse_rational() {
        std::string t;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += s_[pos_++];
        if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            t += '/';
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += s_[pos_++];
        }
        return rat_from_string(t);
    }

    unsigned long parse_unsigned() {
        skip_ws();
        std::string t;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += s_[pos_++];
        if (t.empty()) throw StructuralError("expected exponent");
        return std::stoul(t);
    }

    std::string parse_name() {
        std::string t;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            // a name never starts with a digit; the caller checked that
            t += s_[pos_++];
        }
        if (t.empty()) throw StructuralError(std::string("unexpected character '") + s_[pos_] + "'");
        return t;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string s_;
    CoeffField field_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, const CoeffField& field,
                            const std::vector<std::string>& vars) {
    return detail::PolyParser(text, field, vars).parse();
}

}  // namespace fanolink

#endif
