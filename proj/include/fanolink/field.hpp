#ifndef FANOLINK_FIELD_HPP
#define FANOLINK_FIELD_HPP

#include <fanolink/rational.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fanolink {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, the internal carrier for coefficient
// fields Q(p).
// ---------------------------------------------------------------------------

class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    static PolyQ variable() { return PolyQ(std::vector<Rational>{Rational(0), Rational(1)}); }
    explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention here; callers that
    // need the order-at-a-point notion use VanishingOrder instead.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const Rational& leading() const {
        if (is_zero()) throw DegeneracyError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_value() const { return coeff(0); }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return PolyQ(std::move(c));
    }
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return PolyQ(std::move(c));
    }
    PolyQ operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& x : c) x = -x;
        return PolyQ(std::move(c));
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyQ(std::move(c));
    }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    PolyQ scaled(const Rational& c) const {
        if (c == 0) return PolyQ();
        std::vector<Rational> r(coeffs_);
        for (auto& x : r) x *= c;
        return PolyQ(std::move(r));
    }

    /// Euclidean division; denominator-free fields only appear trivially since
    /// coefficients are rationals.
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
        if (b.is_zero()) throw DegeneracyError("polynomial division by zero");
        std::vector<Rational> rem(a.coeffs_);
        std::vector<Rational> quo;
        int db = b.degree();
        if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
            Rational c = rem.back() / b.leading();
            std::size_t shift = rem.size() - 1 - db;
            quo[shift] = c;
            for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b.coeff(i);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        q = PolyQ(std::move(quo));
        r = PolyQ(std::move(rem));
    }

    static PolyQ gcd(const PolyQ& a, const PolyQ& b) {
        PolyQ x = a, y = b;
        while (!y.is_zero()) {
            PolyQ q, r;
            divmod(x, y, q, r);
            x = y;
            y = r;
        }
        if (x.is_zero()) return x;
        return x.scaled(Rational(1) / x.leading());  // monic
    }

    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// Substitute the variable by another polynomial (used for q -> s^2).
    PolyQ compose(const PolyQ& inner) const {
        PolyQ acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + PolyQ(*it);
        return acc;
    }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rational c = coeff(static_cast<std::size_t>(k));
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Rational ac = abs(c);
            if (k == 0 || ac != 1) {
                os << rat_to_string(ac);
                if (k > 0) os << "*";
            }
            if (k > 0) {
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies var^k
};

// ---------------------------------------------------------------------------
// Coefficient fields: Q, Q(p) for one named parameter p, and Q(s) with q = s^2.
// A closed set by design; no general extension towers.
// ---------------------------------------------------------------------------

enum class FieldKind { rationals, rational_function, sqrt_of_q };

struct CoeffField {
    FieldKind kind = FieldKind::rationals;
    std::string param;  // "q", "u", "v", "a", ... ; "s" for sqrt_of_q

    static CoeffField Q() { return {FieldKind::rationals, ""}; }
    static CoeffField Q_of(const std::string& p) { return {FieldKind::rational_function, p}; }
    static CoeffField Q_s() { return {FieldKind::sqrt_of_q, "s"}; }

    friend bool operator==(const CoeffField& a, const CoeffField& b) {
        return a.kind == b.kind && a.param == b.param;
    }
    std::string name() const {
        switch (kind) {
            case FieldKind::rationals: return "Q";
            case FieldKind::rational_function: return "Q(" + param + ")";
            case FieldKind::sqrt_of_q: return "Q(s), q=s^2";
        }
        return "?";
    }
};

/// Element of a coefficient field: a gcd-reduced fraction of univariate
/// polynomials in the field parameter, denominator monic. Over plain Q both
/// parts are constants. Canonical: equal fractions have identical storage.
class FieldElem {
public:
    FieldElem() : field_(CoeffField::Q()), num_(), den_(Rational(1)) {}
    FieldElem(const CoeffField& f, const Rational& c) : field_(f), num_(c), den_(Rational(1)) {}
    FieldElem(const CoeffField& f, PolyQ num, PolyQ den) : field_(f) {
        set(std::move(num), std::move(den));
    }

    static FieldElem zero(const CoeffField& f) { return FieldElem(f, Rational(0)); }
    static FieldElem one(const CoeffField& f) { return FieldElem(f, Rational(1)); }
    static FieldElem from_rational(const CoeffField& f, const Rational& c) { return FieldElem(f, c); }

    /// The field generator: p in Q(p), s in Q(s).
    static FieldElem generator(const CoeffField& f) {
        if (f.kind == FieldKind::rationals)
            throw StructuralError("the rational field has no parameter generator");
        return FieldElem(f, PolyQ::variable(), PolyQ(Rational(1)));
    }

    /// The image of a named parameter in this field. In Q(s) the name "q" is
    /// rewritten as s^2 before any normalization, per the tower relation.
    static FieldElem param(const CoeffField& f, const std::string& name) {
        if (f.kind == FieldKind::rational_function && name == f.param) return generator(f);
        if (f.kind == FieldKind::sqrt_of_q) {
            if (name == "s") return generator(f);
            if (name == "q") {
                PolyQ s = PolyQ::variable();
                return FieldElem(f, s * s, PolyQ(Rational(1)));
            }
        }
        throw StructuralError("parameter '" + name + "' does not live in " + f.name());
    }

    const CoeffField& field() const { return field_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == PolyQ(Rational(1)) && den_ == PolyQ(Rational(1)); }
    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_rational_constant() const { return num_.is_constant() && den_ == PolyQ(Rational(1)); }
    Rational rational_value() const {
        if (!is_rational_constant()) throw StructuralError("field element is not a rational constant");
        return num_.constant_value();
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.require_same(b);
        return FieldElem(a.field_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        a.require_same(b);
        return FieldElem(a.field_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldElem operator-() const { return FieldElem(field_, -num_, den_); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.require_same(b);
        return FieldElem(a.field_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        a.require_same(b);
        if (b.is_zero()) throw DegeneracyError("field division by zero");
        return FieldElem(a.field_, a.num_ * b.den_, a.den_ * b.num_);
    }
    FieldElem inverse() const {
        if (is_zero()) throw DegeneracyError("inverse of zero");
        return FieldElem(field_, den_, num_);
    }
    FieldElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElem acc = one(field_), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Specialize the parameter at a rational value (fast pre-checks only;
    /// certification always happens symbolically).
    Rational eval(const Rational& at) const {
        Rational d = den_.eval(at);
        if (d == 0) throw DegeneracyError("parameter specialization hits a pole");
        return num_.eval(at) / d;
    }

    std::string to_string() const {
        if (is_rational_constant()) return rat_to_string(rational_value());
        std::string n = "(" + num_.to_string(field_.param) + ")";
        if (den_ == PolyQ(Rational(1))) return n;
        return n + "/(" + den_.to_string(field_.param) + ")";
    }

private:
    void require_same(const FieldElem& o) const {
        if (!(field_ == o.field_))
            throw StructuralError("coefficient field mismatch: " + field_.name() + " vs " + o.field_.name());
    }
    void set(PolyQ num, PolyQ den) {
        if (den.is_zero()) throw DegeneracyError("field element with zero denominator");
        if (num.is_zero()) {
            num_ = PolyQ();
            den_ = PolyQ(Rational(1));
            return;
        }
        PolyQ g = PolyQ::gcd(num, den);
        if (!g.is_zero() && g.degree() > 0) {
            PolyQ q, r;
            PolyQ::divmod(num, g, q, r);
            num = q;
            PolyQ::divmod(den, g, q, r);
            den = q;
        }
        Rational lead = den.leading();
        num_ = num.scaled(Rational(1) / lead);
        den_ = den.scaled(Rational(1) / lead);
    }

    CoeffField field_;
    PolyQ num_, den_;
};

/// Rewrite an element of Q(q) as an element of Q(s) via q -> s^2.
inline FieldElem lift_q_to_s(const FieldElem& x) {
    if (!(x.field() == CoeffField::Q_of("q")))
        throw StructuralError("lift_q_to_s expects an element of Q(q)");
    PolyQ s = PolyQ::variable();
    PolyQ s2 = s * s;
    return FieldElem(CoeffField::Q_s(), x.num().compose(s2), x.den().compose(s2));
}

}  // namespace fanolink

#endif
