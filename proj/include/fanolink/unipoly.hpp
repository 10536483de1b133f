#ifndef FANOLINK_UNIPOLY_HPP
#define FANOLINK_UNIPOLY_HPP

#include <fanolink/field.hpp>
#include <fanolink/multipoly.hpp>

#include <string>
#include <vector>

namespace fanolink {

/// Order of vanishing: a natural number or infinity (for the zero
/// polynomial). Infinity is a first-class state, never a sentinel integer.
struct VanishingOrder {
    static VanishingOrder finite(unsigned v) { return {false, v}; }
    static VanishingOrder infinite() { return {true, 0}; }

    bool is_infinite = false;
    unsigned value = 0;

    friend bool operator==(const VanishingOrder& a, const VanishingOrder& b) {
        return a.is_infinite == b.is_infinite && (a.is_infinite || a.value == b.value);
    }
    friend bool operator<(const VanishingOrder& a, const VanishingOrder& b) {
        if (a.is_infinite) return false;
        if (b.is_infinite) return true;
        return a.value < b.value;
    }
    std::string to_string() const { return is_infinite ? "inf" : std::to_string(value); }
};

/// Dense univariate polynomial over a coefficient field; the carrier for the
/// local-length computations along parametrized curves.
class UniPoly {
public:
    UniPoly(CoeffField field, std::string var)
        : field_(std::move(field)), var_(std::move(var)) {}
    UniPoly(CoeffField field, std::string var, std::vector<FieldElem> coeffs)
        : field_(std::move(field)), var_(std::move(var)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const CoeffField& f, const std::string& var) { return UniPoly(f, var); }
    static UniPoly constant(const CoeffField& f, const std::string& var, const FieldElem& c) {
        return UniPoly(f, var, {c});
    }
    static UniPoly variable(const CoeffField& f, const std::string& var) {
        return UniPoly(f, var, {FieldElem::zero(f), FieldElem::one(f)});
    }
    /// c * t^k
    static UniPoly monomial(const CoeffField& f, const std::string& var, const FieldElem& c,
                            unsigned k) {
        std::vector<FieldElem> cs(k + 1, FieldElem::zero(f));
        cs[k] = c;
        return UniPoly(f, var, std::move(cs));
    }

    const CoeffField& field() const { return field_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElem coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : FieldElem::zero(field_);
    }
    const FieldElem& leading() const {
        if (is_zero()) throw DegeneracyError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.check(b);
        std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 FieldElem::zero(a.field_));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(a.field_, a.var_, std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        a.check(b);
        std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 FieldElem::zero(a.field_));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(a.field_, a.var_, std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return zero(a.field_, a.var_);
        std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                                 FieldElem::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(a.field_, a.var_, std::move(c));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.field_ == b.field_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    FieldElem eval(const FieldElem& t) const {
        FieldElem acc = FieldElem::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        a.check(b);
        if (b.is_zero()) throw DegeneracyError("univariate division by zero");
        std::vector<FieldElem> rem(a.coeffs_);
        int db = b.degree();
        std::vector<FieldElem> quo;
        if (static_cast<int>(rem.size()) - 1 >= db)
            quo.assign(rem.size() - db, FieldElem::zero(a.field_));
        while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
            FieldElem c = rem.back() / b.leading();
            std::size_t shift = rem.size() - 1 - db;
            quo[shift] = c;
            for (int i = 0; i <= db; ++i) rem[shift + i] = rem[shift + i] - c * b.coeff(i);
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        q = UniPoly(a.field_, a.var_, std::move(quo));
        r = UniPoly(a.field_, a.var_, std::move(rem));
    }

    static UniPoly gcd(const UniPoly& a, const UniPoly& b) {
        UniPoly x = a, y = b;
        while (!y.is_zero()) {
            UniPoly q = zero(x.field_, x.var_), r = zero(x.field_, x.var_);
            divmod(x, y, q, r);
            x = y;
            y = r;
        }
        if (x.is_zero()) return x;
        // monic normalization
        FieldElem inv = x.leading().inverse();
        std::vector<FieldElem> c(x.coeffs_);
        for (auto& e : c) e = e * inv;
        return UniPoly(x.field_, x.var_, std::move(c));
    }

    std::string to_string() const {
        MultiPoly m(field_, {var_});
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            m.add_term({static_cast<int>(k)}, coeffs_[k]);
        return m.to_string();
    }

private:
    void check(const UniPoly& o) const {
        if (!(field_ == o.field_) || var_ != o.var_)
            throw StructuralError("univariate ring mismatch");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    CoeffField field_;
    std::string var_;
    std::vector<FieldElem> coeffs_;  // coeffs_[k] multiplies var^k
};

/// Multiplicity of the root t0, computed by repeated exact division by
/// (t - t0). Infinite for the zero polynomial.
inline VanishingOrder univariate_order_at(const UniPoly& p, const FieldElem& t0) {
    if (p.is_zero()) return VanishingOrder::infinite();
    UniPoly lin = UniPoly(p.field(), p.var(),
                          std::vector<FieldElem>{-t0, FieldElem::one(p.field())});
    UniPoly cur = p;
    unsigned ord = 0;
    while (!cur.is_zero()) {
        UniPoly q = UniPoly::zero(p.field(), p.var()), r = q;
        UniPoly::divmod(cur, lin, q, r);
        if (!r.is_zero()) break;
        ++ord;
        cur = q;
    }
    return VanishingOrder::finite(ord);
}

/// Length of the local quotient ring at t0 for an ideal in a PID: the minimal
/// vanishing order over the nonzero generators. Empty or all-zero generator
/// lists give infinity (the ideal is contained in every power).
inline VanishingOrder local_ideal_length(const std::vector<UniPoly>& generators,
                                         const FieldElem& t0) {
    VanishingOrder best = VanishingOrder::infinite();
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        VanishingOrder o = univariate_order_at(g, t0);
        if (o < best) best = o;
    }
    return best;
}

}  // namespace fanolink

#endif
