#ifndef FANOLINK_RATIONAL_HPP
#define FANOLINK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fanolink {

/// Exact arbitrary-precision integer and rational carriers.
/// Rationals are always stored in lowest terms with positive denominator
/// (mpq_class keeps them canonical); there is no floating point anywhere.
using BigInt = mpz_class;
using Rational = mpq_class;

struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedShapeError : std::runtime_error {
    explicit UnsupportedShapeError(const std::string& what) : std::runtime_error(what) {}
};
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DegeneracyError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw StructuralError("rational does not fit a machine integer: " + r.get_str());
    return r.get_num().get_si();
}

/// Canonical text form: "n" or "n/d" with d > 1.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw StructuralError("unparsable rational: " + s);
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw DegeneracyError("inverse of zero");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational acc(1), b(base);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace fanolink

#endif
