#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fanolink/field.hpp>

#include <random>

using namespace fanolink;

namespace {

PolyQ random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = Rational(coef(rng));
    return PolyQ(std::move(cs));
}

}  // namespace

TEST_CASE("univariate division and gcd over Q") {
    PolyQ t = PolyQ::variable();
    PolyQ p = (t - PolyQ(Rational(1))) * (t - PolyQ(Rational(1))) * (t + PolyQ(Rational(2)));
    PolyQ q, r;
    PolyQ::divmod(p, t - PolyQ(Rational(1)), q, r);
    CHECK(r.is_zero());
    CHECK(q == (t - PolyQ(Rational(1))) * (t + PolyQ(Rational(2))));
    PolyQ g = PolyQ::gcd(p, (t - PolyQ(Rational(1))) * (t - PolyQ(Rational(3))));
    CHECK(g == t - PolyQ(Rational(1)));  // monic
}

TEST_CASE("field element normalization is canonical") {
    CoeffField f = CoeffField::Q_of("q");
    std::mt19937 rng(7);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        PolyQ p = random_poly(rng, 3), q = random_poly(rng, 3), r = random_poly(rng, 2);
        if (q.is_zero() || r.is_zero()) continue;
        FieldElem plain(f, p, q);
        FieldElem inflated(f, p * r, q * r);
        CHECK(plain == inflated);
        CHECK(plain.num() == inflated.num());
        CHECK(plain.den() == inflated.den());
        ++checked;
    }
    CHECK(checked > 300);
    // denominator is monic
    FieldElem x(f, PolyQ(Rational(1)), PolyQ(std::vector<Rational>{Rational(0), Rational(2)}));
    CHECK(x.den().leading() == 1);
}

TEST_CASE("field arithmetic is exact") {
    CoeffField f = CoeffField::Q_of("q");
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);
    FieldElem a = (q - one) / q;        // (q-1)/q
    FieldElem b = one / (one - a);      // q
    CHECK(b == q);
    CHECK((a * b) == q - one);
    CHECK(a.pow(-1) == q / (q - one));
    CHECK_THROWS_AS(FieldElem::zero(f).inverse(), DegeneracyError);
}

TEST_CASE("the sqrt tower rewrites q as s^2 before any normalization") {
    CoeffField fs = CoeffField::Q_s();
    FieldElem s = FieldElem::param(fs, "s");
    FieldElem q = FieldElem::param(fs, "q");
    CHECK(q == s * s);
    CHECK_THROWS_AS(FieldElem::param(fs, "u"), StructuralError);
    CHECK_THROWS_AS(FieldElem::param(CoeffField::Q_of("q"), "s"), StructuralError);
}

TEST_CASE("rewriting q -> s^2 commutes with field arithmetic") {
    CoeffField fq = CoeffField::Q_of("q");
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        PolyQ p1 = random_poly(rng, 3), p2 = random_poly(rng, 3);
        PolyQ d1 = random_poly(rng, 2), d2 = random_poly(rng, 2);
        if (d1.is_zero() || d2.is_zero()) continue;
        FieldElem a(fq, p1, d1), b(fq, p2, d2);
        CHECK(lift_q_to_s(a + b) == lift_q_to_s(a) + lift_q_to_s(b));
        CHECK(lift_q_to_s(a * b) == lift_q_to_s(a) * lift_q_to_s(b));
    }
}

TEST_CASE("field element printing") {
    CoeffField f = CoeffField::Q_of("q");
    FieldElem q = FieldElem::param(f, "q");
    FieldElem one = FieldElem::one(f);
    CHECK((q - one).to_string() == "(q - 1)");
    CHECK(((q - one) / q).to_string() == "(q - 1)/(q)");
    CHECK(FieldElem(f, Rational(-2, 3)).to_string() == "-2/3");
    // specialization at a rational value (pre-check support)
    CHECK(((q - one) / q).eval(Rational(1, 5)) == Rational(-4));
}
