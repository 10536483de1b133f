#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fanolink/lattice.hpp>

#include <random>

using namespace fanolink;

namespace {

// Independent oracle for a single blowup of a rank-1 ambient: expand
// (aH + bE)^3 straight from the four update rules, bypassing the tensor.
Rational one_step_cube_oracle(const Rational& h3, const Rational& k_index,
                              const Rational& deg, long curve_genus, const Rational& a,
                              const Rational& b) {
    Rational h2e(0);                                     // (pullback)^2 . E
    Rational he2 = -deg;                                 // (pullback H) . E^2
    Rational e3 = Rational(2) - Rational(2 * curve_genus) - k_index * deg;  // 2 - 2g + K.C
    return a * a * a * h3 + 3 * a * a * b * h2e + 3 * a * b * b * he2 + b * b * b * e3;
}

// Running-sum oracle for the anticanonical volume along a chain:
// (-K_new)^3 = (-K_old)^3 - 2((-K_old . C) + 1 - g).
Rational k_cube_oracle(const BlowupChain& chain) {
    Rational vol = chain.ambient.k_cube();
    CubicForm form = chain.ambient;
    for (const auto& step : chain.steps) {
        Rational k_dot_c(0);
        for (std::size_t i = 0; i < step.degrees.size(); ++i)
            k_dot_c += form.k_class()[i] * step.degrees[i];
        vol -= 2 * (k_dot_c + 1 - Rational(step.genus_of_curve));
        BlowupChain one{form, {step}};
        form = blowup_cubic_form(one);
    }
    return vol;
}

std::vector<Rational> coords(const DivisorClass& d) {
    return {Rational(d.a[0]), Rational(d.a[1]), Rational(d.a[2])};
}

}  // namespace

TEST_CASE("class tables") {
    CHECK(table_class(12, "E") == DivisorClass{12, {1, -2, -2}});
    CHECK(table_class(10, "S1") == DivisorClass{10, {2, -5, 0}});
    CHECK(table_class(9, "S1") == DivisorClass{9, {3, -7, 0}});
    CHECK(table_class(12, "O_Q1") == DivisorClass{12, {1, -2, -1}});
    CHECK(table_class(10, "O_Q1") == DivisorClass{10, {1, -2, 0}});  // the XX side at genus 10
    CHECK(table_class(9, "O_P1_2") == DivisorClass{9, {1, -1, -2}});
    CHECK_THROWS_AS(class_table(7), StructuralError);
    CHECK_THROWS_AS(table_class(12, "nonsense"), StructuralError);
}

TEST_CASE("the pairing is the plain dot product") {
    DivisorClass d{12, {1, -2, -2}};
    CurveClass c{12, {-2, -1, -1}};
    CHECK(pair(d, c) == 2);
    CHECK_THROWS_AS(pair(d, CurveClass{10, {0, 0, 0}}), StructuralError);
}

TEST_CASE("blowup of the quadric along a line") {
    CubicForm q({"H"}, {Rational(3)});
    q.set(0, 0, 0, Rational(2));
    CubicForm y = blowup_cubic_form({q, {CurveData{{Rational(1)}, 0, "F"}}});
    CHECK(y.k_cube() == 46);
}

TEST_CASE("blowup of projective space along a line, against the rule oracle") {
    CubicForm p3({"H"}, {Rational(4)});
    p3.set(0, 0, 0, Rational(1));
    CubicForm y = blowup_cubic_form({p3, {CurveData{{Rational(1)}, 0, "E"}}});
    CHECK(y.get(1, 1, 1) == -2);  // E^3
    CHECK(y.k_cube() == 54);
    // brute-force oracle for arbitrary combinations aH + bE
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Rational a(coef(rng)), b(coef(rng));
        CHECK(y.cube({a, b}) ==
              one_step_cube_oracle(Rational(1), Rational(4), Rational(1), 0, a, b));
    }
}

TEST_CASE("anticanonical volumes along the chains") {
    for (int g : {9, 10, 12}) {
        CubicForm x0 = x0_cubic_form(g);
        CHECK(x0.k_cube() == 2 * g - 10);
        // the running-sum oracle agrees with the tensor
        CubicForm amb({"O_X"}, {Rational(1)});
        amb.set(0, 0, 0, Rational(2 * g - 2));
        BlowupChain chain{amb,
                          {CurveData{{Rational(1)}, 0, "F1"},
                           CurveData{{Rational(1), Rational(0)}, 0, "F2"}}};
        CHECK(k_cube_oracle(chain) == x0.k_cube());
        CHECK(wplus_cubic_form(g).k_cube() == 2 * g - 10);
    }
    CHECK(x0plus_cubic_form(12).k_cube() == 14);
    CHECK(x0plus_cubic_form(10).k_cube() == 10);
    CHECK(x0plus_cubic_form(9).k_cube() == 8);
    // intersection numbers of the exceptional divisors on X_0
    CubicForm x0 = x0_cubic_form(12);
    CHECK(x0.get(1, 1, 1) == 1);   // F_i^3 = 1
    CHECK(x0.get(0, 1, 1) == -1);  // H . F_i^2 = -1
    CHECK(x0.get(0, 0, 1) == 0);   // H^2 . F_i = 0
    CHECK(x0.get(1, 1, 2) == 0);   // disjoint exceptional divisors
}

TEST_CASE("triple products") {
    CubicForm x0 = x0_cubic_form(9);
    std::vector<Rational> k = coords(anticanonical_class(9));
    CHECK(triple_product(x0, k, k, k) == 8);
    std::vector<Rational> zero(3, Rational(0));
    CHECK(triple_product(x0, k, k, zero) == 0);
    // trilinearity and symmetry on random rational classes
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto rand_cls = [&]() {
        return std::vector<Rational>{Rational(coef(rng)), Rational(coef(rng)),
                                     Rational(coef(rng))};
    };
    for (int i = 0; i < 200; ++i) {
        auto a = rand_cls(), b = rand_cls(), c = rand_cls(), d = rand_cls();
        CHECK(triple_product(x0, a, b, c) == triple_product(x0, b, a, c));
        CHECK(triple_product(x0, a, b, c) == triple_product(x0, c, b, a));
        std::vector<Rational> apd(3);
        for (int k2 = 0; k2 < 3; ++k2) apd[k2] = a[k2] + d[k2];
        CHECK(triple_product(x0, apd, b, c) ==
              triple_product(x0, a, b, c) + triple_product(x0, d, b, c));
    }
    CHECK_THROWS_AS(triple_product(x0, {Rational(1)}, k, k), StructuralError);
}

TEST_CASE("change of basis") {
    // the chain basis of W_1^+ at genus 9 against the elimination oracle
    auto basis = wplus_chain_basis(9);
    auto c = change_of_basis(basis, DivisorClass{9, {1, -1, -2}});
    CHECK(c[0] == 4);
    CHECK(c[1] == -2);
    CHECK(c[2] == -1);
    // identity basis
    std::array<DivisorClass, 3> id = {DivisorClass{12, {1, 0, 0}}, DivisorClass{12, {0, 1, 0}},
                                      DivisorClass{12, {0, 0, 1}}};
    auto e = change_of_basis(id, DivisorClass{12, {5, -7, 2}});
    CHECK(e[0] == 5);
    CHECK(e[1] == -7);
    CHECK(e[2] == 2);
    // the two quadric polarizations and S_1 are linearly dependent at genus 12
    std::array<DivisorClass, 3> dependent = {yy_class(12, 1), yy_class(12, 2),
                                             table_class(12, "S1")};
    CHECK_THROWS_AS(change_of_basis(dependent, anticanonical_class(12)), DegeneracyError);
    // the chain basis works and encodes the pullback relations
    auto chain = x0plus_basis(12);
    auto k = change_of_basis(chain, anticanonical_class(12));
    CHECK(k[0] == 3);
    CHECK(k[1] == -1);
    CHECK(k[2] == -1);  // -K_X0 = 3 O_Q1 - S1 - E+
}

TEST_CASE("the genus-9 cube values across the last flop") {
    DivisorClass cls{9, {1, -1, -2}};
    CHECK(cube_in_basis(wplus_cubic_form(9), wplus_chain_basis(9), cls) == -5);
    CHECK(cube_in_basis(x0plus_cubic_form(9), x0plus_basis(9), cls) == 0);
}

TEST_CASE("conic bundle form") {
    CubicForm x0 = x0_cubic_form(9);
    KProducts kp{x0.k_squared_dot(coords(yy_class(9, 1))),
                 x0.k_squared_dot(coords(yy_class(9, 2))), x0.k_cube()};
    CHECK(kp.kkA == 5);
    CHECK(kp.kkB == 5);
    CubicForm cb = conic_bundle_cubic_form(Rational(2), kp);
    CHECK(cb.cube({Rational(0), Rational(1), Rational(0)}) == 0);  // B^3 = 0
    CHECK(cb.k_cube() == 8);
    CHECK(cb.triple({Rational(1), Rational(0), Rational(0)}, {Rational(1), Rational(0), Rational(0)},
                    {Rational(0), Rational(0), Rational(1)}) == 0);  // A^2 . (-K) = 0
    CHECK(cb.triple({Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)},
                    {Rational(0), Rational(0), Rational(1)}) == 2);  // fiber degree
}

TEST_CASE("products containing -K transport across the link") {
    for (int g : {9, 10, 12}) {
        CubicForm x0 = x0_cubic_form(g);
        CubicForm wp = wplus_cubic_form(g);
        CubicForm xp = x0plus_cubic_form(g);
        // the anticanonical volume agrees on the independently built forms
        CHECK(x0.k_cube() == wp.k_cube());
        CHECK(x0.k_cube() == xp.k_cube());
        // (-K)^2 . D for the table classes agrees between X_0 and W_1^+
        for (const auto& [key, cls] : class_table(g)) {
            auto c_w = change_of_basis(wplus_chain_basis(g), cls);
            Rational via_w = wp.k_squared_dot({c_w[0], c_w[1], c_w[2]});
            Rational via_x0 = x0.k_squared_dot(coords(cls));
            CHECK(via_w == via_x0);
        }
        // flop_transport_k_products returns exactly the X_0-side values
        auto vals = flop_transport_k_products(x0, {coords(yy_class(g, 1)), coords(table_class(g, "O_X"))});
        CHECK(vals[0] == x0.k_squared_dot(coords(yy_class(g, 1))));
        CHECK(vals[1] == x0.k_squared_dot(coords(table_class(g, "O_X"))));
        auto zero_val = flop_transport_k_products(x0, {{Rational(0), Rational(0), Rational(0)}});
        CHECK(zero_val[0] == 0);
    }
    CubicForm x0 = x0_cubic_form(9);
    CHECK(x0.k_squared_dot(coords(yy_class(9, 1))) == 5);
}

TEST_CASE("class identities hold for all genera") {
    for (int g : {9, 10, 12}) {
        VerificationReport rep = verify_class_identities(g);
        CHECK(rep.count(CheckStatus::fail) == 0);
        CHECK(rep.entries().size() >= 8);
    }
}

TEST_CASE("class table JSON has stable shape") {
    auto j = class_table_json(12);
    CHECK(j["genus"] == 12);
    CHECK(j["classes"]["E"] == nlohmann::ordered_json({1, -2, -2}));
    auto fj = x0_cubic_form(12).to_json();
    CHECK(fj["basis"].size() == 3);
    CHECK(fj["k_class"][0] == "1");
}
