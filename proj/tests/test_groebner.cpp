#include "doctest.h"

#include <random>

#include "bifurcata/groebner.hpp"
#include "bifurcata/parser.hpp"

using namespace bifurcata;

namespace {
RatField Q;
Poly<Rat> P(const std::string& s) { return parse_polynomial(s); }

UPoly<Rat> up(std::initializer_list<long> coeffs) {
    UPoly<Rat> p;
    for (long c : coeffs) p.c.emplace_back(c);
    upoly_trim(Q, p);
    return p;
}
}  // namespace

TEST_CASE("groebner basis: spec examples") {
    // (2xy - 1, x^2) is the unit ideal
    auto gb1 = groebner_basis(Q, {P("2*x*y - 1"), P("x^2")});
    CHECK(ideal_is_unit(gb1));

    // (x^2, y) is already reduced
    auto gb2 = groebner_basis(Q, {P("x^2"), P("y")});
    REQUIRE(gb2.gens.size() == 2);
    CHECK(gb2.gens[0] == P("y"));
    CHECK(gb2.gens[1] == P("x^2"));

    // (x, y): quotient dimension 1
    auto gb3 = groebner_basis(Q, {P("x"), P("y")});
    CHECK(quotient_basis(Q, gb3, 2).size() == 1);

    CHECK_THROWS_AS(groebner_basis(Q, std::vector<Poly<Rat>>{}), StructuralError);
}

TEST_CASE("Buchberger criterion holds on the emitted basis (randomized)") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> de(0, 2), dc(-3, 3), dt(1, 3);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Poly<Rat>> gens;
        for (int k = 0; k < 2; ++k) {
            Poly<Rat> p(std::vector<std::string>{"x", "y"});
            int terms = dt(rng) + 1;
            for (int t = 0; t < terms; ++t) {
                Monomial m(2);
                m.exp[0] = de(rng);
                m.exp[1] = de(rng);
                p.add_term(Q, m, Rat(dc(rng)));
            }
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        auto gb = groebner_basis(Q, gens);
        for (std::size_t i = 0; i < gb.gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
                const Monomial& li = gb.gens[i].terms().rbegin()->first;
                const Monomial& lj = gb.gens[j].terms().rbegin()->first;
                Monomial l = mono_lcm(li, lj);
                Poly<Rat> ti(gb.gens[i].vars()), tj(gb.gens[j].vars());
                ti.add_term(Q, mono_div(l, li), Q.one());
                tj.add_term(Q, mono_div(l, lj), Q.one());
                auto s = poly_sub(Q, poly_mul(Q, ti, gb.gens[i]), poly_mul(Q, tj, gb.gens[j]));
                CHECK(normal_form(Q, s, gb.gens).is_zero());
            }
        }
    }
}

TEST_CASE("quotient basis: spec examples") {
    auto gb1 = groebner_basis(Q, {P("x^2"), P("y")});
    auto b1 = quotient_basis(Q, gb1, 2);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].is_one());
    CHECK(b1[1].exp == std::vector<std::uint32_t>{1, 0});

    auto gb2 = groebner_basis(Q, {P("2*x*y - 1"), P("x^2")});
    CHECK(quotient_basis(Q, gb2, 2).empty());

    auto gb3 = groebner_basis(Q, {P("x"), P("y^2")});
    auto b3 = quotient_basis(Q, gb3, 2);
    REQUIRE(b3.size() == 2);
    CHECK(b3[1].exp == std::vector<std::uint32_t>{0, 1});

    // a positive-dimensional ideal raises NON-ISOLATED
    auto gb4 = groebner_basis(Q, {P("x")});
    CHECK_THROWS_AS(quotient_basis(Q, gb4, 2), NonIsolatedError);
}

TEST_CASE("mult_matrix: spec examples") {
    // Jacobian ideal of y^2 - x^3: (-3x^2, 2y), basis {1, x}
    auto gb = groebner_basis(Q, {P("-3*x^2"), P("2*y")});
    auto basis = quotient_basis(Q, gb, 2);
    REQUIRE(basis.size() == 2);

    auto mf = mult_matrix(Q, basis, gb, P("y^2 - x^3"));
    for (auto& row : mf)
        for (auto& e : row) CHECK(e.is_zero());

    auto mi = mult_matrix(Q, basis, gb, P("1"));
    CHECK(mi[0][0] == Rat(1));
    CHECK(mi[1][1] == Rat(1));
    CHECK(mi[0][1].is_zero());
    CHECK(mi[1][0].is_zero());

    auto mz = mult_matrix(Q, basis, gb, P("0"));
    for (auto& row : mz)
        for (auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("charpoly: spec examples") {
    std::vector<std::vector<Rat>> zero2{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
    CHECK(upoly_eq(Q, charpoly(zero2), up({0, 0, 1})));

    std::vector<std::vector<Rat>> id2{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(upoly_eq(Q, charpoly(id2), up({1, -2, 1})));

    std::vector<std::vector<Rat>> diag{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
    CHECK(upoly_eq(Q, charpoly(diag), up({2, -3, 1})));

    CHECK(upoly_eq(Q, charpoly({}), upoly_one(Q)));

    // a nontrivial 3x3 with known characteristic polynomial:
    // companion matrix of t^3 - 2t + 5
    std::vector<std::vector<Rat>> comp{
        {Rat(0), Rat(0), Rat(-5)}, {Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(0)}};
    CHECK(upoly_eq(Q, charpoly(comp), up({5, -2, 0, 1})));
}

TEST_CASE("critical spectrum: spec examples") {
    // cusp: one class at 0 with mu = 2
    auto s1 = critical_spectrum(P("y^2 - x^3"));
    REQUIRE(s1.entries.size() == 1);
    CHECK(s1.entries[0].value_class.rational_hint == Rat(0));
    CHECK(s1.entries[0].mu_per_root == 2);
    CHECK(s1.mu_total == 2);

    // x^2 y - x = x(xy - 1) is smooth
    auto s2 = critical_spectrum(P("x^2*y - x"));
    CHECK(s2.entries.empty());
    CHECK(s2.mu_total == 0);

    // node: one class at 0 with mu = 1
    auto s3 = critical_spectrum(P("x^2 + y^2"));
    REQUIRE(s3.entries.size() == 1);
    CHECK(s3.entries[0].value_class.rational_hint == Rat(0));
    CHECK(s3.entries[0].mu_per_root == 1);
    CHECK(s3.mu_total == 1);

    // non-isolated singularities are surfaced as NON-ISOLATED
    CHECK_THROWS_AS(critical_spectrum(P("x^2")), NonIsolatedError);
    CHECK_THROWS_AS(critical_spectrum(P("(x*y)^2")), NonIsolatedError);
}

TEST_CASE("spectrum of separated-variable instances matches hand computation") {
    // f = x^3 - 3x + y^2: Morse points (±1, 0), values -2 and 2, mu = 1 each
    auto s = critical_spectrum(P("x^3 - 3*x + y^2"));
    REQUIRE(s.entries.size() == 1);
    // both values have multiplicity 1, so Yun groups them: minpoly a^2 - 4
    CHECK(upoly_eq(Q, s.entries[0].value_class.minpoly, up({-4, 0, 1})));
    CHECK(s.entries[0].mu_per_root == 1);
    CHECK(s.mu_total == 2);

    // f = x^3 - 3x + y^3 - 3y: four Morse points; value 0 carries two of them
    auto t = critical_spectrum(P("x^3 - 3*x + y^3 - 3*y"));
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].value_class.rational_hint == Rat(0));  // sorted: deg 1 first
    CHECK(t.entries[0].mu_per_root == 2);
    CHECK(upoly_eq(Q, t.entries[1].value_class.minpoly, up({-16, 0, 1})));
    CHECK(t.entries[1].mu_per_root == 1);
    CHECK(t.mu_total == 4);

    // Brieskorn x^4 + y^2: mu = 3 at 0
    auto b = critical_spectrum(P("x^4 + y^2"));
    REQUIRE(b.entries.size() == 1);
    CHECK(b.entries[0].mu_per_root == 3);
    CHECK(b.mu_total == 3);
}

TEST_CASE("Stickelberger cross-check against naive resultant elimination") {
    // f = x^3 - 3x + y^3 - 12y: critical x in {±1}, y in {±2}; all four
    // critical values -18, -14, 14, 18 distinct and in distinct fibers of both
    // projections. Eliminate y then x from (f - a, f_y) and (f_x, f_y).
    std::vector<std::string> vars{"x", "y", "a"};
    Poly<Rat> f(vars), fx(vars), fy(vars), aSym = poly_var(Q, vars, 2);
    {
        auto fxy = P("x^3 - 3*x + y^3 - 12*y");
        for (const auto& [m, c] : fxy.terms()) {
            Monomial m3(3);
            m3.exp[0] = m.exp[0];
            m3.exp[1] = m.exp[1];
            f.add_term(Q, m3, c);
        }
        fx = poly_derivative(Q, f, 0);
        fy = poly_derivative(Q, f, 1);
    }
    auto fma = poly_sub(Q, f, aSym);
    auto G = poly_resultant(Q, fma, fy, 1);  // in (x, a)
    auto S = poly_resultant(Q, fx, fy, 1);   // in x only
    auto R = poly_resultant(Q, G, S, 0);     // in a only
    auto Ru = poly_to_upoly(Q, R, 2);
    auto Rsf = upoly_squarefree_part(Q, Ru);

    auto spec = critical_spectrum(P("x^3 - 3*x + y^3 - 12*y"));
    UPoly<Rat> prod = upoly_one(Q);
    for (auto& e : spec.entries) prod = upoly_mul(Q, prod, e.value_class.minpoly);
    CHECK(upoly_eq(Q, Rsf, prod));
    CHECK(spec.mu_total == 4);
}

TEST_CASE("gcd-free basis refines overlapping classes") {
    // inputs a(a-1) and (a-1)(a+2) refine into {a, a-1, a+2}
    auto basis = gcd_free_basis({upoly_mul(Q, up({0, 1}), up({-1, 1})),
                                 upoly_mul(Q, up({-1, 1}), up({2, 1}))});
    REQUIRE(basis.size() == 3);
    CHECK(upoly_eq(Q, basis[0], up({-1, 1})));
    CHECK(upoly_eq(Q, basis[1], up({0, 1})));
    CHECK(upoly_eq(Q, basis[2], up({2, 1})));

    // non-squarefree input is flattened
    auto b2 = gcd_free_basis({upoly_mul(Q, up({0, 1}), up({0, 1}))});
    REQUIRE(b2.size() == 1);
    CHECK(upoly_eq(Q, b2[0], up({0, 1})));
}
