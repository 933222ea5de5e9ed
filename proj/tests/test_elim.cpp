#include "doctest.h"

#include <random>

#include "bifurcata/elim.hpp"
#include "bifurcata/parser.hpp"
#include "bifurcata/ratfunc.hpp"
#include "oracles.hpp"

using namespace bifurcata;

namespace {
RatField Q;
Poly<Rat> P(const std::string& s) { return parse_polynomial(s); }

Poly<Rat> random_poly(std::mt19937& rng, int maxdeg, int terms, int coeff_range) {
    std::uniform_int_distribution<int> de(0, maxdeg), dc(-coeff_range, coeff_range);
    Poly<Rat> p(std::vector<std::string>{"x", "y"});
    for (int t = 0; t < terms; ++t) {
        Monomial m(2);
        m.exp[0] = de(rng);
        m.exp[1] = de(rng);
        p.add_term(Q, m, Rat(dc(rng)));
    }
    return p;
}
}  // namespace

TEST_CASE("content/primitive: spec examples") {
    auto [c1, g1] = content_primitive(Q, P("x^2*y - x"), 1);
    CHECK(c1 == P("x"));
    CHECK(g1 == P("x*y - 1"));

    auto [c2, g2] = content_primitive(Q, P("x*y"), 1);
    CHECK(c2 == P("x"));
    CHECK(g2 == P("y"));

    auto [c3, g3] = content_primitive(Q, P("y^2 - x^3"), 1);
    CHECK(c3 == P("1"));
    CHECK(g3 == P("y^2 - x^3"));

    CHECK_THROWS_AS(content_primitive(Q, P("0"), 1), DegenerateInputError);
}

TEST_CASE("content * primitive reconstructs the input (randomized)") {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(rng, 4, 5, 6);
        if (p.is_zero()) continue;
        for (std::size_t var : {0u, 1u}) {
            auto [c, g] = content_primitive(Q, p, var);
            CHECK(poly_mul(Q, c, g) == p);
            // primitive part has unit content
            auto [cg, gg] = content_primitive(Q, g, var);
            CHECK(cg.is_constant());
        }
    }
}

TEST_CASE("gcd_subresultant: spec examples") {
    CHECK(gcd_subresultant(Q, P("y^2 - x^2"), P("y - x"), 1) == P("y - x"));
    CHECK(gcd_subresultant(Q, P("y^2"), P("y^3"), 1) == P("y^2"));
    CHECK(gcd_subresultant(Q, P("x^2*y - x"), P("0"), 1) == P("x^2*y - x"));
    // fraction-field semantics: content in the main variable is stripped
    CHECK(gcd_subresultant(Q, P("x*y"), P("x*y + x"), 1) == P("1"));
}

TEST_CASE("gcd divides both inputs in the pseudo-division sense (randomized)") {
    std::mt19937 rng(99);
    for (int i = 0; i < 80; ++i) {
        auto a = random_poly(rng, 3, 4, 4);
        auto b = random_poly(rng, 3, 4, 4);
        auto m = random_poly(rng, 2, 3, 3);
        a = poly_mul(Q, a, m);
        b = poly_mul(Q, b, m);
        if (a.is_zero() || b.is_zero()) continue;
        auto g = poly_gcd(Q, a, b);
        CHECK_FALSE(g.is_zero());
        CHECK(poly_mul(Q, poly_exact_div(Q, a, g), g) == a);
        CHECK(poly_mul(Q, poly_exact_div(Q, b, g), g) == b);
    }
}

TEST_CASE("squarefree_part: spec examples") {
    // (y-1)^2 (y+2) -> (y-1)(y+2)
    CHECK(squarefree_part(Q, P("(y - 1)^2 * (y + 2)"), 1) == P("(y - 1)*(y + 2)"));
    // y^3 -> y
    CHECK(squarefree_part(Q, P("y^3"), 1) == P("y"));
    // x^2 * D with D squarefree coprime to x -> x * D (up to unit; D here monic)
    auto d = P("y^2 - x - 1");
    CHECK(squarefree_part(Q, poly_mul(Q, P("x^2"), d), 0) == poly_mul(Q, P("x"), d));
}

TEST_CASE("squarefree_part divides input and is squarefree (randomized)") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        auto p = random_poly(rng, 3, 4, 4);
        if (p.is_zero()) continue;
        for (std::size_t var : {0u, 1u}) {
            auto s = squarefree_part(Q, p, var);
            CHECK_FALSE(s.is_zero());
            // divides p
            auto g = poly_gcd(Q, p, s);
            CHECK(poly_normalize_leading(Q, g) == poly_normalize_leading(Q, s));
            // gcd(s, ds/dvar) is constant in var
            auto ds = poly_derivative(Q, s, var);
            if (!ds.is_zero()) {
                auto gg = poly_gcd(Q, s, ds);
                auto dv = gg.degree_in(var);
                CHECK((!dv || *dv == 0));
            }
        }
    }
}

TEST_CASE("resultant: spec examples") {
    // Res_y(y^2 - x, y) = -x
    CHECK(poly_resultant(Q, P("y^2 - x"), P("y"), 1) == P("-x"));
    // Res_y(y - 1, y + 1) = 2
    CHECK(poly_resultant(Q, P("y - 1"), P("y + 1"), 1) == P("2"));
    // Res_y(x^2*y - x - a, x^2): second argument constant in y, so lc^deg.
    // Root set is {x : x^2 = 0}.
    auto r = poly_resultant(Q, P("x^2*y - x - 1"), P("x^2"), 1);
    CHECK(r == P("x^2"));
    CHECK_THROWS_AS(poly_resultant(Q, P("0"), P("0"), 1), DegenerateInputError);
    CHECK(poly_resultant(Q, P("x*y - 1"), P("0"), 1).is_zero());
}

TEST_CASE("resultant equals the Sylvester determinant (randomized)") {
    std::mt19937 rng(2024);
    int nontrivial = 0;
    for (int i = 0; i < 150; ++i) {
        auto a = random_poly(rng, 3, 4, 3);
        auto b = random_poly(rng, 3, 4, 3);
        for (std::size_t var : {0u, 1u}) {
            if (a.is_zero() || b.is_zero()) continue;
            auto prs = poly_resultant(Q, a, b, var);
            auto syl = test_oracles::sylvester_resultant(Q, a, b, var);
            CHECK(prs == syl);
            if (!prs.is_zero()) ++nontrivial;
        }
    }
    CHECK(nontrivial > 100);
}

TEST_CASE("resultant swap sign law") {
    std::mt19937 rng(555);
    for (int i = 0; i < 60; ++i) {
        auto a = random_poly(rng, 3, 3, 3);
        auto b = random_poly(rng, 3, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        auto da = a.degree_in(1), db = b.degree_in(1);
        if (!da || !db) continue;
        auto rab = poly_resultant(Q, a, b, 1);
        auto rba = poly_resultant(Q, b, a, 1);
        bool odd = (*da % 2) && (*db % 2);
        CHECK(rab == (odd ? poly_neg(Q, rba) : rba));
    }
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    // common root: (y - x) shared
    auto r = poly_resultant(Q, P("(y - x)*(y + 1)"), P("(y - x)*(y - 2)"), 1);
    CHECK(r.is_zero());
    // no common root for generic lines
    auto r2 = poly_resultant(Q, P("y - x"), P("y - x - 1"), 1);
    CHECK_FALSE(r2.is_zero());
}

TEST_CASE("elimination over Q(a): generic smoothness of y^2 = x^3 + a") {
    DegeneracyCollector coll;
    RatFuncField Ka(&coll);
    std::vector<std::string> vars{"x", "y"};
    // g = y^2 - x^3 - a over Q(a)
    Poly<RatFunc> g(vars);
    {
        Monomial y2(2), x3(2), one(2);
        y2.exp[1] = 2;
        x3.exp[0] = 3;
        g.add_term(Ka, y2, Ka.one());
        g.add_term(Ka, x3, Ka.neg(Ka.one()));
        g.add_term(Ka, one, Ka.neg(Ka.symbol()));
    }
    Poly<RatFunc> gy = poly_derivative(Ka, g, 1);
    auto gcd = gcd_subresultant(Ka, g, gy, 1);
    CHECK(gcd.is_constant());

    // the discriminant-resultant in x of x^3 + a witnesses the value a = 0
    auto res = poly_resultant(Ka, g, gy, 1);
    CHECK_FALSE(res.is_zero());
    bool saw_a = false;
    for (const auto& w : coll.entries())
        if (w.c.size() == 2 && w.c[0].is_zero()) saw_a = true;
    // collector may or may not have needed the witness here; the full check
    // happens in the fiber tests. Just ensure recording is well-formed.
    for (const auto& w : coll.entries()) CHECK(w.c.size() >= 2);
    (void)saw_a;
}
