#include "doctest.h"

#include "bifurcata/parser.hpp"
#include "bifurcata/poly.hpp"

using namespace bifurcata;

namespace {
RatField Q;
Poly<Rat> P(const std::string& s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("ring ops: spec examples") {
    // (x+y) + (x-y) = 2x
    CHECK(poly_add(Q, P("x + y"), P("x - y")) == P("2*x"));
    // (x+y)^2 = x^2 + 2xy + y^2
    CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
    // x*(xy - 1) = x^2 y - x
    CHECK(P("x*(x*y - 1)") == P("x^2*y - x"));
}

TEST_CASE("mismatched variable rings are a structural error") {
    Poly<Rat> a(std::vector<std::string>{"x", "y"});
    Poly<Rat> b(std::vector<std::string>{"u", "v"});
    CHECK_THROWS_AS(poly_add(Q, a, b), StructuralError);
}

TEST_CASE("partial derivatives: spec examples") {
    CHECK(poly_derivative(Q, P("x^2*y - x"), 0) == P("2*x*y - 1"));
    CHECK(poly_derivative(Q, P("x^2*y - x"), 1) == P("x^2"));
    CHECK(poly_derivative(Q, P("5"), 0).is_zero());
    CHECK_THROWS_AS(poly_derivative(Q, P("x"), 7), StructuralError);
}

TEST_CASE("substitution: spec examples") {
    auto f = P("x^2*y - x");
    std::map<std::size_t, Poly<Rat>> b0{{0, P("0")}};
    CHECK(poly_substitute(Q, f, b0).is_zero());
    std::map<std::size_t, Poly<Rat>> b1{{1, P("1")}};
    CHECK(poly_substitute(Q, f, b1) == P("x^2 - x"));
    std::map<std::size_t, Poly<Rat>> b2{{0, P("y + 2")}};
    CHECK(poly_substitute(Q, P("x^2"), b2) == P("(y + 2)^2"));
    std::map<std::size_t, Poly<Rat>> bad{{9, P("1")}};
    CHECK_THROWS_AS(poly_substitute(Q, f, bad), StructuralError);
}

TEST_CASE("degree sentinels") {
    CHECK_FALSE(P("0").total_degree().has_value());
    CHECK_FALSE(P("0").degree_in(0).has_value());
    CHECK(P("x^2*y").total_degree() == 3);
    CHECK(P("x^2*y").degree_in(1) == 1);
}

TEST_CASE("parser rejects what the grammar forbids") {
    CHECK_THROWS_AS(P("x^y"), ParseError);
    CHECK_THROWS_AS(P("2x"), ParseError);        // implicit multiplication
    CHECK_THROWS_AS(P("x(x + 1)"), ParseError);  // implicit multiplication
    CHECK_THROWS_AS(P("z + 1"), ParseError);
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("x / y"), ParseError);
    CHECK_THROWS_AS(P("x^-2"), ParseError);
    try {
        P("x +\n* y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("parser accepts the documented grammar") {
    CHECK(P("1/2*x + 3") == poly_add(Q, poly_scale(Q, poly_var(Q, {"x", "y"}, 0), Rat(1, 2)),
                                     poly_const(Q, {"x", "y"}, Rat(3))));
    CHECK(P("-x^2") == poly_neg(Q, P("x^2")));
    CHECK(P("- x ^ 2") == poly_neg(Q, P("x^2")));  // whitespace-insensitive
    CHECK(P("x^0") == P("1"));
    CHECK(P("((x))") == P("x"));
    CHECK(P("2^3") == P("8"));
}

TEST_CASE("render/parse round trip on canonical form") {
    for (const char* s : {"x^2*y - x", "0", "1/2", "-x + 1", "x^4 + 2*x^2*y^2 + y^4 - 7",
                          "3*x*y", "-2*x^3*y^2 + 5/3*y - 4"}) {
        auto p = P(s);
        auto text = poly_to_string(p);
        CHECK(P(text) == p);
        // rendering is canonical: a second round trip is byte-identical
        CHECK(poly_to_string(P(text)) == text);
    }
}
