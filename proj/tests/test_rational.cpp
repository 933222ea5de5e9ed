#include "doctest.h"

#include "bifurcata/prime_field.hpp"
#include "bifurcata/rational.hpp"

#include <random>

using namespace bifurcata;

TEST_CASE("rationals are canonical") {
    Rat a = Rat::from_string("2/4");
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "1/2");

    Rat z = Rat::from_string("-0/7");
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");
    CHECK(z.denominator() == 1);

    Rat n = Rat::from_string("-6/4");
    CHECK(n.to_string() == "-3/2");
    CHECK(n.denominator() == 2);
}

TEST_CASE("rational arithmetic") {
    Rat a(1, 3), b(1, 6);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "2");
    CHECK_THROWS_AS(a / Rat(0), StructuralError);
    CHECK_THROWS_AS(Rat(0).inverse(), StructuralError);
    CHECK(Rat::from_string("7").is_integer());
    CHECK_THROWS_AS(Rat::from_string("1/0"), StructuralError);
}

TEST_CASE("rat_gcd for content extraction") {
    CHECK(rat_gcd(Rat(4), Rat(6)).to_string() == "2");
    CHECK(rat_gcd(Rat(1, 2), Rat(1, 3)).to_string() == "1/6");
    CHECK(rat_gcd(Rat(0), Rat(-5)).to_string() == "5");
}

TEST_CASE("prime field construction checks primality") {
    CHECK_THROWS_AS(PrimeField(4), PreconditionError);
    CHECK_THROWS_AS(PrimeField(1), PreconditionError);
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(1009));
}

TEST_CASE("prime field arithmetic and inversion") {
    PrimeField F(7);
    auto a = F.from_int(5), b = F.from_int(4);
    CHECK(F.add(a, b).residue == 2);
    CHECK(F.mul(a, b).residue == 6);
    CHECK(F.sub(b, a).residue == 6);
    for (long r = 1; r < 7; ++r) {
        auto x = F.from_int(r);
        CHECK(F.mul(x, F.inv(x)).residue == 1);
    }
    CHECK_THROWS_AS(F.inv(F.zero()), StructuralError);
}

TEST_CASE("prime field reduction of rationals") {
    PrimeField F(5);
    // 3/2 mod 5 = 3 * inv(2) = 3 * 3 = 9 = 4
    CHECK(F.from_rat(Rat(3, 2)).residue == 4);
    CHECK_THROWS_AS(F.from_rat(Rat(1, 5)), PreconditionError);
    CHECK(F.from_rat(Rat(-1)).residue == 4);
}
