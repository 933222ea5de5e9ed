#include "doctest.h"

#include "bifurcata/dynext.hpp"
#include "bifurcata/ratfunc.hpp"

using namespace bifurcata;

namespace {
RatField Q;

UPoly<Rat> up(std::initializer_list<long> coeffs) {
    UPoly<Rat> p;
    for (long c : coeffs) p.c.emplace_back(c);
    upoly_trim(Q, p);
    return p;
}
}  // namespace

TEST_CASE("univ_split: x^2 - 1 at witness x - 1") {
    auto [a, b] = univ_split(Q, up({-1, 0, 1}), up({-1, 1}));
    CHECK(upoly_eq(Q, a, up({-1, 1})));
    CHECK(upoly_eq(Q, b, up({1, 1})));
}

TEST_CASE("univ_split: x^3 - x at witness x") {
    auto [c, d] = univ_split(Q, up({0, -1, 0, 1}), up({0, 1}));
    CHECK(upoly_eq(Q, c, up({0, 1})));
    CHECK(upoly_eq(Q, d, up({-1, 0, 1})));
}

TEST_CASE("univ_split rejects invertible witnesses") {
    // q = x^2 - 2 is irreducible: every nonzero element is invertible
    CHECK_THROWS_AS(univ_split(Q, up({-2, 0, 1}), up({0, 1})), StructuralError);
    CHECK_THROWS_AS(univ_split(Q, up({-2, 0, 1}), up({})), StructuralError);
}

TEST_CASE("irreducible modulus: inverses always exist and multiply to 1") {
    DynExtField<RatField> D(Q, up({-2, 0, 1}));  // Q[x]/(x^2 - 2)
    // invert sqrt2 + 3:
    auto e = upoly_add(Q, D.generator(), D.from_int(3));
    auto einv = D.inv(e);
    CHECK(D.is_one(D.mul(e, einv)));
    // the generator squares to 2
    auto g2 = D.mul(D.generator(), D.generator());
    CHECK(D.eq(g2, D.from_int(2)));
}

TEST_CASE("zero divisor inversion raises a split carrying the factorization") {
    DynExtField<RatField> D(Q, up({-1, 0, 1}));  // Q[x]/(x^2 - 1)
    auto e = upoly_sub(Q, D.generator(), D.one());  // x - 1, a zero divisor
    bool split_seen = false;
    try {
        (void)D.inv(e);
    } catch (SplitEvent<RatField>& ev) {
        split_seen = true;
        CHECK(ev.field_id == D.id());
        CHECK(upoly_eq(Q, ev.q1, up({-1, 1})));
        CHECK(upoly_eq(Q, ev.q2, up({1, 1})));
    }
    CHECK(split_seen);
}

TEST_CASE("certify_nonzero splits zero divisors, accepts units") {
    DynExtField<RatField> D(Q, up({-1, 0, 1}));
    CHECK_NOTHROW(D.certify_nonzero(D.from_int(5)));
    auto e = upoly_sub(Q, D.generator(), D.one());
    CHECK_THROWS_AS(D.certify_nonzero(e), SplitEvent<RatField>);
}

TEST_CASE("d5_run replays the computation on every branch") {
    // over Q[x]/(x^3 - x), computing 1/(x - 1)... splits until each branch is
    // a field; count branch degrees
    auto results = d5_run(Q, up({0, -1, 0, 1}), [&](const DynExtField<RatField>& D) -> long {
        // force enough splits: certify x, then x - 1 (zero branches skip)
        auto g = D.generator();
        if (!D.is_zero(g)) D.certify_nonzero(g);
        auto e = upoly_sub(Q, g, D.one());
        if (!D.is_zero(e)) D.certify_nonzero(e);
        return static_cast<long>(D.extension_degree());
    });
    // branches must partition the root set: total degree 3
    long total = 0;
    for (auto& [mod, deg] : results) total += deg;
    CHECK(total == 3);
    CHECK(results.size() == 3);  // x, x-1, x+1 all separated
}

TEST_CASE("d5_run passes through foreign splits") {
    // nested towers: the inner run must rethrow splits of the outer modulus
    auto outer = d5_run(Q, up({-1, 0, 1}), [&](const DynExtField<RatField>& D1) -> long {
        using D1Field = DynExtField<RatField>;
        // inner tower over D1 with modulus t^2 - generator (t a new symbol)
        UPoly<D1Field::Elem> inner_mod;
        inner_mod.c = {D1.neg(D1.generator()), D1.zero(), D1.one()};
        auto inner = d5_run(D1, inner_mod, [&](const DynExtField<D1Field>& D2) -> long {
            // inverting (generator of D1) inside D2 arithmetic forces the
            // outer split x^2-1 = (x-1)(x+1) to propagate through d5_run(D2)
            auto lifted = D2.from_base(D1.generator());
            auto shifted = D2.sub(lifted, D2.one());
            // zero divisor in D1 on the unsplit branch: certifying it forces
            // the outer split x^2-1 = (x-1)(x+1) through this inner run
            if (!D2.is_zero(shifted)) D2.certify_nonzero(shifted);
            return 1;
        });
        long acc = 0;
        for (auto& [m, v] : inner) acc += static_cast<long>(v);
        return acc;
    });
    CHECK(outer.size() == 2);
}

TEST_CASE("DynExt over Q(a)") {
    RatFuncField Ka;
    // modulus x^3 + a over Q(a)
    UPoly<RatFunc> mod;
    mod.c = {Ka.symbol(), Ka.zero(), Ka.zero(), Ka.one()};
    DynExtField<RatFuncField> D(Ka, mod);
    // generator^3 = -a
    auto g3 = D.mul(D.generator(), D.mul(D.generator(), D.generator()));
    CHECK(D.eq(g3, D.from_base(Ka.neg(Ka.symbol()))));
    // generator is invertible (a != 0 generically)
    auto gi = D.inv(D.generator());
    CHECK(D.is_one(D.mul(gi, D.generator())));
}
