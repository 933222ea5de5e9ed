#include "bifurcata/value_class.hpp"

#include <algorithm>

#include "bifurcata/errors.hpp"

namespace bifurcata {

namespace {
const RatField Q;
}

ValueClass ValueClass::from_minpoly(UPoly<Rat> m) {
    upoly_trim(Q, m);
    if (m.c.size() < 2) throw StructuralError("value class needs a minpoly of degree >= 1");
    m = upoly_monic(Q, m);
    ValueClass c{std::move(m), std::nullopt};
    if (c.minpoly.c.size() == 2) c.rational_hint = -c.minpoly.c[0];
    return c;
}

ValueClass ValueClass::from_rational(const Rat& r) {
    UPoly<Rat> m;
    m.c = {-r, Rat(1)};
    return ValueClass{std::move(m), r};
}

bool value_class_less(const ValueClass& a, const ValueClass& b) {
    return upoly_rat_cmp(a.minpoly, b.minpoly) < 0;
}

std::string value_class_to_string(const ValueClass& c) {
    if (c.rational_hint) return c.rational_hint->to_string();
    return "root of " + upoly_to_string(Q, c.minpoly, "a");
}

bool value_class_divides(const ValueClass& cls, const UPoly<Rat>& m) {
    if (m.c.size() < cls.minpoly.c.size()) return false;
    auto [q, r] = upoly_divmod(Q, m, cls.minpoly);
    return upoly_is_zero(Q, r);
}

std::vector<UPoly<Rat>> gcd_free_basis(const std::vector<UPoly<Rat>>& polys) {
    std::vector<UPoly<Rat>> basis;  // invariant: pairwise coprime, squarefree, monic
    for (const auto& raw : polys) {
        UPoly<Rat> p = raw;
        upoly_trim(Q, p);
        if (p.c.size() < 2) continue;
        p = upoly_squarefree_part(Q, p);
        // peel off the part of p shared with existing basis elements
        std::vector<UPoly<Rat>> next;
        next.reserve(basis.size() + 1);
        for (auto& b : basis) {
            if (p.c.size() < 2) {
                next.push_back(std::move(b));
                continue;
            }
            UPoly<Rat> g = upoly_gcd(Q, p, b);
            if (g.c.size() < 2) {
                next.push_back(std::move(b));
                continue;
            }
            UPoly<Rat> b_rest = upoly_exact_div(Q, b, g);
            if (b_rest.c.size() >= 2) next.push_back(upoly_monic(Q, b_rest));
            next.push_back(g);
            p = upoly_exact_div(Q, p, g);
        }
        if (p.c.size() >= 2) next.push_back(upoly_monic(Q, p));
        basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end(),
              [](const UPoly<Rat>& a, const UPoly<Rat>& b) { return upoly_rat_cmp(a, b) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [](const UPoly<Rat>& a, const UPoly<Rat>& b) {
                                return upoly_rat_cmp(a, b) == 0;
                            }),
                basis.end());
    return basis;
}

}  // namespace bifurcata
