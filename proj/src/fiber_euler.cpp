#include "bifurcata/fiber_euler.hpp"

#include <algorithm>

#include "bifurcata/groebner.hpp"

namespace bifurcata {

namespace {

const RatField Q;

void require_plane(const Poly<Rat>& f) {
    if (f.nvars() != 2)
        throw StructuralError("fiber invariants are defined for two-variable polynomials");
}

}  // namespace

EulerResult euler_affine_curve(const Poly<Rat>& f) {
    require_plane(f);
    return {euler_affine_curve_chi(Q, f), {}};
}

long long euler_fiber_rational(const Poly<Rat>& f, const Rat& a0) {
    require_plane(f);
    if (f.is_constant()) throw PreconditionError("euler_fiber: f must be nonconstant");
    auto shifted = poly_sub(Q, f, poly_const(Q, f.vars(), a0));
    return euler_affine_curve_chi(Q, shifted);
}

std::vector<std::pair<ValueClass, long long>> euler_fiber(const Poly<Rat>& f,
                                                          const ValueClass& cls) {
    require_plane(f);
    if (f.is_constant()) throw PreconditionError("euler_fiber: f must be nonconstant");
    if (cls.degree() == 1)
        return {{cls, euler_fiber_rational(f, *cls.rational_hint)}};

    auto branches = d5_run(Q, cls.minpoly, [&](const DynExtField<RatField>& D) -> long long {
        auto fD = poly_map(D, f, [&](const Rat& c) { return D.from_rat(c); });
        fD = poly_sub(D, fD, poly_const(D, f.vars(), D.generator()));
        return euler_affine_curve_chi(D, fD);
    });

    std::vector<std::pair<ValueClass, long long>> out;
    out.reserve(branches.size());
    for (auto& [mod, chi] : branches) out.emplace_back(ValueClass::from_minpoly(mod), chi);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return value_class_less(a.first, b.first);
    });
    return out;
}

GenericEuler euler_generic(const Poly<Rat>& f) {
    require_plane(f);
    if (f.is_constant()) throw PreconditionError("euler_generic: f must be nonconstant");

    DegeneracyCollector collector;
    RatFuncField Ka(&collector);
    auto fa = poly_map(Ka, f, [&](const Rat& c) { return Ka.from_rat(c); });
    fa = poly_sub(Ka, fa, poly_const(Ka, f.vars(), Ka.symbol()));

    GenericEuler out;
    out.chi_gen = euler_affine_curve_chi(Ka, fa);
    out.degeneracy_polys = collector.entries();

    std::vector<UPoly<Rat>> pool = out.degeneracy_polys;
    // merge with the critical values when they are defined
    try {
        for (const auto& e : critical_spectrum(f).entries) pool.push_back(e.value_class.minpoly);
    } catch (const NonIsolatedError&) {
        // chi data stays valid without the discriminant; callers that need
        // mu/lambda surface the error themselves
    }
    for (const auto& m : gcd_free_basis(pool)) out.candidates.push_back(ValueClass::from_minpoly(m));
    return out;
}

}  // namespace bifurcata
