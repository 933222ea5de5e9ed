#include "bifurcata/infinity.hpp"

#include <algorithm>

namespace bifurcata {

namespace {

const RatField Q;

void require_input(const Poly<Rat>& f) {
    if (f.nvars() != 2)
        throw StructuralError("fiber invariants are defined for two-variable polynomials");
    if (f.is_constant())
        throw PreconditionError("a nonconstant polynomial map is required");
}

// mu shared by all roots of cls, from a spectrum already in hand.
long long mu_from_spectrum(const CritSpectrum& spec, const ValueClass& cls) {
    for (const auto& e : spec.entries) {
        if (value_class_divides(cls, e.value_class.minpoly)) return e.mu_per_root;
        UPoly<Rat> g = upoly_gcd(Q, cls.minpoly, e.value_class.minpoly);
        if (g.c.size() > 1)
            throw StructuralError(
                "value class straddles a critical class; refine it before asking for mu");
    }
    return 0;
}

std::vector<ValueClass> sorted_unique(std::vector<ValueClass> v) {
    std::sort(v.begin(), v.end(), value_class_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

AnalysisReport analyze(const Poly<Rat>& f) {
    require_input(f);

    AnalysisReport rep;
    rep.f = f;

    GenericEuler gen = euler_generic(f);
    rep.chi_gen = gen.chi_gen;

    CritSpectrum spec;
    try {
        spec = critical_spectrum(f);
    } catch (const NonIsolatedError& e) {
        rep.isolated = false;
        rep.warnings.push_back(std::string("non-isolated singularities: ") + e.what() +
                               "; mu and lambda are omitted, chi data is unaffected");
    }
    rep.mu_total = spec.mu_total;

    for (const auto& cls : gen.candidates) {
        // euler_fiber refines the class whenever a split is discovered
        for (auto& [sub, chi] : euler_fiber(f, cls)) {
            FiberInvariants inv;
            inv.value = sub;
            inv.chi_a = chi;
            if (rep.isolated) {
                long long mu = mu_from_spectrum(spec, sub);
                long long lambda = kSignD * (chi - rep.chi_gen) - mu;
                long long chi_inf = rep.chi_gen - chi + kSignD * mu;
                check_internal(chi - rep.chi_gen == kSignD * (mu + lambda),
                               "Euler balance violated (sign convention tripwire)");
                check_internal(chi_inf == kSignDm1 * lambda,
                               "chi at infinity disagrees with (-1)^(d-1) lambda");
                if (mu == 0)
                    check_internal(chi_inf == rep.chi_gen - chi,
                                   "noncritical value: chi at infinity must be the chi jump");
                inv.mu_a = mu;
                inv.lambda_a = lambda;
                inv.chi_infinity = chi_inf;
                inv.is_critical = mu > 0;
            }
            rep.fibers.push_back(std::move(inv));
        }
    }
    std::sort(rep.fibers.begin(), rep.fibers.end(), [](const auto& a, const auto& b) {
        return value_class_less(a.value, b.value);
    });

    for (const auto& inv : rep.fibers) {
        if (inv.chi_a != rep.chi_gen) rep.euler_jump_set.push_back(inv.value);
        if (inv.is_critical) rep.discriminant.push_back(inv.value);
        if ((inv.lambda_a && *inv.lambda_a != 0) || inv.is_critical)
            rep.lambda_set.push_back(inv.value);
    }
    rep.euler_jump_set = sorted_unique(rep.euler_jump_set);
    rep.discriminant = sorted_unique(rep.discriminant);
    rep.lambda_set = sorted_unique(rep.lambda_set);

    if (rep.isolated) {
        // jump set inside lambda set: mu + lambda != 0 forces one of them
        for (const auto& c : rep.euler_jump_set) {
            bool inside = std::binary_search(rep.lambda_set.begin(), rep.lambda_set.end(), c,
                                             value_class_less);
            check_internal(inside, "euler jump set escaped the lambda bifurcation set");
        }
        long long mu_sum = 0, lambda_sum = 0;
        for (const auto& inv : rep.fibers) {
            mu_sum += *inv.mu_a * inv.value.degree();
            lambda_sum += *inv.lambda_a * inv.value.degree();
        }
        check_internal(mu_sum == spec.mu_total,
                       "degree-weighted mu over candidates differs from the spectrum total");
        rep.consistency_12 = rep.chi_gen == 1 + kSignDm1 * (mu_sum + lambda_sum);
    } else {
        rep.consistency_12 = false;
        rep.lambda_set.clear();
        rep.discriminant.clear();
    }
    return rep;
}

long long milnor_at(const Poly<Rat>& f, const ValueClass& cls) {
    require_input(f);
    return mu_from_spectrum(critical_spectrum(f), cls);
}

long long milnor_at(const Poly<Rat>& f, const Rat& a0) {
    return milnor_at(f, ValueClass::from_rational(a0));
}

namespace {

// chi_a for a class required to carry a single value of chi.
long long chi_single(const Poly<Rat>& f, const ValueClass& cls, long long /*chi_gen*/) {
    auto refined = euler_fiber(f, cls);
    long long chi = refined.front().second;
    for (const auto& [sub, c] : refined)
        if (c != chi)
            throw StructuralError(
                "value class mixes fibers with different Euler characteristics; refine it");
    return chi;
}

}  // namespace

long long lambda_at(const Poly<Rat>& f, const ValueClass& cls) {
    require_input(f);
    CritSpectrum spec = critical_spectrum(f);  // surfaces NON-ISOLATED
    long long chi_gen = euler_generic(f).chi_gen;
    long long chi = chi_single(f, cls, chi_gen);
    return kSignD * (chi - chi_gen) - mu_from_spectrum(spec, cls);
}

long long lambda_at(const Poly<Rat>& f, const Rat& a0) {
    return lambda_at(f, ValueClass::from_rational(a0));
}

long long euler_at_infinity(const Poly<Rat>& f, const ValueClass& cls) {
    require_input(f);
    CritSpectrum spec = critical_spectrum(f);
    long long chi_gen = euler_generic(f).chi_gen;
    long long chi = chi_single(f, cls, chi_gen);
    long long mu = mu_from_spectrum(spec, cls);
    long long chi_inf = chi_gen - chi + kSignD * mu;
    long long lambda = kSignD * (chi - chi_gen) - mu;
    check_internal(chi_inf == kSignDm1 * lambda,
                   "chi at infinity disagrees with (-1)^(d-1) lambda");
    return chi_inf;
}

long long euler_at_infinity(const Poly<Rat>& f, const Rat& a0) {
    return euler_at_infinity(f, ValueClass::from_rational(a0));
}

std::vector<ValueClass> euler_jump_set(const Poly<Rat>& f) {
    require_input(f);
    GenericEuler gen = euler_generic(f);
    std::vector<ValueClass> jumps;
    for (const auto& cls : gen.candidates)
        for (auto& [sub, chi] : euler_fiber(f, cls))
            if (chi != gen.chi_gen) jumps.push_back(sub);
    return sorted_unique(std::move(jumps));
}

std::vector<ValueClass> lambda_bifurcation_set(const Poly<Rat>& f) {
    AnalysisReport rep = analyze(f);
    if (!rep.isolated)
        throw NonIsolatedError("lambda bifurcation set requires isolated singularities");
    return rep.lambda_set;
}

ConsistencyReport global_consistency(const Poly<Rat>& f) {
    AnalysisReport rep = analyze(f);
    if (!rep.isolated)
        throw NonIsolatedError("global consistency requires isolated singularities");
    ConsistencyReport out;
    out.chi_gen = rep.chi_gen;
    for (const auto& inv : rep.fibers) {
        out.mu_sum += *inv.mu_a * inv.value.degree();
        out.lambda_sum += *inv.lambda_a * inv.value.degree();
    }
    out.rhs = 1 + kSignDm1 * (out.mu_sum + out.lambda_sum);
    out.holds = rep.consistency_12;
    check_internal(out.holds == (out.chi_gen == out.rhs), "consistency report mismatch");
    return out;
}

}  // namespace bifurcata
