#ifndef BIFURCATA_FIBER_EULER_HPP
#define BIFURCATA_FIBER_EULER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bifurcata/dynext.hpp"
#include "bifurcata/elim.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/ratfunc.hpp"
#include "bifurcata/value_class.hpp"

namespace bifurcata {

// Compactly supported Euler characteristic of affine plane curves over an
// algebraically closed field of characteristic zero, by fibering over the
// x-line: off a finite bad set B the curve is an n-sheeted unramified cover
// of the punctured line (chi_c multiplies along such covers), and over each
// bad point the fiber is the finite set of distinct roots there. Conventions:
// chi_c(A^1) = 1, chi_c(point) = 1, chi_c(G_m) = 0.
//
// The same template runs over Q, over Q(a) for the generic fiber (where the
// instrumented field records every structural nonzero certificate as a
// degeneracy witness in the value symbol), and over dynamic extensions
// Q[alpha]/(m) for algebraic special values.
//
// Completeness of the collected witnesses: every control-flow decision in
// these algorithms is a degree/leading-coefficient read or an inversion, and
// each such read certifies the element it relies on. Addition, multiplication
// and substitution commute with any specialization a -> a0 term by term, so
// if a0 is not a root of any recorded witness, the specialized run makes the
// same decisions and produces the same integer. The candidate set therefore
// provably contains every value where the fiber's chi differs from the
// generic one (it may contain more; extra candidates are harmless and are
// filtered by comparing invariants).

struct DistinctRootCount {
    long long count = 0;           // sum over branches of deg(branch) * #distinct roots
    long long vertical_degree = 0; // total degree of branches where g(x0, .) vanished
    bool has_vertical = false;
};

// Sum over the roots x0 of q (squarefree, univariate in proj_var) of the
// number of distinct fib_var-roots of g(x0, .), computed per dynamic
// evaluation branch. A branch where g(x0, .) is identically zero is flagged
// as a vertical line instead of contributing a count.
template <class F>
DistinctRootCount distinct_root_count(const F& K, const PolyOf<F>& q, const PolyOf<F>& g,
                                      std::size_t proj_var, std::size_t fib_var) {
    DistinctRootCount out;
    UPoly<typename F::Elem> qu = poly_to_upoly(K, q, proj_var);
    if (qu.c.size() <= 1) return out;  // constants have no roots

    {
        auto qd = upoly_derivative(K, qu);
        auto gg = upoly_gcd(K, qu, qd);
        if (gg.c.size() > 1)
            throw PreconditionError("distinct_root_count: q is not squarefree");
    }
    UPoly<typename F::Elem> qm = upoly_monic(K, qu);

    // coefficients of g as a polynomial in fib_var, each univariate in proj_var
    auto gview = poly_uview(K, g, fib_var);
    std::vector<UPoly<typename F::Elem>> coeffs;
    coeffs.reserve(gview.c.size());
    for (const auto& cp : gview.c) coeffs.push_back(poly_to_upoly(K, cp, proj_var));

    auto branches = d5_run(K, qm, [&](const DynExtField<F>& D) -> std::optional<long long> {
        auto x0 = D.generator();
        UPoly<typename DynExtField<F>::Elem> h;
        for (const auto& cj : coeffs) {
            auto val = D.zero();
            for (std::size_t i = cj.c.size(); i-- > 0;)
                val = D.add(D.mul(val, x0), D.from_base(cj.c[i]));
            h.c.push_back(std::move(val));
        }
        upoly_trim(D, h);
        if (h.c.empty()) return std::nullopt;  // vertical line through this branch
        // pin the degree of h on this branch before structure depends on it
        upoly_certify_lc(D, h);
        auto sf = upoly_squarefree_part(D, h);
        return static_cast<long long>(sf.c.size()) - 1;
    });

    for (const auto& [mod, r] : branches) {
        long long bdeg = static_cast<long long>(mod.c.size()) - 1;
        if (r) {
            out.count += bdeg * *r;
        } else {
            out.has_vertical = true;
            out.vertical_degree += bdeg;
        }
    }
    return out;
}

// chi_c of the affine curve {f = 0} in the plane of (proj_var, fib_var) over
// the algebraic closure of K's field.
template <class F>
long long euler_affine_curve_chi(const F& K, const PolyOf<F>& f, std::size_t proj_var = 0,
                                 std::size_t fib_var = 1) {
    if (f.is_zero())
        throw DegenerateInputError("euler characteristic of the zero locus of 0 (the whole plane)");
    if (f.is_constant()) return 0;  // nonzero constant: empty curve

    // (1) split off the content: f = c(x) * g with g primitive in fib_var
    auto [c, g] = content_primitive(K, f, fib_var);
    // (2) pass to the squarefree part in fib_var (same zero set)
    auto dg = g.degree_in(fib_var);
    if (dg && *dg >= 1) g = squarefree_part(K, g, fib_var);

    long long chi = 0;
    dg = g.degree_in(fib_var);
    const long long n = dg ? static_cast<long long>(*dg) : 0;
    if (n >= 1) {
        // (3) bad set: roots of lc(g) * Res(g, dg/dy)
        PolyOf<F> lc = poly_lc_in(K, g, fib_var);
        PolyOf<F> res = poly_resultant(K, g, poly_derivative(K, g, fib_var), fib_var);
        check_internal(!res.is_zero(),
                       "vanishing discriminant-resultant of a squarefree primitive polynomial");
        PolyOf<F> delta = poly_mul(K, lc, res);
        PolyOf<F> bad = squarefree_part(K, delta, proj_var);
        auto dbad = bad.degree_in(proj_var);
        const long long b = dbad ? static_cast<long long>(*dbad) : 0;
        auto drc = distinct_root_count(K, bad, g, proj_var, fib_var);
        check_internal(!drc.has_vertical,
                       "vertical line inside the zero set of a fib_var-primitive polynomial");
        chi += n * (1 - b) + drc.count;
    }

    // (4) vertical components from the content, minus the overlap
    if (!c.is_constant()) {
        PolyOf<F> cs = squarefree_part(K, c, proj_var);
        auto dcs = cs.degree_in(proj_var);
        const long long m = dcs ? static_cast<long long>(*dcs) : 0;
        if (m >= 1) {
            auto drc = distinct_root_count(K, cs, g, proj_var, fib_var);
            check_internal(!drc.has_vertical,
                           "vertical line overlapping the fib_var-primitive factor");
            chi += m - drc.count;
        }
    }
    return chi;
}

// chi of {f = 0} over Q together with the degeneracy witnesses collected
// during the run (empty over plain Q: nothing can degenerate further).
struct EulerResult {
    long long chi = 0;
    std::vector<UPoly<Rat>> degeneracy_polys;
};

EulerResult euler_affine_curve(const Poly<Rat>& f);

// chi of the fiber {f = a0} for an exact rational value.
long long euler_fiber_rational(const Poly<Rat>& f, const Rat& a0);

// chi of {f = alpha} for the roots alpha of cls.minpoly. Dynamic evaluation
// may split the class; the result lists each final subclass with its chi
// (Galois-conjugate roots always share one).
std::vector<std::pair<ValueClass, long long>> euler_fiber(const Poly<Rat>& f,
                                                          const ValueClass& cls);

// Generic-fiber Euler characteristic over Q(a) and the finite candidate set
// provably containing every value where the fiber chi jumps. Candidates merge
// the degeneracy-witness roots with the critical values when the Jacobian
// ideal is zero-dimensional.
struct GenericEuler {
    long long chi_gen = 0;
    std::vector<UPoly<Rat>> degeneracy_polys;
    std::vector<ValueClass> candidates;
};

GenericEuler euler_generic(const Poly<Rat>& f);

}  // namespace bifurcata

#endif
