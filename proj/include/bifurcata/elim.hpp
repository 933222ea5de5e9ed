#ifndef BIFURCATA_ELIM_HPP
#define BIFURCATA_ELIM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bifurcata/errors.hpp"
#include "bifurcata/poly.hpp"

namespace bifurcata {

// Elimination primitives on sparse multivariate polynomials, generic over the
// coefficient field tower. All structural reads (degrees, leading
// coefficients) pass through certification hooks so that instrumented fields
// can collect degeneracy witnesses and dynamic extensions can branch.
//
// Resultant convention: Sylvester determinant with the first argument's
// coefficients in the top rows, true (not formal) degrees; in particular
// Res(p, c) = c^deg(p) for a constant c, and Res(p, q) = 0 when either input
// is the zero polynomial (both zero is a degenerate-input error).

template <class F>
void poly_certify_nonzero(const F& K, const PolyOf<F>& p) {
    check_internal(!p.is_zero(), "poly_certify_nonzero: zero polynomial");
    K.certify_nonzero(p.terms().rbegin()->second);
}

template <class F>
void view_certify_lc(const F& K, const UPoly<PolyOf<F>>& v) {
    if (!v.c.empty()) poly_certify_nonzero(K, v.c.back());
}

namespace detail {

template <class F>
void view_trim(UPoly<PolyOf<F>>& v) {
    while (!v.c.empty() && v.c.back().is_zero()) v.c.pop_back();
}

// Pseudo-remainder of views in the main variable: lc(B)^(dA-dB+1) * A mod B,
// staying inside the coefficient ring.
template <class F>
UPoly<PolyOf<F>> view_prem(const F& K, UPoly<PolyOf<F>> A, const UPoly<PolyOf<F>>& B) {
    check_internal(!B.c.empty(), "pseudo-remainder by zero view");
    if (A.c.size() < B.c.size()) return A;
    const PolyOf<F>& lb = B.c.back();
    std::size_t steps = A.c.size() - B.c.size() + 1;
    std::size_t done = 0;
    while (!A.c.empty() && A.c.size() >= B.c.size()) {
        PolyOf<F> la = A.c.back();
        std::size_t shift = A.c.size() - B.c.size();
        UPoly<PolyOf<F>> t;
        t.c.assign(A.c.size() - 1, PolyOf<F>(la.vars()));
        for (std::size_t i = 0; i + 1 < A.c.size(); ++i) t.c[i] = poly_mul(K, A.c[i], lb);
        for (std::size_t i = 0; i + 1 < B.c.size(); ++i)
            t.c[shift + i] = poly_sub(K, t.c[shift + i], poly_mul(K, la, B.c[i]));
        view_trim<F>(t);
        A = std::move(t);
        ++done;
    }
    for (; done < steps; ++done)
        for (auto& e : A.c) e = poly_mul(K, e, lb);
    return A;
}

template <class F>
UPoly<PolyOf<F>> view_scale_div(const F& K, const UPoly<PolyOf<F>>& v, const PolyOf<F>& d);

}  // namespace detail

// Exact quotient p / q; division must leave no remainder.
template <class F>
PolyOf<F> poly_exact_div(const F& K, const PolyOf<F>& p, const PolyOf<F>& q) {
    poly_check_same_ring(K, p, q);
    if (q.is_zero()) throw StructuralError("exact division by zero polynomial");
    poly_certify_nonzero(K, q);
    PolyOf<F> rem = p;
    PolyOf<F> quot(p.vars());
    const Monomial& lmq = q.terms().rbegin()->first;
    const auto& lcq = q.terms().rbegin()->second;
    auto lcq_inv = K.inv(lcq);
    while (!rem.is_zero()) {
        const Monomial& lmr = rem.terms().rbegin()->first;
        check_internal(mono_divides(lmq, lmr), "poly_exact_div: division is not exact");
        Monomial mq = mono_div(lmr, lmq);
        auto cq = K.mul(rem.terms().rbegin()->second, lcq_inv);
        PolyOf<F> t(p.vars());
        t.add_term(K, mq, cq);
        quot = poly_add(K, quot, t);
        rem = poly_sub(K, rem, poly_mul(K, t, q));
    }
    return quot;
}

namespace detail {
template <class F>
UPoly<PolyOf<F>> view_scale_div(const F& K, const UPoly<PolyOf<F>>& v, const PolyOf<F>& d) {
    UPoly<PolyOf<F>> r;
    r.c.reserve(v.c.size());
    for (const auto& e : v.c)
        r.c.push_back(e.is_zero() ? e : poly_exact_div(K, e, d));
    return r;
}
}  // namespace detail

// Scale so the leading (degrevlex) coefficient becomes 1.
template <class F>
PolyOf<F> poly_normalize_leading(const F& K, const PolyOf<F>& p) {
    if (p.is_zero()) return p;
    const auto& lc = p.terms().rbegin()->second;
    if (K.is_one(lc)) return p;
    poly_certify_nonzero(K, p);
    return poly_scale(K, p, K.inv(lc));
}

template <class F>
PolyOf<F> poly_lc_in(const F& K, const PolyOf<F>& p, std::size_t var) {
    auto v = poly_uview(K, p, var);
    if (v.c.empty()) return PolyOf<F>(p.vars());
    return v.c.back();
}

// Full multivariate gcd via primitive subresultant-style PRS with recursive
// content extraction; normalized so the leading coefficient is 1.
template <class F>
PolyOf<F> poly_gcd(const F& K, const PolyOf<F>& p, const PolyOf<F>& q) {
    poly_check_same_ring(K, p, q);
    if (p.is_zero()) return poly_normalize_leading(K, q);
    if (q.is_zero()) return poly_normalize_leading(K, p);
    if (p.is_constant() || q.is_constant()) return poly_const(K, p.vars(), K.one());

    // main variable: highest-index variable actually present
    std::size_t var = 0;
    bool found = false;
    for (std::size_t v = p.nvars(); v-- > 0;) {
        auto dp = p.degree_in(v), dq = q.degree_in(v);
        if ((dp && *dp > 0) || (dq && *dq > 0)) {
            var = v;
            found = true;
            break;
        }
    }
    check_internal(found, "poly_gcd: nonconstant polynomials without variables");

    auto A = poly_uview(K, p, var);
    auto B = poly_uview(K, q, var);
    if (A.c.size() < B.c.size()) std::swap(A, B);

    // contents with respect to the main variable
    auto content_of = [&](const UPoly<PolyOf<F>>& v) {
        PolyOf<F> c(p.vars());
        for (const auto& e : v.c)
            if (!e.is_zero()) c = poly_gcd(K, c, e);
        return c;
    };
    PolyOf<F> contA = content_of(A);
    PolyOf<F> contB = content_of(B);
    PolyOf<F> contGcd = poly_gcd(K, contA, contB);
    A = detail::view_scale_div(K, A, contA);
    B = detail::view_scale_div(K, B, contB);

    if (B.c.size() == 1) {
        // primitive and constant in var means unit: gcd carries only content
        return poly_normalize_leading(K, contGcd);
    }

    PolyOf<F> g = poly_const(K, p.vars(), K.one());
    PolyOf<F> h = g;
    while (true) {
        view_certify_lc(K, A);
        view_certify_lc(K, B);
        std::size_t delta = A.c.size() - B.c.size();
        auto R = detail::view_prem(K, A, B);
        if (R.c.empty()) {
            // B divides A: primitive part of B is the gcd in var
            PolyOf<F> ppB = poly_from_uview(K, B, var, p.vars());
            PolyOf<F> cB(p.vars());
            for (const auto& e : B.c)
                if (!e.is_zero()) cB = poly_gcd(K, cB, e);
            ppB = poly_exact_div(K, ppB, cB);
            return poly_normalize_leading(K, poly_mul(K, contGcd, ppB));
        }
        view_certify_lc(K, R);
        if (R.c.size() == 1) return poly_normalize_leading(K, contGcd);
        PolyOf<F> divisor = poly_mul(K, g, poly_pow(K, h, static_cast<std::uint32_t>(delta)));
        A = std::move(B);
        B = detail::view_scale_div(K, R, divisor);
        g = A.c.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = poly_exact_div(K, poly_pow(K, g, static_cast<std::uint32_t>(delta)),
                               poly_pow(K, h, static_cast<std::uint32_t>(delta - 1)));
        }
    }
}

// Content/primitive splitting with respect to one variable: p = c * g with c
// free of var and g primitive in var. Reconstruction is exact.
template <class F>
std::pair<PolyOf<F>, PolyOf<F>> content_primitive(const F& K, const PolyOf<F>& p, std::size_t var) {
    if (p.is_zero()) throw DegenerateInputError("content_primitive: zero polynomial");
    if (var >= p.nvars()) throw StructuralError("content_primitive: variable index out of range");
    auto v = poly_uview(K, p, var);
    PolyOf<F> c(p.vars());
    for (const auto& e : v.c)
        if (!e.is_zero()) c = poly_gcd(K, c, e);
    PolyOf<F> prim = poly_exact_div(K, p, c);
    return {std::move(c), std::move(prim)};
}

// Scale so the leading coefficient with respect to var becomes monic-like:
// its own leading (degrevlex) field coefficient is 1.
template <class F>
PolyOf<F> poly_normalize_in(const F& K, const PolyOf<F>& p, std::size_t var) {
    if (p.is_zero()) return p;
    PolyOf<F> lc = poly_lc_in(K, p, var);
    const auto& c = lc.terms().rbegin()->second;
    if (K.is_one(c)) return p;
    K.certify_nonzero(c);
    return poly_scale(K, p, K.inv(c));
}

// Spec-facing gcd in one variable over the fraction field of the remaining
// ones: the content in var is stripped, the result normalized in var.
// gcd(p, 0) is normalized p.
template <class F>
PolyOf<F> gcd_subresultant(const F& K, const PolyOf<F>& p, const PolyOf<F>& q, std::size_t var) {
    poly_check_same_ring(K, p, q);
    if (p.is_zero() && q.is_zero()) return p;
    if (q.is_zero()) return poly_normalize_in(K, p, var);
    if (p.is_zero()) return poly_normalize_in(K, q, var);
    PolyOf<F> g = poly_gcd(K, p, q);
    auto dv = g.degree_in(var);
    if (dv && *dv > 0) {
        auto [c, prim] = content_primitive(K, g, var);
        return poly_normalize_in(K, prim, var);
    }
    return poly_const(K, p.vars(), K.one());
}

// p / gcd(p, dp/dvar): same zero set, all roots simple in var. Char 0 only.
template <class F>
PolyOf<F> squarefree_part(const F& K, const PolyOf<F>& p, std::size_t var) {
    if (p.is_zero()) throw DegenerateInputError("squarefree_part: zero polynomial");
    auto d = poly_derivative(K, p, var);
    if (d.is_zero()) return poly_normalize_leading(K, p);  // constant in var
    PolyOf<F> g = poly_gcd(K, p, d);
    if (g.is_constant()) return poly_normalize_leading(K, p);
    return poly_normalize_leading(K, poly_exact_div(K, p, g));
}

// Sylvester resultant eliminating var, computed by the subresultant PRS.
template <class F>
PolyOf<F> poly_resultant(const F& K, const PolyOf<F>& p, const PolyOf<F>& q, std::size_t var) {
    poly_check_same_ring(K, p, q);
    if (p.is_zero() && q.is_zero())
        throw DegenerateInputError("resultant: both inputs are zero");
    if (p.is_zero() || q.is_zero()) return PolyOf<F>(p.vars());

    auto A = poly_uview(K, p, var);
    auto B = poly_uview(K, q, var);
    std::size_t da = A.c.size() - 1, db = B.c.size() - 1;
    if (da == 0 && db == 0) return poly_const(K, p.vars(), K.one());
    if (da == 0) return poly_pow(K, A.c[0], static_cast<std::uint32_t>(db));
    if (db == 0) return poly_pow(K, B.c[0], static_cast<std::uint32_t>(da));

    bool negate = false;
    if (da < db) {
        std::swap(A, B);
        if ((da & 1) && (db & 1)) negate = !negate;
    }

    auto content_of = [&](const UPoly<PolyOf<F>>& v) {
        PolyOf<F> c(p.vars());
        for (const auto& e : v.c)
            if (!e.is_zero()) c = poly_gcd(K, c, e);
        return c;
    };
    PolyOf<F> contA = content_of(A);
    PolyOf<F> contB = content_of(B);
    A = detail::view_scale_div(K, A, contA);
    B = detail::view_scale_div(K, B, contB);
    PolyOf<F> t = poly_mul(K, poly_pow(K, contA, static_cast<std::uint32_t>(B.c.size() - 1)),
                           poly_pow(K, contB, static_cast<std::uint32_t>(A.c.size() - 1)));

    PolyOf<F> g = poly_const(K, p.vars(), K.one());
    PolyOf<F> h = g;
    while (true) {
        view_certify_lc(K, A);
        view_certify_lc(K, B);
        std::size_t dA = A.c.size() - 1, dB = B.c.size() - 1;
        std::size_t delta = dA - dB;
        if ((dA & 1) && (dB & 1)) negate = !negate;
        auto R = detail::view_prem(K, A, B);
        if (R.c.empty()) return PolyOf<F>(p.vars());  // common factor of positive degree
        view_certify_lc(K, R);
        PolyOf<F> divisor = poly_mul(K, g, poly_pow(K, h, static_cast<std::uint32_t>(delta)));
        A = std::move(B);
        B = detail::view_scale_div(K, R, divisor);
        g = A.c.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = poly_exact_div(K, poly_pow(K, g, static_cast<std::uint32_t>(delta)),
                               poly_pow(K, h, static_cast<std::uint32_t>(delta - 1)));
        }
        if (B.c.size() == 1) break;
    }

    // final cofactor: h^(1 - dA) * B^dA with dA the degree of the last
    // nonconstant element of the sequence
    std::size_t dA = A.c.size() - 1;
    PolyOf<F> num = poly_pow(K, B.c[0], static_cast<std::uint32_t>(dA));
    PolyOf<F> res = dA > 1
                        ? poly_exact_div(K, num, poly_pow(K, h, static_cast<std::uint32_t>(dA - 1)))
                        : num;
    res = poly_mul(K, t, res);
    return negate ? poly_neg(K, res) : res;
}

}  // namespace bifurcata

#endif
