#ifndef BIFURCATA_UPOLY_HPP
#define BIFURCATA_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/errors.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

// Dense univariate polynomial: c[i] is the coefficient of X^i. Normal form
// stores no trailing zeros; the zero polynomial has an empty vector, and
// degree() is empty rather than a negative number.
template <class E>
struct UPoly {
    std::vector<E> c;

    UPoly() = default;
    explicit UPoly(std::vector<E> coeffs) : c(std::move(coeffs)) {}

    bool is_zero_rep() const { return c.empty(); }
    std::optional<int> degree() const {
        if (c.empty()) return std::nullopt;
        return static_cast<int>(c.size()) - 1;
    }
};

template <class F>
using UPolyOf = UPoly<typename F::Elem>;

template <class F>
void upoly_trim(const F& K, UPoly<typename F::Elem>& p) {
    while (!p.c.empty() && K.is_zero(p.c.back())) p.c.pop_back();
}

template <class F>
bool upoly_is_zero(const F& K, const UPoly<typename F::Elem>& p) {
    for (const auto& e : p.c)
        if (!K.is_zero(e)) return false;
    return true;
}

template <class F>
UPoly<typename F::Elem> upoly_zero(const F&) {
    return UPoly<typename F::Elem>{};
}

template <class F>
UPoly<typename F::Elem> upoly_const(const F& K, typename F::Elem v) {
    UPoly<typename F::Elem> p;
    if (!K.is_zero(v)) p.c.push_back(std::move(v));
    return p;
}

template <class F>
UPoly<typename F::Elem> upoly_one(const F& K) {
    return upoly_const(K, K.one());
}

// X^k with unit coefficient.
template <class F>
UPoly<typename F::Elem> upoly_monomial(const F& K, std::size_t k) {
    UPoly<typename F::Elem> p;
    p.c.assign(k + 1, K.zero());
    p.c[k] = K.one();
    return p;
}

template <class F>
const typename F::Elem& upoly_lc(const F&, const UPoly<typename F::Elem>& p) {
    check_internal(!p.c.empty(), "leading coefficient of zero polynomial");
    return p.c.back();
}

// Certifies that the leading coefficient survives specialization (a no-op
// assertion over Q and F_p; records a degeneracy witness over Q(a); forces a
// branch split over a dynamic extension). Every algorithm below calls this
// before steering control flow on a degree.
template <class F>
void upoly_certify_lc(const F& K, const UPoly<typename F::Elem>& p) {
    if (!p.c.empty()) K.certify_nonzero(p.c.back());
}

template <class F>
UPoly<typename F::Elem> upoly_add(const F& K, const UPoly<typename F::Elem>& a,
                                  const UPoly<typename F::Elem>& b) {
    UPoly<typename F::Elem> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    upoly_trim(K, r);
    return r;
}

template <class F>
UPoly<typename F::Elem> upoly_neg(const F& K, const UPoly<typename F::Elem>& a) {
    UPoly<typename F::Elem> r = a;
    for (auto& e : r.c) e = K.neg(e);
    return r;
}

template <class F>
UPoly<typename F::Elem> upoly_sub(const F& K, const UPoly<typename F::Elem>& a,
                                  const UPoly<typename F::Elem>& b) {
    return upoly_add(K, a, upoly_neg(K, b));
}

template <class F>
UPoly<typename F::Elem> upoly_mul(const F& K, const UPoly<typename F::Elem>& a,
                                  const UPoly<typename F::Elem>& b) {
    UPoly<typename F::Elem> r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    upoly_trim(K, r);
    return r;
}

template <class F>
UPoly<typename F::Elem> upoly_scale(const F& K, const UPoly<typename F::Elem>& a,
                                    const typename F::Elem& s) {
    if (K.is_zero(s)) return {};
    UPoly<typename F::Elem> r = a;
    for (auto& e : r.c) e = K.mul(e, s);
    upoly_trim(K, r);
    return r;
}

template <class F>
UPoly<typename F::Elem> upoly_derivative(const F& K, const UPoly<typename F::Elem>& a) {
    UPoly<typename F::Elem> r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = K.mul(a.c[i], K.from_int(static_cast<long>(i)));
    upoly_trim(K, r);
    return r;
}

template <class F>
typename F::Elem upoly_eval(const F& K, const UPoly<typename F::Elem>& a,
                            const typename F::Elem& x) {
    typename F::Elem acc = K.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a.c[i]);
    return acc;
}

template <class F>
bool upoly_eq(const F& K, const UPoly<typename F::Elem>& a, const UPoly<typename F::Elem>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!K.eq(a.c[i], b.c[i])) return false;
    return true;
}

// Division with remainder over a field; the divisor's leading coefficient is
// inverted once (a potential split point over dynamic extensions).
template <class F>
std::pair<UPoly<typename F::Elem>, UPoly<typename F::Elem>>
upoly_divmod(const F& K, const UPoly<typename F::Elem>& a, const UPoly<typename F::Elem>& b) {
    check_internal(!b.c.empty(), "division by zero polynomial");
    upoly_certify_lc(K, b);
    UPoly<typename F::Elem> q, r = a;
    if (a.c.size() < b.c.size()) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
    auto lc_inv = K.inv(b.c.back());
    while (r.c.size() >= b.c.size()) {
        std::size_t shift = r.c.size() - b.c.size();
        auto coef = K.mul(r.c.back(), lc_inv);
        q.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = K.sub(r.c[shift + i], K.mul(coef, b.c[i]));
        // the top term cancels exactly; drop it and any further zeros
        r.c.pop_back();
        upoly_trim(K, r);
        if (r.c.empty()) break;
    }
    upoly_trim(K, q);
    return {q, r};
}

template <class F>
UPoly<typename F::Elem> upoly_rem(const F& K, const UPoly<typename F::Elem>& a,
                                  const UPoly<typename F::Elem>& b) {
    return upoly_divmod(K, a, b).second;
}

template <class F>
UPoly<typename F::Elem> upoly_monic(const F& K, const UPoly<typename F::Elem>& a) {
    if (a.c.empty()) return a;
    upoly_certify_lc(K, a);
    if (K.is_one(a.c.back())) return a;
    return upoly_scale(K, a, K.inv(a.c.back()));
}

namespace detail {

// Integer content of a rational-coefficient polynomial (gcd of numerators /
// lcm of denominators), used to keep the primitive PRS over Q integral.
inline Rat upoly_rat_content(const UPoly<Rat>& p) {
    Rat g(0);
    for (const auto& e : p.c) g = rat_gcd(g, e);
    return g;
}

inline UPoly<Rat> upoly_rat_primitive(const UPoly<Rat>& p, Rat& content_out) {
    content_out = upoly_rat_content(p);
    if (content_out.is_zero()) return p;
    UPoly<Rat> r = p;
    for (auto& e : r.c) e = e / content_out;
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, all operations
// staying in Z when the inputs are integral.
inline UPoly<Rat> upoly_prem_rat(const RatField& K, UPoly<Rat> a, const UPoly<Rat>& b) {
    check_internal(!b.c.empty(), "pseudo-remainder by zero");
    if (a.c.size() < b.c.size()) return a;
    std::size_t steps = a.c.size() - b.c.size() + 1;
    const Rat& lb = b.c.back();
    std::size_t done = 0;
    while (!a.c.empty() && a.c.size() >= b.c.size()) {
        Rat la = a.c.back();
        std::size_t shift = a.c.size() - b.c.size();
        UPoly<Rat> t;
        t.c.assign(a.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i + 1 < a.c.size(); ++i) t.c[i] = a.c[i] * lb;
        for (std::size_t i = 0; i + 1 < b.c.size(); ++i)
            t.c[shift + i] = t.c[shift + i] - la * b.c[i];
        upoly_trim(K, t);
        a = std::move(t);
        ++done;
    }
    // pad the multiplier so the result equals lc(b)^steps * a mod b exactly
    for (; done < steps; ++done)
        for (auto& e : a.c) e = e * lb;
    return a;
}

// Primitive PRS gcd over Q: strips content after each pseudo-remainder, which
// keeps coefficient growth polynomial instead of exponential.
inline UPoly<Rat> upoly_gcd_rat(const RatField& K, UPoly<Rat> a, UPoly<Rat> b) {
    upoly_trim(K, a);
    upoly_trim(K, b);
    if (a.c.empty()) return upoly_monic(K, b);
    if (b.c.empty()) return upoly_monic(K, a);
    Rat c;
    a = upoly_rat_primitive(a, c);
    b = upoly_rat_primitive(b, c);
    if (a.c.size() < b.c.size()) std::swap(a, b);
    while (true) {
        UPoly<Rat> r = upoly_prem_rat(K, a, b);
        if (r.c.empty()) break;
        if (r.c.size() == 1) return upoly_one(K);
        r = upoly_rat_primitive(r, c);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(K, b);
}

}  // namespace detail

// Monic gcd. Dispatches to the primitive PRS over Q; elsewhere runs the
// Euclidean algorithm, whose leading-coefficient inversions carry the
// dynamic-evaluation splits and the degeneracy certificates.
template <class F>
UPoly<typename F::Elem> upoly_gcd(const F& K, UPoly<typename F::Elem> a,
                                  UPoly<typename F::Elem> b) {
    if constexpr (std::is_same_v<F, RatField>) {
        return detail::upoly_gcd_rat(K, std::move(a), std::move(b));
    } else {
        upoly_trim(K, a);
        upoly_trim(K, b);
        while (!b.c.empty()) {
            upoly_certify_lc(K, b);
            auto r = upoly_rem(K, a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return upoly_monic(K, a);
    }
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class F>
struct UPolyExtGcd {
    UPoly<typename F::Elem> g, u, v;
};

template <class F>
UPolyExtGcd<F> upoly_ext_gcd(const F& K, UPoly<typename F::Elem> a, UPoly<typename F::Elem> b) {
    upoly_trim(K, a);
    upoly_trim(K, b);
    UPoly<typename F::Elem> r0 = a, r1 = b;
    auto s0 = upoly_one(K), s1 = upoly_zero(K);
    auto t0 = upoly_zero(K), t1 = upoly_one(K);
    while (!r1.c.empty()) {
        upoly_certify_lc(K, r1);
        auto [q, r] = upoly_divmod(K, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s = upoly_sub(K, s0, upoly_mul(K, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
        auto t = upoly_sub(K, t0, upoly_mul(K, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.c.empty() && !K.is_one(r0.c.back())) {
        upoly_certify_lc(K, r0);
        auto li = K.inv(r0.c.back());
        r0 = upoly_scale(K, r0, li);
        s0 = upoly_scale(K, s0, li);
        t0 = upoly_scale(K, t0, li);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

// Exact quotient; raises if the division leaves a remainder.
template <class F>
UPoly<typename F::Elem> upoly_exact_div(const F& K, const UPoly<typename F::Elem>& a,
                                        const UPoly<typename F::Elem>& b) {
    auto [q, r] = upoly_divmod(K, a, b);
    check_internal(upoly_is_zero(K, r), "upoly_exact_div: nonzero remainder");
    return q;
}

// p / gcd(p, p'): same roots, all simple. Characteristic-zero semantics.
template <class F>
UPoly<typename F::Elem> upoly_squarefree_part(const F& K, const UPoly<typename F::Elem>& p) {
    if (p.c.size() <= 1) return p;
    auto g = upoly_gcd(K, p, upoly_derivative(K, p));
    if (g.c.size() <= 1) return upoly_monic(K, p);
    return upoly_monic(K, upoly_exact_div(K, p, g));
}

// Yun's squarefree decomposition over Q: p = lc * prod q_i^i with the q_i
// squarefree, monic and pairwise coprime. Returns (i, q_i) for deg q_i >= 1.
std::vector<std::pair<int, UPoly<Rat>>> inline upoly_yun(const RatField& K, const UPoly<Rat>& p) {
    std::vector<std::pair<int, UPoly<Rat>>> out;
    if (p.c.size() <= 1) return out;
    UPoly<Rat> f = upoly_monic(K, p);
    UPoly<Rat> fp = upoly_derivative(K, f);
    UPoly<Rat> a = upoly_gcd(K, f, fp);
    UPoly<Rat> b = upoly_exact_div(K, f, a);
    UPoly<Rat> c = upoly_exact_div(K, fp, a);
    UPoly<Rat> d = upoly_sub(K, c, upoly_derivative(K, b));
    int i = 1;
    while (b.c.size() > 1) {
        UPoly<Rat> qi = upoly_gcd(K, b, d);
        if (qi.c.size() > 1) out.emplace_back(i, qi);
        b = upoly_exact_div(K, b, qi);
        c = upoly_exact_div(K, d, qi);
        d = upoly_sub(K, c, upoly_derivative(K, b));
        ++i;
    }
    return out;
}

// Deterministic total order on rational-coefficient polynomials: by degree,
// then by coefficients from the leading one down.
inline int upoly_rat_cmp(const UPoly<Rat>& a, const UPoly<Rat>& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] < b.c[i]) return -1;
        if (b.c[i] < a.c[i]) return 1;
    }
    return 0;
}

// Debug/report rendering with an explicit symbol name.
template <class F>
std::string upoly_to_string(const F& K, const UPoly<typename F::Elem>& p,
                            const std::string& sym) {
    if (p.c.empty()) return "0";
    std::string out;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        if (K.is_zero(p.c[i])) continue;
        std::string coef = K.to_string(p.c[i]);
        bool neg = !coef.empty() && coef[0] == '-';
        if (out.empty()) {
            if (neg) { out += "-"; coef = coef.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) coef = coef.substr(1);
        }
        bool unit_coef = coef == "1";
        if (i == 0) {
            out += coef;
        } else {
            if (!unit_coef) { out += coef; out += "*"; }
            out += sym;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace bifurcata

#endif
