#ifndef BIFURCATA_POLY_HPP
#define BIFURCATA_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/errors.hpp"
#include "bifurcata/monomial.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/upoly.hpp"

namespace bifurcata {

// Sparse multivariate polynomial over a coefficient field element type E.
// Invariants: no stored zero coefficients (maintained through the owning
// field context), all monomials share the ambient arity, and degree queries
// on the zero polynomial yield an empty optional, never a sentinel integer.
template <class E>
class Poly {
public:
    using TermMap = std::map<Monomial, E, DegRevLexLess>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    std::optional<std::uint64_t> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.total_degree();
    }

    std::optional<std::uint32_t> degree_in(std::size_t var) const {
        if (terms_.empty()) return std::nullopt;
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
        return d;
    }

    // Mutation is confined to construction-time helpers; the field context
    // decides what counts as zero.
    template <class F>
    void add_term(const F& K, const Monomial& m, const E& coeff) {
        check_internal(m.nvars() == vars_.size(), "term arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!K.is_zero(coeff)) terms_.emplace(m, coeff);
        } else {
            it->second = K.add(it->second, coeff);
            if (K.is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    TermMap& mutable_terms() { return terms_; }

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

template <class F>
using PolyOf = Poly<typename F::Elem>;

template <class F>
void poly_check_same_ring(const F&, const PolyOf<F>& a, const PolyOf<F>& b) {
    if (a.vars() != b.vars())
        throw StructuralError("polynomials live in different variable rings");
}

template <class F>
PolyOf<F> poly_zero(const F&, std::vector<std::string> vars) {
    return PolyOf<F>(std::move(vars));
}

template <class F>
PolyOf<F> poly_const(const F& K, std::vector<std::string> vars, const typename F::Elem& v) {
    PolyOf<F> p(std::move(vars));
    p.add_term(K, Monomial(p.nvars()), v);
    return p;
}

template <class F>
PolyOf<F> poly_var(const F& K, std::vector<std::string> vars, std::size_t var, std::uint32_t e = 1) {
    PolyOf<F> p(std::move(vars));
    if (var >= p.nvars()) throw StructuralError("variable index out of range");
    Monomial m(p.nvars());
    m.exp[var] = e;
    p.add_term(K, m, K.one());
    return p;
}

template <class F>
PolyOf<F> poly_add(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
    poly_check_same_ring(K, a, b);
    PolyOf<F> r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(K, m, c);
    return r;
}

template <class F>
PolyOf<F> poly_neg(const F& K, const PolyOf<F>& a) {
    PolyOf<F> r(a.vars());
    for (const auto& [m, c] : a.terms()) r.mutable_terms().emplace(m, K.neg(c));
    return r;
}

template <class F>
PolyOf<F> poly_sub(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
    return poly_add(K, a, poly_neg(K, b));
}

template <class F>
PolyOf<F> poly_mul(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
    poly_check_same_ring(K, a, b);
    PolyOf<F> r(a.vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(K, mono_mul(ma, mb), K.mul(ca, cb));
    return r;
}

template <class F>
PolyOf<F> poly_scale(const F& K, const PolyOf<F>& a, const typename F::Elem& s) {
    PolyOf<F> r(a.vars());
    if (K.is_zero(s)) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(K, m, K.mul(c, s));
    return r;
}

template <class F>
PolyOf<F> poly_mul_mono(const F&, const PolyOf<F>& a, const Monomial& m) {
    PolyOf<F> r(a.vars());
    for (const auto& [ma, c] : a.terms()) r.mutable_terms().emplace(mono_mul(ma, m), c);
    return r;
}

template <class F>
PolyOf<F> poly_pow(const F& K, const PolyOf<F>& a, std::uint32_t e) {
    PolyOf<F> r = poly_const(K, a.vars(), K.one());
    PolyOf<F> base = a;
    while (e) {
        if (e & 1) r = poly_mul(K, r, base);
        e >>= 1;
        if (e) base = poly_mul(K, base, base);
    }
    return r;
}

// Formal partial derivative, characteristic-zero semantics.
template <class F>
PolyOf<F> poly_derivative(const F& K, const PolyOf<F>& a, std::size_t var) {
    if (var >= a.nvars()) throw StructuralError("derivative: variable index out of range");
    PolyOf<F> r(a.vars());
    for (const auto& [m, c] : a.terms()) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.add_term(K, d, K.mul(c, K.from_int(static_cast<long>(m.exp[var]))));
    }
    return r;
}

// Substitution of full polynomials for a subset of the variables. Bound
// values live in the same ring (map coefficients into it first if they come
// from lower in the tower).
template <class F>
PolyOf<F> poly_substitute(const F& K, const PolyOf<F>& a,
                          const std::map<std::size_t, PolyOf<F>>& bindings) {
    for (const auto& [v, val] : bindings) {
        if (v >= a.nvars()) throw StructuralError("substitution: variable index out of range");
        poly_check_same_ring(K, a, val);
    }
    PolyOf<F> r(a.vars());
    for (const auto& [m, c] : a.terms()) {
        PolyOf<F> term = poly_const(K, a.vars(), c);
        Monomial rest(m.nvars());
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            if (m.exp[v] == 0) continue;
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.exp[v] = m.exp[v];
            } else {
                term = poly_mul(K, term, poly_pow(K, it->second, m.exp[v]));
            }
        }
        r = poly_add(K, r, poly_mul_mono(K, term, rest));
    }
    return r;
}

// Coefficient-wise transport along a map between coefficient fields
// (e.g. Q -> Q(a), Q -> F_p, Q -> Q[alpha]/(m)).
template <class FTo, class EFrom, class Map>
Poly<typename FTo::Elem> poly_map(const FTo& K, const Poly<EFrom>& a, Map&& f) {
    Poly<typename FTo::Elem> r(a.vars());
    for (const auto& [m, c] : a.terms()) r.add_term(K, m, f(c));
    return r;
}

// View as a univariate polynomial in `var` with multivariate coefficients
// (exponent of `var` zeroed out inside the coefficients).
template <class F>
UPoly<PolyOf<F>> poly_uview(const F& K, const PolyOf<F>& a, std::size_t var) {
    if (var >= a.nvars()) throw StructuralError("uview: variable index out of range");
    UPoly<PolyOf<F>> out;
    auto d = a.degree_in(var);
    if (!d) return out;
    out.c.assign(*d + 1, PolyOf<F>(a.vars()));
    for (const auto& [m, c] : a.terms()) {
        Monomial rest = m;
        std::uint32_t e = rest.exp[var];
        rest.exp[var] = 0;
        out.c[e].add_term(K, rest, c);
    }
    return out;
}

template <class F>
PolyOf<F> poly_from_uview(const F& K, const UPoly<PolyOf<F>>& u, std::size_t var,
                          const std::vector<std::string>& vars) {
    PolyOf<F> r(vars);
    for (std::size_t e = 0; e < u.c.size(); ++e) {
        for (const auto& [m, c] : u.c[e].terms()) {
            Monomial full = m;
            full.exp[var] += static_cast<std::uint32_t>(e);
            r.add_term(K, full, c);
        }
    }
    return r;
}

// Conversions between the dense univariate representation and a 1-variable
// (or var-supported) sparse polynomial.
template <class F>
UPoly<typename F::Elem> poly_to_upoly(const F& K, const PolyOf<F>& a, std::size_t var) {
    UPoly<typename F::Elem> u;
    auto d = a.degree_in(var);
    if (!d) return u;
    u.c.assign(*d + 1, K.zero());
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (v != var && m.exp[v] != 0)
                throw StructuralError("poly_to_upoly: polynomial is not univariate in the chosen variable");
        u.c[m.exp[var]] = c;
    }
    return u;
}

template <class F>
PolyOf<F> upoly_to_poly(const F& K, const UPoly<typename F::Elem>& u, std::size_t var,
                        const std::vector<std::string>& vars) {
    PolyOf<F> r(vars);
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (K.is_zero(u.c[i])) continue;
        Monomial m(r.nvars());
        m.exp[var] = static_cast<std::uint32_t>(i);
        r.add_term(K, m, u.c[i]);
    }
    return r;
}

// Canonical text rendering: terms in descending degrevlex order, explicit '*',
// '^' for exponents, rational coefficients as p/q. Reparses to the same Poly.
inline std::string poly_to_string(const Poly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        const Rat& c = it->second;
        std::string coef = c.to_string();
        bool neg = coef[0] == '-';
        if (neg) coef = coef.substr(1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string monos;
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            if (m.exp[v] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += p.vars()[v];
            if (m.exp[v] > 1) monos += "^" + std::to_string(m.exp[v]);
        }
        if (monos.empty()) {
            out += coef;
        } else if (coef == "1") {
            out += monos;
        } else {
            out += coef + "*" + monos;
        }
    }
    return out;
}

}  // namespace bifurcata

#endif
