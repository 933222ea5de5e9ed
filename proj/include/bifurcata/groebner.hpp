#ifndef BIFURCATA_GROEBNER_HPP
#define BIFURCATA_GROEBNER_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "bifurcata/elim.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/value_class.hpp"

namespace bifurcata {

// Buchberger's algorithm in graded reverse lexicographic order, reduced
// bases, zero-dimensional quotient algebras, and the Stickelberger route to
// critical values: the eigenvalues of multiplication by f on the Jacobian
// quotient algebra are the critical values of f, with algebraic multiplicity
// equal to the Milnor number contribution of the corresponding fibers.

template <class F>
struct GroebnerBasis {
    std::vector<PolyOf<F>> gens;  // reduced, monic leading coefficients
};

template <class F>
PolyOf<F> normal_form(const F& K, PolyOf<F> p, const std::vector<PolyOf<F>>& gens) {
    PolyOf<F> rem(p.vars());
    while (!p.is_zero()) {
        const Monomial& lm = p.terms().rbegin()->first;
        const auto& lc = p.terms().rbegin()->second;
        bool reduced = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            const Monomial& lmg = g.terms().rbegin()->first;
            if (!mono_divides(lmg, lm)) continue;
            const auto& lcg = g.terms().rbegin()->second;
            PolyOf<F> t(p.vars());
            t.add_term(K, mono_div(lm, lmg), K.div(lc, lcg));
            p = poly_sub(K, p, poly_mul(K, t, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            PolyOf<F> t(p.vars());
            t.add_term(K, lm, lc);
            rem = poly_add(K, rem, t);
            p = poly_sub(K, p, t);
        }
    }
    return rem;
}

template <class F>
GroebnerBasis<F> groebner_basis(const F& K, const std::vector<PolyOf<F>>& generators) {
    if (generators.empty()) throw StructuralError("groebner_basis: empty generator list");
    std::vector<PolyOf<F>> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(poly_normalize_leading(K, g));
    if (basis.empty()) return {basis};  // the zero ideal

    auto spair = [&](const PolyOf<F>& a, const PolyOf<F>& b) {
        const Monomial& la = a.terms().rbegin()->first;
        const Monomial& lb = b.terms().rbegin()->first;
        Monomial l = mono_lcm(la, lb);
        PolyOf<F> ta(a.vars()), tb(b.vars());
        ta.add_term(K, mono_div(l, la), K.one());
        tb.add_term(K, mono_div(l, lb), K.one());
        return poly_sub(K, poly_mul(K, ta, a), poly_mul(K, tb, b));
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial& li = basis[i].terms().rbegin()->first;
        const Monomial& lj = basis[j].terms().rbegin()->first;
        // product criterion: coprime leading monomials reduce to zero
        if (mono_lcm(li, lj).total_degree() == li.total_degree() + lj.total_degree()) continue;
        PolyOf<F> s = normal_form(K, spair(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        s = poly_normalize_leading(K, s);
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(s));
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another's
    std::vector<PolyOf<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].terms().rbegin()->first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].terms().rbegin()->first;
            if (mono_divides(lj, li) && !(li == lj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce to the unique reduced basis
    std::vector<PolyOf<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<PolyOf<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        PolyOf<F> r = normal_form(K, minimal[i], others);
        if (!r.is_zero()) reduced.push_back(poly_normalize_leading(K, r));
    }
    std::sort(reduced.begin(), reduced.end(), [](const PolyOf<F>& a, const PolyOf<F>& b) {
        return DegRevLexLess{}(a.terms().rbegin()->first, b.terms().rbegin()->first);
    });
    return {std::move(reduced)};
}

template <class F>
bool ideal_is_unit(const GroebnerBasis<F>& gb) {
    for (const auto& g : gb.gens)
        if (!g.is_zero() && g.terms().rbegin()->first.is_one()) return true;
    return false;
}

// Standard monomials (those outside the leading-term ideal), ascending
// degrevlex. Throws NonIsolatedError when the ideal is not zero-dimensional.
template <class F>
std::vector<Monomial> quotient_basis(const F& K, const GroebnerBasis<F>& gb,
                                     std::size_t nvars) {
    (void)K;
    if (ideal_is_unit(gb)) return {};
    std::vector<std::uint32_t> bound(nvars, 0);
    std::vector<bool> bounded(nvars, false);
    for (const auto& g : gb.gens) {
        const Monomial& lm = g.terms().rbegin()->first;
        for (std::size_t v = 0; v < nvars; ++v) {
            bool pure = lm.exp[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && lm.exp[w] > 0) pure = false;
            if (pure) {
                bounded[v] = true;
                bound[v] = bound[v] == 0 ? lm.exp[v] : std::min(bound[v], lm.exp[v]);
            }
        }
    }
    for (std::size_t v = 0; v < nvars; ++v)
        if (!bounded[v])
            throw NonIsolatedError(
                "ideal is not zero-dimensional: no pure power of variable " + std::to_string(v) +
                " among the leading terms");

    std::vector<Monomial> standard;
    Monomial m(nvars);
    // enumerate the box under the pure-power bounds
    while (true) {
        bool in_lt_ideal = false;
        for (const auto& g : gb.gens) {
            if (mono_divides(g.terms().rbegin()->first, m)) {
                in_lt_ideal = true;
                break;
            }
        }
        if (!in_lt_ideal) standard.push_back(m);
        // odometer
        std::size_t v = 0;
        while (v < nvars) {
            if (++m.exp[v] < bound[v]) break;
            m.exp[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    std::sort(standard.begin(), standard.end(), DegRevLexLess{});
    return standard;
}

// Matrix of the linear map [h] -> [g*h] on the quotient algebra in the
// standard-monomial basis; column j expands g * basis[j].
template <class F>
std::vector<std::vector<typename F::Elem>> mult_matrix(const F& K,
                                                       const std::vector<Monomial>& basis,
                                                       const GroebnerBasis<F>& gb,
                                                       const PolyOf<F>& g) {
    const std::size_t n = basis.size();
    std::vector<std::vector<typename F::Elem>> m(n, std::vector<typename F::Elem>(n, K.zero()));
    for (std::size_t j = 0; j < n; ++j) {
        PolyOf<F> prod = poly_mul_mono(K, g, basis[j]);
        PolyOf<F> nf = normal_form(K, prod, gb.gens);
        for (const auto& [mono, coeff] : nf.terms()) {
            auto it = std::find_if(basis.begin(), basis.end(),
                                   [&](const Monomial& b) { return b == mono; });
            check_internal(it != basis.end(),
                           "normal form leaked a monomial outside the standard basis");
            m[static_cast<std::size_t>(it - basis.begin())][j] = coeff;
        }
    }
    return m;
}

// Characteristic polynomial of a rational matrix; fraction-free elimination
// on tI - M over Q[t]. Exact; the empty matrix yields 1.
UPoly<Rat> charpoly(const std::vector<std::vector<Rat>>& m);

struct CritSpectrumEntry {
    ValueClass value_class;
    int mu_per_root;  // shared by every root of the class
};

struct CritSpectrum {
    std::vector<CritSpectrumEntry> entries;  // pairwise coprime classes
    long long mu_total = 0;                  // = dim of the Jacobian quotient algebra
};

// Critical values of f with per-value Milnor numbers, by the multiplicities
// of the eigenvalues of multiplication-by-f on Q[x,y]/(f_x, f_y). Throws
// NonIsolatedError when that ideal is not zero-dimensional.
CritSpectrum critical_spectrum(const Poly<Rat>& f);

}  // namespace bifurcata

#endif
