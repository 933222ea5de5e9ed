#include "bifurcata/groebner.hpp"

#include <algorithm>

namespace bifurcata {

namespace {
const RatField Q;
}

UPoly<Rat> charpoly(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return upoly_one(Q);
    for (const auto& row : m)
        check_internal(row.size() == n, "charpoly: matrix is not square");

    // entries of tI - M as univariate polynomials in t
    std::vector<std::vector<UPoly<Rat>>> a(n, std::vector<UPoly<Rat>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            UPoly<Rat> e;
            if (i == j) {
                e.c = {-m[i][j], Rat(1)};
            } else if (!m[i][j].is_zero()) {
                e.c = {-m[i][j]};
            }
            a[i][j] = std::move(e);
        }
    }

    // Bareiss fraction-free elimination. The leading principal minors of
    // tI - M are monic of degree k, hence never zero: no pivoting needed.
    UPoly<Rat> prev = upoly_one(Q);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        check_internal(!a[k][k].c.empty(), "charpoly: zero pivot in tI - M elimination");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UPoly<Rat> t = upoly_sub(Q, upoly_mul(Q, a[k][k], a[i][j]),
                                         upoly_mul(Q, a[i][k], a[k][j]));
                a[i][j] = t.c.empty() || prev.c.size() == 1 ? std::move(t)
                                                            : upoly_exact_div(Q, t, prev);
            }
            a[i][k] = UPoly<Rat>{};
        }
        prev = a[k][k];
    }
    UPoly<Rat> cp = a[n - 1][n - 1];
    check_internal(cp.c.size() == n + 1 && cp.c.back().is_one(),
                   "charpoly: result is not monic of the matrix dimension");
    return cp;
}

CritSpectrum critical_spectrum(const Poly<Rat>& f) {
    if (f.nvars() == 0 || f.is_zero())
        throw PreconditionError("critical_spectrum: nonzero polynomial in at least one variable required");

    std::vector<Poly<Rat>> jac;
    for (std::size_t v = 0; v < f.nvars(); ++v) jac.push_back(poly_derivative(Q, f, v));

    GroebnerBasis<RatField> gb = groebner_basis(Q, jac);
    std::vector<Monomial> basis = quotient_basis(Q, gb, f.nvars());
    const long long dim = static_cast<long long>(basis.size());

    CritSpectrum spec;
    if (dim == 0) {
        spec.mu_total = 0;  // f is smooth: empty spectrum
        return spec;
    }

    auto m = mult_matrix(Q, basis, gb, f);
    UPoly<Rat> cp = charpoly(m);
    check_internal(static_cast<long long>(cp.c.size()) - 1 == dim,
                   "charpoly degree differs from the quotient dimension");

    long long mu_total = 0;
    for (auto& [mult, factor] : upoly_yun(Q, cp)) {
        CritSpectrumEntry e{ValueClass::from_minpoly(factor), mult};
        mu_total += static_cast<long long>(mult) * e.value_class.degree();
        spec.entries.push_back(std::move(e));
    }
    check_internal(mu_total == dim,
                   "total Milnor number differs from the quotient-algebra dimension");
    spec.mu_total = mu_total;
    std::sort(spec.entries.begin(), spec.entries.end(),
              [](const CritSpectrumEntry& a, const CritSpectrumEntry& b) {
                  return value_class_less(a.value_class, b.value_class);
              });
    return spec;
}

}  // namespace bifurcata
