#ifndef BIFURCATA_MONOMIAL_HPP
#define BIFURCATA_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "bifurcata/errors.hpp"

namespace bifurcata {

// Exponent vector; the length always equals the ambient variable count of the
// polynomial that owns the term.
struct Monomial {
    std::vector<std::uint32_t> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

    std::size_t nvars() const { return exp.size(); }
    std::uint64_t total_degree() const {
        return std::accumulate(exp.begin(), exp.end(), std::uint64_t{0});
    }
    bool is_one() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_internal(a.nvars() == b.nvars(), "monomial arity mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    check_internal(a.nvars() == b.nvars(), "monomial arity mismatch");
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    check_internal(mono_divides(a, b), "monomial quotient does not exist");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exp[i] = b.exp[i] - a.exp[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_internal(a.nvars() == b.nvars(), "monomial arity mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

// Graded reverse lexicographic order with the fixed variable order of the
// ambient ring; "less" so that std::map iterates ascending and the leading
// term sits at rbegin().
struct DegRevLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t i = a.exp.size(); i-- > 0;) {
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
        }
        return false;
    }
};

}  // namespace bifurcata

#endif
