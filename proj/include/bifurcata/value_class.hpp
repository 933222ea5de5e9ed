#ifndef BIFURCATA_VALUE_CLASS_HPP
#define BIFURCATA_VALUE_CLASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bifurcata/rational.hpp"
#include "bifurcata/upoly.hpp"

namespace bifurcata {

// A Galois orbit of candidate special values: the roots of a squarefree monic
// polynomial over Q in the value symbol. Degree-1 classes carry their root
// exactly.
struct ValueClass {
    UPoly<Rat> minpoly;  // monic, squarefree, deg >= 1
    std::optional<Rat> rational_hint;

    int degree() const { return static_cast<int>(minpoly.c.size()) - 1; }

    static ValueClass from_minpoly(UPoly<Rat> m);
    static ValueClass from_rational(const Rat& r);

    friend bool operator==(const ValueClass& a, const ValueClass& b) {
        return upoly_rat_cmp(a.minpoly, b.minpoly) == 0;
    }
};

// Deterministic order: by minpoly degree, then coefficients.
bool value_class_less(const ValueClass& a, const ValueClass& b);

// Renders "p/q" for rational classes, "root of <minpoly>" otherwise.
std::string value_class_to_string(const ValueClass& c);

// Refines a family of univariate polynomials over Q into pairwise coprime
// squarefree monic polynomials with the same combined root set. Constants and
// zero entries are dropped; the output is sorted deterministically.
std::vector<UPoly<Rat>> gcd_free_basis(const std::vector<UPoly<Rat>>& polys);

// True when cls.minpoly divides m exactly.
bool value_class_divides(const ValueClass& cls, const UPoly<Rat>& m);

}  // namespace bifurcata

#endif
