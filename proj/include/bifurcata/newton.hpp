#ifndef BIFURCATA_NEWTON_HPP
#define BIFURCATA_NEWTON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

// Newton polygon at infinity: the convex hull of the support together with
// the origin. Faces at infinity are the hull edges whose supporting line
// misses the origin. For convenient nondegenerate polynomials the polygon
// number 2*area - a - b + 1 equals the total Milnor number, which makes it an
// independent oracle for the Stickelberger route.

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonPolygonInf {
    std::vector<LatticePoint> support;                              // sorted
    std::vector<LatticePoint> vertices;                             // hull, counterclockwise
    std::vector<std::pair<LatticePoint, LatticePoint>> faces_at_infinity;
    std::optional<long long> x_intercept;                           // max pure x-power
    std::optional<long long> y_intercept;                           // max pure y-power
};

NewtonPolygonInf newton_polygon(const Poly<Rat>& f);

// Support meets both axes in positive pure powers.
bool is_convenient(const Poly<Rat>& f);

// The terms of f supported on each face at infinity, one polynomial per face.
std::vector<Poly<Rat>> face_polynomials(const Poly<Rat>& f);

// No face polynomial has a critical point in the torus (C*)^2; decided by
// squarefreeness away from 0 of the univariate edge restriction.
bool is_nondegenerate(const Poly<Rat>& f);

// nu = 2*area - a - b + 1 for the polygon of a convenient polynomial.
long long kouchnirenko_number(const Poly<Rat>& f);

}  // namespace bifurcata

#endif
