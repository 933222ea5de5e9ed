#include "bifurcata/newton.hpp"

#include <algorithm>
#include <numeric>

#include "bifurcata/errors.hpp"
#include "bifurcata/upoly.hpp"

namespace bifurcata {

namespace {

const RatField Q;

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; returns the hull counterclockwise starting from
// the lexicographically smallest point. Collinear inputs collapse to their
// extreme points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<LatticePoint> support_of(const Poly<Rat>& f) {
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : f.terms())
        pts.push_back({static_cast<long long>(m.exp[0]), static_cast<long long>(m.exp[1])});
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return pts;
}

void require_plane_nonzero(const Poly<Rat>& f) {
    if (f.nvars() != 2)
        throw StructuralError("newton polygon is defined for two-variable polynomials");
    if (f.is_zero()) throw DegenerateInputError("newton polygon of the zero polynomial");
}

bool on_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& t) {
    if (cross(p, q, t) != 0) return false;
    return std::min(p.x, q.x) <= t.x && t.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= t.y && t.y <= std::max(p.y, q.y);
}

// Univariate restriction of f along the face [p, q]: coefficients read off at
// the lattice steps of the primitive direction.
UPoly<Rat> edge_restriction(const Poly<Rat>& f, const LatticePoint& p, const LatticePoint& q) {
    long long dx = q.x - p.x, dy = q.y - p.y;
    long long g = std::gcd(std::llabs(dx), std::llabs(dy));
    check_internal(g > 0, "degenerate face");
    dx /= g;
    dy /= g;
    UPoly<Rat> r;
    r.c.assign(static_cast<std::size_t>(g) + 1, Rat(0));
    for (const auto& [m, c] : f.terms()) {
        LatticePoint t{static_cast<long long>(m.exp[0]), static_cast<long long>(m.exp[1])};
        if (!on_segment(p, q, t)) continue;
        long long k = dx != 0 ? (t.x - p.x) / dx : (t.y - p.y) / dy;
        r.c[static_cast<std::size_t>(k)] = c;
    }
    upoly_trim(Q, r);
    return r;
}

}  // namespace

NewtonPolygonInf newton_polygon(const Poly<Rat>& f) {
    require_plane_nonzero(f);
    NewtonPolygonInf np;
    np.support = support_of(f);

    std::vector<LatticePoint> pts = np.support;
    pts.push_back({0, 0});
    np.vertices = convex_hull(std::move(pts));

    // intercepts: maximal pure powers in the support
    for (const auto& p : np.support) {
        if (p.y == 0) np.x_intercept = np.x_intercept ? std::max(*np.x_intercept, p.x) : p.x;
        if (p.x == 0) np.y_intercept = np.y_intercept ? std::max(*np.y_intercept, p.y) : p.y;
    }

    const std::size_t n = np.vertices.size();
    if (n >= 2) {
        for (std::size_t i = 0; i < (n == 2 ? 1 : n); ++i) {
            const LatticePoint& p = np.vertices[i];
            const LatticePoint& q = np.vertices[(i + 1) % n];
            // the supporting line misses the origin iff p x q != 0
            if (p.x * q.y - p.y * q.x != 0) np.faces_at_infinity.emplace_back(p, q);
        }
    }
    // hull-correctness assertion: every support point inside or on the hull
    if (n >= 3) {
        for (const auto& s : np.support)
            for (std::size_t i = 0; i < n; ++i)
                check_internal(cross(np.vertices[i], np.vertices[(i + 1) % n], s) >= 0,
                               "support point escaped the hull");
    }
    return np;
}

bool is_convenient(const Poly<Rat>& f) {
    require_plane_nonzero(f);
    NewtonPolygonInf np = newton_polygon(f);
    return np.x_intercept && *np.x_intercept > 0 && np.y_intercept && *np.y_intercept > 0;
}

std::vector<Poly<Rat>> face_polynomials(const Poly<Rat>& f) {
    NewtonPolygonInf np = newton_polygon(f);
    std::vector<Poly<Rat>> out;
    for (const auto& [p, q] : np.faces_at_infinity) {
        Poly<Rat> fp(f.vars());
        for (const auto& [m, c] : f.terms()) {
            LatticePoint t{static_cast<long long>(m.exp[0]), static_cast<long long>(m.exp[1])};
            if (on_segment(p, q, t)) fp.add_term(Q, m, c);
        }
        check_internal(!fp.is_zero(), "face without supporting terms");
        out.push_back(std::move(fp));
    }
    return out;
}

bool is_nondegenerate(const Poly<Rat>& f) {
    NewtonPolygonInf np = newton_polygon(f);
    for (const auto& [p, q] : np.faces_at_infinity) {
        UPoly<Rat> r = edge_restriction(f, p, q);
        // strip powers of w: only roots in the torus matter
        std::size_t val = 0;
        while (val < r.c.size() && r.c[val].is_zero()) ++val;
        if (val > 0) r.c.erase(r.c.begin(), r.c.begin() + static_cast<std::ptrdiff_t>(val));
        if (r.c.size() <= 1) continue;  // a single monomial face has no torus zero
        auto g = upoly_gcd(Q, r, upoly_derivative(Q, r));
        if (g.c.size() > 1) return false;  // multiple root away from 0
    }
    return true;
}

long long kouchnirenko_number(const Poly<Rat>& f) {
    if (!is_convenient(f))
        throw PreconditionError("kouchnirenko_number requires a convenient polynomial");
    NewtonPolygonInf np = newton_polygon(f);
    long long twice_area = 0;
    const std::size_t n = np.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint& p = np.vertices[i];
        const LatticePoint& q = np.vertices[(i + 1) % n];
        twice_area += p.x * q.y - p.y * q.x;  // counterclockwise: nonnegative
    }
    check_internal(twice_area >= 0, "hull orientation flipped");
    return twice_area - *np.x_intercept - *np.y_intercept + 1;
}

}  // namespace bifurcata
