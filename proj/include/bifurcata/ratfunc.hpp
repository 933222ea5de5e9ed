#ifndef BIFURCATA_RATFUNC_HPP
#define BIFURCATA_RATFUNC_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/errors.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/upoly.hpp"

namespace bifurcata {

// Rational function in the value symbol a: num/den with den monic and
// gcd(num, den) = 1. This is the coefficient field of the generic fiber.
struct RatFunc {
    UPoly<Rat> num;
    UPoly<Rat> den;  // monic, nonzero; the zero element is 0/1

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return upoly_rat_cmp(x.num, y.num) == 0 && upoly_rat_cmp(x.den, y.den) == 0;
    }
};

// Collects univariate witnesses in the value symbol whose roots bound every
// specialization a -> a0 at which the generic computation could change shape.
// The field records the numerator of each element that is structurally
// certified nonzero or inverted; arithmetic and term normalization do not
// record anything. See fiber_euler.hpp for why this is a complete candidate
// source.
class DegeneracyCollector {
public:
    void record(const UPoly<Rat>& numerator) {
        if (numerator.c.size() <= 1) return;  // constants never vanish at a specialization
        RatField Q;
        UPoly<Rat> m = upoly_monic(Q, numerator);
        if (seen_.insert(m).second) entries_.push_back(m);
    }

    const std::vector<UPoly<Rat>>& entries() const { return entries_; }

private:
    struct Less {
        bool operator()(const UPoly<Rat>& a, const UPoly<Rat>& b) const {
            return upoly_rat_cmp(a, b) < 0;
        }
    };
    std::set<UPoly<Rat>, Less> seen_;
    std::vector<UPoly<Rat>> entries_;
};

// The field Q(a). Optionally instrumented with a DegeneracyCollector; the
// same code paths run instrumented (generic fiber) and plain.
class RatFuncField {
public:
    using Elem = RatFunc;

    RatFuncField() = default;
    explicit RatFuncField(DegeneracyCollector* collector) : collector_(collector) {}

    DegeneracyCollector* collector() const { return collector_; }

    Elem zero() const { return make(UPoly<Rat>{}, upoly_one(q_)); }
    Elem one() const { return make(upoly_one(q_), upoly_one(q_)); }
    Elem from_int(long n) const { return make(upoly_const(q_, Rat(n)), upoly_one(q_)); }
    Elem from_rat(const Rat& r) const { return make(upoly_const(q_, r), upoly_one(q_)); }
    // The transcendental generator a itself.
    Elem symbol() const { return make(upoly_monomial(q_, 1), upoly_one(q_)); }
    Elem from_upoly(UPoly<Rat> p) const { return make(std::move(p), upoly_one(q_)); }

    Elem add(const Elem& x, const Elem& y) const {
        UPoly<Rat> n = upoly_add(q_, upoly_mul(q_, x.num, y.den), upoly_mul(q_, y.num, x.den));
        return reduce(std::move(n), upoly_mul(q_, x.den, y.den));
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }
    Elem neg(const Elem& x) const { return Elem{upoly_neg(q_, x.num), x.den}; }
    Elem mul(const Elem& x, const Elem& y) const {
        return reduce(upoly_mul(q_, x.num, y.num), upoly_mul(q_, x.den, y.den));
    }
    Elem inv(const Elem& x) const {
        if (x.num.c.empty()) throw StructuralError("inverse of zero in Q(a)");
        record(x.num);
        return reduce(x.den, x.num);
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

    bool is_zero(const Elem& x) const { return x.num.c.empty(); }
    bool is_one(const Elem& x) const {
        return x.num.c.size() == 1 && x.num.c[0].is_one() && x.den.c.size() == 1;
    }
    bool eq(const Elem& x, const Elem& y) const { return is_zero(sub(x, y)); }

    // Structural certification: the computation's control flow relies on this
    // element staying nonzero, so its numerator becomes a degeneracy witness.
    void certify_nonzero(const Elem& x) const {
        check_internal(!x.num.c.empty(), "certify_nonzero(Q(a)): zero element");
        record(x.num);
    }

    std::string to_string(const Elem& x) const {
        RatField Q;
        std::string n = upoly_to_string(Q, x.num, "a");
        if (x.den.c.size() == 1) return n;
        return "(" + n + ")/(" + upoly_to_string(Q, x.den, "a") + ")";
    }

private:
    Elem make(UPoly<Rat> n, UPoly<Rat> d) const { return Elem{std::move(n), std::move(d)}; }

    Elem reduce(UPoly<Rat> n, UPoly<Rat> d) const {
        check_internal(!d.c.empty(), "rational function with zero denominator");
        if (n.c.empty()) return zero();
        UPoly<Rat> g = upoly_gcd(q_, n, d);
        if (g.c.size() > 1) {
            n = upoly_exact_div(q_, n, g);
            d = upoly_exact_div(q_, d, g);
        }
        // normalize the denominator to be monic
        Rat lc = d.c.back();
        if (!lc.is_one()) {
            Rat li = lc.inverse();
            for (auto& e : n.c) e = e * li;
            for (auto& e : d.c) e = e * li;
        }
        return Elem{std::move(n), std::move(d)};
    }

    void record(const UPoly<Rat>& numerator) const {
        if (collector_) collector_->record(numerator);
    }

    RatField q_;
    DegeneracyCollector* collector_ = nullptr;
};

}  // namespace bifurcata

#endif
