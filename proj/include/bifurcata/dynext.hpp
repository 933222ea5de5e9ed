#ifndef BIFURCATA_DYNEXT_HPP
#define BIFURCATA_DYNEXT_HPP

#include <atomic>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/errors.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/upoly.hpp"

namespace bifurcata {

inline std::uint64_t next_dynext_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

// Thrown when arithmetic in Base[x]/(q) meets a zero divisor: q factors as
// q1 * q2 and the computation must be replayed on each branch. Not an error.
template <class Base>
struct SplitEvent {
    std::uint64_t field_id;
    UPoly<typename Base::Elem> q1;
    UPoly<typename Base::Elem> q2;
};

// Dynamic evaluation (D5): computes in Base[x]/(modulus) for a squarefree
// monic modulus as if it were a field. Zero-divisor discoveries — during
// inversion or structural zero certification — raise SplitEvent carrying the
// factorization found by the gcd.
template <class Base>
class DynExtField {
public:
    using BaseField = Base;
    using BaseElem = typename Base::Elem;
    using Elem = UPoly<BaseElem>;  // representative of degree < deg(modulus)

    DynExtField(Base base, UPoly<BaseElem> modulus)
        : base_(std::move(base)), modulus_(std::move(modulus)), id_(next_dynext_id()) {
        check_internal(modulus_.c.size() >= 2, "dynamic extension needs deg(modulus) >= 1");
        check_internal(base_.is_one(modulus_.c.back()), "dynamic extension modulus must be monic");
    }

    const Base& base() const { return base_; }
    const UPoly<BaseElem>& modulus() const { return modulus_; }
    std::uint64_t id() const { return id_; }
    std::size_t extension_degree() const { return modulus_.c.size() - 1; }

    Elem zero() const { return {}; }
    Elem one() const { return upoly_one(base_); }
    Elem from_int(long n) const { return upoly_const(base_, base_.from_int(n)); }
    Elem from_rat(const Rat& r) const { return upoly_const(base_, base_.from_rat(r)); }
    Elem from_base(const BaseElem& b) const { return upoly_const(base_, b); }
    // The residue class of x, i.e. the tracked root of the modulus.
    Elem generator() const { return reduce(upoly_monomial(base_, 1)); }

    Elem add(const Elem& a, const Elem& b) const { return upoly_add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return upoly_sub(base_, a, b); }
    Elem neg(const Elem& a) const { return upoly_neg(base_, a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(upoly_mul(base_, a, b)); }

    Elem inv(const Elem& a) const {
        if (a.c.empty()) throw StructuralError("inverse of zero in dynamic extension");
        auto eg = upoly_ext_gcd(base_, a, modulus_);
        if (eg.g.c.size() == 1) return reduce(eg.u);
        split_on(eg.g);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // Representational zero test only: a nonzero representative may still be
    // a zero divisor. Splits are forced where structure depends on it, in
    // certify_nonzero.
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool is_one(const Elem& a) const { return a.c.size() == 1 && base_.is_one(a.c[0]); }
    bool eq(const Elem& a, const Elem& b) const { return upoly_is_zero(base_, upoly_sub(base_, a, b)); }

    // The element must be nonzero at every root of the modulus tracked by
    // this branch; if it only vanishes at some of them, branch now.
    void certify_nonzero(const Elem& a) const {
        check_internal(!a.c.empty(), "certify_nonzero(dynext): zero element");
        auto g = upoly_gcd(base_, a, modulus_);
        if (g.c.size() == 1) return;
        check_internal(g.c.size() < modulus_.c.size(),
                       "certify_nonzero(dynext): reduced representative divisible by modulus");
        split_on(g);
    }

    std::string to_string(const Elem& a) const { return upoly_to_string(base_, a, "@"); }

    Elem reduce(const UPoly<BaseElem>& raw) const {
        if (raw.c.size() < modulus_.c.size()) return raw;
        // modulus is monic, so remainder needs no inversions
        UPoly<BaseElem> r = raw;
        while (r.c.size() >= modulus_.c.size()) {
            BaseElem lead = r.c.back();
            std::size_t shift = r.c.size() - modulus_.c.size();
            if (!base_.is_zero(lead)) {
                for (std::size_t i = 0; i + 1 < modulus_.c.size(); ++i)
                    r.c[shift + i] = base_.sub(r.c[shift + i], base_.mul(lead, modulus_.c[i]));
            }
            r.c.pop_back();
            upoly_trim(base_, r);
        }
        return r;
    }

private:
    [[noreturn]] void split_on(const UPoly<BaseElem>& g) const {
        UPoly<BaseElem> q1 = g;  // monic from the gcd
        UPoly<BaseElem> q2 = upoly_exact_div(base_, modulus_, q1);
        throw SplitEvent<Base>{id_, std::move(q1), std::move(q2)};
    }

    Base base_;
    UPoly<BaseElem> modulus_;
    std::uint64_t id_;
};

// Splits a squarefree modulus at an exhibited zero divisor. The witness must
// be nonzero and non-invertible in Base[x]/(q); an invertible witness is a
// caller bug.
template <class Base>
std::pair<UPoly<typename Base::Elem>, UPoly<typename Base::Elem>>
univ_split(const Base& base, const UPoly<typename Base::Elem>& q,
           const UPoly<typename Base::Elem>& witness) {
    if (witness.c.empty()) throw StructuralError("univ_split: witness is zero");
    auto g = upoly_gcd(base, witness, q);
    if (g.c.size() == 1) throw StructuralError("univ_split: witness is invertible, nothing to split");
    if (g.c.size() >= q.c.size())
        throw StructuralError("univ_split: witness vanishes on the whole modulus");
    return {g, upoly_exact_div(base, q, g)};
}

// Runs `body` over every branch of Base[x]/(modulus), transparently replaying
// it whenever a zero divisor splits the current branch. Returns one result
// per final branch, in a deterministic order (splits explored gcd-factor
// first). Splits belonging to enclosing towers propagate out untouched.
template <class Base, class Fn>
auto d5_run(const Base& base, UPoly<typename Base::Elem> modulus, Fn&& body)
    -> std::vector<std::pair<UPoly<typename Base::Elem>,
                             decltype(body(std::declval<const DynExtField<Base>&>()))>> {
    using Result = decltype(body(std::declval<const DynExtField<Base>&>()));
    std::vector<std::pair<UPoly<typename Base::Elem>, Result>> out;
    std::deque<UPoly<typename Base::Elem>> work;
    work.push_back(std::move(modulus));
    while (!work.empty()) {
        UPoly<typename Base::Elem> q = std::move(work.front());
        work.pop_front();
        DynExtField<Base> field(base, q);
        try {
            out.emplace_back(q, body(field));
        } catch (SplitEvent<Base>& ev) {
            if (ev.field_id != field.id()) throw;
            // replay on both factors, gcd factor first, ahead of other work
            work.push_front(std::move(ev.q2));
            work.push_front(std::move(ev.q1));
        }
    }
    return out;
}

}  // namespace bifurcata

#endif
