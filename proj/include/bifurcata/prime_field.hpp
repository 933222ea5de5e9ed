#ifndef BIFURCATA_PRIME_FIELD_HPP
#define BIFURCATA_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "bifurcata/errors.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

// Residue in [0, p). Carries its modulus so mixed-modulus arithmetic is a
// detectable bug rather than silent garbage.
struct PrimeFieldElem {
    std::uint64_t residue = 0;
    std::uint64_t p = 0;  // 0 marks a default-constructed (unattached) zero

    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a.residue == b.residue && (a.p == b.p || a.residue == 0);
    }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// F_p for a small prime p (jet counting and mod-p smoothness checks only;
// moduli stay far below 2^31 so products fit in 64 bits).
class PrimeField {
public:
    using Elem = PrimeFieldElem;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t(1) << 31))
            throw PreconditionError("prime modulus too large: " + std::to_string(p));
        if (!is_prime_u64(p))
            throw PreconditionError("modulus is not prime: " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return {0, p_}; }
    Elem one() const { return {1 % p_, p_}; }
    Elem from_int(long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return {static_cast<std::uint64_t>(r), p_};
    }
    Elem from_rat(const Rat& r) const {
        mpz_class num = r.numerator(), den = r.denominator();
        mpz_class zp(static_cast<unsigned long>(p_));
        mpz_class nm = num % zp, dm = den % zp;
        if (dm < 0) dm += zp;
        if (nm < 0) nm += zp;
        if (dm == 0)
            throw PreconditionError("denominator of coefficient divisible by p = " + std::to_string(p_));
        Elem n{nm.get_ui(), p_}, d{dm.get_ui(), p_};
        return mul(n, inv(d));
    }

    Elem add(const Elem& a, const Elem& b) const {
        attach_check(a, b);
        std::uint64_t s = a.residue + b.residue;
        if (s >= p_) s -= p_;
        return {s, p_};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        attach_check(a, b);
        std::uint64_t s = a.residue + p_ - b.residue;
        if (s >= p_) s -= p_;
        return {s, p_};
    }
    Elem neg(const Elem& a) const { return a.residue == 0 ? zero() : Elem{p_ - a.residue, p_}; }
    Elem mul(const Elem& a, const Elem& b) const {
        attach_check(a, b);
        return {(a.residue * b.residue) % p_, p_};
    }
    Elem inv(const Elem& a) const {
        if (a.residue == 0) throw StructuralError("inverse of zero in F_p");
        // extended Euclid
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a.residue);
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        check_internal(r == 1, "F_p inversion: gcd != 1 despite prime modulus");
        if (t < 0) t += static_cast<long long>(p_);
        return {static_cast<std::uint64_t>(t), p_};
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.residue == 0; }
    bool is_one(const Elem& a) const { return a.residue == 1 % p_; }
    bool eq(const Elem& a, const Elem& b) const { return a.residue == b.residue; }

    void certify_nonzero(const Elem& a) const {
        check_internal(a.residue != 0, "certify_nonzero(F_p): zero element");
    }

    std::string to_string(const Elem& a) const { return std::to_string(a.residue); }

private:
    void attach_check(const Elem& a, const Elem& b) const {
        check_internal((a.p == 0 || a.p == p_) && (b.p == 0 || b.p == p_),
                       "mixed prime-field moduli");
    }

    std::uint64_t p_;
};

}  // namespace bifurcata

#endif
