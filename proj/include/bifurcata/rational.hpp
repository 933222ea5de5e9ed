#ifndef BIFURCATA_RATIONAL_HPP
#define BIFURCATA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "bifurcata/errors.hpp"

namespace bifurcata {

// Exact rational number, GMP-backed. Always canonical: gcd(|num|, den) = 1,
// den >= 1, the zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}    // NOLINT: implicit conversion from integers is intended
    Rat(long n) : v_(n) {}   // NOLINT
    Rat(long n, unsigned long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    // Accepts "n" or "p/q" with an optional leading sign, base 10.
    static Rat from_string(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw StructuralError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw StructuralError("inverse of zero rational");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // "p/q" when the denominator is nontrivial, plain integer text otherwise.
    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat Rat::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw StructuralError("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0) throw StructuralError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rat(std::move(q));
}

inline Rat rat_gcd(const Rat& a, const Rat& b) {
    // gcd on Q normalized as gcd(num)/lcm(den); used for content extraction.
    mpz_class gn, gd;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(gd.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    if (gd == 0) return Rat(0);
    mpq_class q(gn, gd);
    q.canonicalize();
    return Rat(std::move(q));
}

// Field context over Q. All generic algebra is written against this interface;
// see prime_field.hpp / ratfunc.hpp / dynext.hpp for the other towers.
struct RatField {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long n) const { return Rat(n); }
    Elem from_rat(const Rat& r) const { return r; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem inv(const Elem& a) const { return a.inverse(); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Structural nonzero certification point. Over plain Q a stored nonzero
    // value cannot degenerate further, so this is an assertion only.
    void certify_nonzero(const Elem& a) const {
        check_internal(!a.is_zero(), "certify_nonzero(Q): zero element");
    }

    std::string to_string(const Elem& a) const { return a.to_string(); }
};

}  // namespace bifurcata

#endif
