#pragma once

#include "quiverdt/poly.hpp"

#include <gmpxx.h>

namespace quiverdt {

// Rational function in t over Q, kept reduced with a monic denominator.
class RatFun {
  public:
    RatFun() : num_(), den_(Poly::constant(1)) {}
    RatFun(Poly num, Poly den);
    explicit RatFun(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    explicit RatFun(const mpq_class& c) : num_(Poly(c)), den_(Poly::constant(1)) {}

    static RatFun t() { return RatFun(Poly::t()); }
    static RatFun constant(long c) { return RatFun(mpq_class(c)); }
    // t^k for any integer k, negative k giving 1/t^(-k)
    static RatFun t_pow(int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // numerator as a Poly; requires is_polynomial()
    Poly as_polynomial() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun pow(int k) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // substitute t -> t^d in numerator and denominator
    RatFun substitute_power(int d) const;
    mpq_class eval(const mpq_class& x) const;

  private:
    void reduce();
    // wrap an already-coprime pair, only normalizing the denominator monic
    static RatFun from_coprime(Poly num, Poly den);
    Poly num_, den_;
};

// Integer that is allowed to sit at a half-integer stage while being
// accumulated, stored doubled; finalize() checks the result is a whole
// number. Used for exponents of t of the shape (a + b)/2.
class HalfExponent {
  public:
    HalfExponent() : twice_(0) {}
    static HalfExponent of_halves(long twice_value) { return HalfExponent(twice_value); }
    static HalfExponent whole(long v) { return HalfExponent(2 * v); }

    HalfExponent operator+(const HalfExponent& o) const { return HalfExponent(twice_ + o.twice_); }
    HalfExponent operator-(const HalfExponent& o) const { return HalfExponent(twice_ - o.twice_); }
    long twice_value() const { return twice_; }
    // throws math_error when the accumulated value is not an integer
    long finalize() const;

  private:
    explicit HalfExponent(long twice) : twice_(twice) {}
    long twice_;
};

}  // namespace quiverdt
