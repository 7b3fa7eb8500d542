#include "quiverdt/ratfun.hpp"

#include "quiverdt/error.hpp"

#include <utility>

namespace quiverdt {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    mpq_class lead = den_.leading();
    if (lead != 1) {
        mpq_class inv = mpq_class(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::t_pow(int k) {
    if (k >= 0) return RatFun(Poly::t_pow(k));
    return RatFun(Poly::constant(1), Poly::t_pow(-k));
}

Poly RatFun::as_polynomial() const {
    if (!is_polynomial())
        throw math_error("rational function is not a polynomial");
    // monic denominator, so degree 0 means den == 1
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {
Poly exact_div(const Poly& a, const Poly& g) {
    if (g.degree() == 0) return a;
    return a.divmod(g).first;
}
}  // namespace

RatFun RatFun::from_coprime(Poly num, Poly den) {
    RatFun r;
    if (num.is_zero()) return r;
    mpq_class lead = den.leading();
    if (lead != 1) {
        mpq_class inv = mpq_class(1) / lead;
        num = num * inv;
        den = den * inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // with both operands reduced, any common factor of the combined
    // numerator and denominator must divide g = gcd of the denominators
    Poly g = poly_gcd(den_, o.den_);
    if (g.degree() == 0)
        return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly db = exact_div(den_, g), dd = exact_div(o.den_, g);
    Poly n = num_ * dd + o.num_ * db;
    Poly d = db * o.den_;
    Poly g2 = poly_gcd(n, g);
    if (g2.degree() > 0) {
        n = exact_div(n, g2);
        d = exact_div(d, g2);
    }
    return from_coprime(std::move(n), std::move(d));
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    // cross-cancel so the product of the reduced pairs is again reduced
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    return from_coprime(exact_div(num_, g1) * exact_div(o.num_, g2),
                        exact_div(den_, g2) * exact_div(o.den_, g1));
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw input_error("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(int k) const {
    if (k == 0) return RatFun(mpq_class(1));
    if (k < 0) return RatFun(mpq_class(1)) / pow(-k);
    RatFun acc(mpq_class(1));
    RatFun base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RatFun RatFun::substitute_power(int d) const {
    return RatFun(num_.substitute_power(d), den_.substitute_power(d));
}

mpq_class RatFun::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw input_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

long HalfExponent::finalize() const {
    if (twice_ % 2 != 0)
        throw math_error("half-integer exponent where an integer was required");
    return twice_ / 2;
}

}  // namespace quiverdt
