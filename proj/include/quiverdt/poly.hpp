#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quiverdt {

// Dense polynomial in t over Q, coefficients low degree first, no trailing
// zeros (the zero polynomial stores an empty vector).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const mpq_class& c);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly t();                      // the monomial t
    static Poly t_pow(int k);             // t^k, k >= 0
    static Poly constant(long c) { return Poly(mpq_class(c)); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpq_class& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    mpq_class eval(const mpq_class& x) const;
    Poly substitute_power(int d) const;   // t -> t^d
    Poly pow(unsigned k) const;

    // Euclidean division: *this = q*divisor + r with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly monic() const;                   // divide by the leading coefficient

    bool integer_coeffs() const;
    bool nonneg_integer_coeffs() const;

  private:
    void trim();
    std::vector<mpq_class> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace quiverdt
