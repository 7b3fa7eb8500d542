#pragma once

#include "quiverdt/poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace quiverdt {

// Element of a cyclotomic field Q(zeta_m), m <= 100, written in the power
// basis 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.
// Values that turn out rational are renormalized to conductor 1.
class Cyclo {
  public:
    Cyclo() : m_(1), c_(1, mpq_class(0)) {}
    explicit Cyclo(const mpq_class& r) : m_(1), c_(1, r) {}

    // zeta_m^k (k may be negative)
    static Cyclo root_power(int m, long k);

    int modulus() const { return m_; }
    // power-basis coordinates, length phi(modulus())
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const { return m_ == 1; }
    mpq_class to_rational() const;  // throws math_error when irrational

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo scaled(const mpq_class& s) const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // complex conjugation, zeta -> zeta^(m-1)
    Cyclo conj() const;

  private:
    Cyclo(int m, std::vector<mpq_class> c);
    Cyclo lifted(int target_m) const;
    void reduce_and_normalize(std::vector<mpq_class> raw);

    int m_;
    std::vector<mpq_class> c_;  // length phi(m_)
};

Cyclo cyclo_embed(int m, long k);

// m-th cyclotomic polynomial over Q (cached)
const Poly& cyclotomic_polynomial(int m);
int euler_phi(int m);

}  // namespace quiverdt
