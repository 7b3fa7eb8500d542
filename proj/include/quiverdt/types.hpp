#pragma once

#include "quiverdt/partition.hpp"
#include "quiverdt/ratfun.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace quiverdt {

// Support key of a type: a degree d >= 1 together with a nonzero
// multipartition.
using TypeKey = std::pair<int, MultiPartition>;

struct TypeKeyLess {
    bool operator()(const TypeKey& a, const TypeKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return multipartition_precedes(a.second, b.second);
    }
};

// Finitely supported map (d, mu) -> positive multiplicity. The zero type
// (empty support) only occurs as the unique type of the zero dimension
// vector.
class TypeOmega {
  public:
    explicit TypeOmega(size_t arity) : arity_(arity) {}

    void add(int d, const MultiPartition& mu, int multiplicity);
    const std::map<TypeKey, int, TypeKeyLess>& support() const { return support_; }
    size_t arity() const { return arity_; }

    DimVector size() const;        // per vertex: sum of d * |mu^i| * multiplicity
    int r_omega() const;           // sum of multiplicities
    bool is_zero() const { return support_.empty(); }

    bool operator==(const TypeOmega& o) const {
        return arity_ == o.arity_ && support_ == o.support_;
    }

  private:
    size_t arity_;
    std::map<TypeKey, int, TypeKeyLess> support_;
};

// Lexicographic order on the canonical support sequences.
bool type_precedes(const TypeOmega& a, const TypeOmega& b);

// All types of size v, canonically ordered.
std::vector<TypeOmega> enumerate_types(const DimVector& v);

// The constant attached to a type: 0 when the support mixes several degrees,
// otherwise mobius(d)/d * (-1)^(r-1) * (r-1)! / prod of multiplicity
// factorials. Errors on the zero type.
mpq_class c_omega(const TypeOmega& omega);

// Order of the relative Weyl group: prod over the support of d^mult * mult!.
mpz_class weyl_order(const TypeOmega& omega);

// Number of monic irreducible polynomials of degree d over F_q other than x,
// as a formal expression in a rational q: (1/d) * sum over r | d of
// mobius(r) * (q^(d/r) - 1).
mpq_class phi_d(int d, const mpq_class& q);

// Centralizer order polynomial: Z_mu(t) = prod over vertices of
// t^pairing(mu^i, mu^i) * prod over part sizes k of phi_{m_k}(1/t) where
// phi_m(x) = prod_{j=1..m} (1 - x^j). Always a polynomial in t.
RatFun centralizer_poly(const MultiPartition& mu);

// Z_omega(t) = prod over the support of Z_mu(t^d)^multiplicity.
RatFun centralizer_poly_type(const TypeOmega& omega);

}  // namespace quiverdt
