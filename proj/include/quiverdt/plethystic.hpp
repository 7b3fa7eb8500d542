#pragma once

#include "quiverdt/partition.hpp"
#include "quiverdt/series.hpp"
#include "quiverdt/types.hpp"

#include <functional>
#include <map>

namespace quiverdt {

// Family of rational functions indexed by multipartitions, evaluated lazily
// from a callback and memoized. The zero multipartition always maps to 1.
class FamilyTable {
  public:
    using Producer = std::function<RatFun(const MultiPartition&)>;

    FamilyTable(size_t arity, Producer producer)
        : arity_(arity), producer_(std::move(producer)) {}

    size_t arity() const { return arity_; }
    const RatFun& value(const MultiPartition& mu) const;

    // H_omega = prod over the support of H_mu(t^d)^multiplicity
    RatFun type_value(const TypeOmega& omega) const;

  private:
    struct MuLess {
        bool operator()(const MultiPartition& a, const MultiPartition& b) const {
            return multipartition_precedes(a, b);
        }
    };
    size_t arity_;
    Producer producer_;
    mutable std::map<MultiPartition, RatFun, MuLess> memo_;
};

// f(t; T_1..T_r) -> f(t^d; T_1^d..T_r^d), dropping monomials that leave the
// box.
TruncatedSeries adams(const TruncatedSeries& f, int d);

// Sum over d >= 1 of adams(f, d)/d; finite because adams annihilates the box
// past the largest bound. Requires zero constant term.
TruncatedSeries psi(const TruncatedSeries& f);

// Moebius-inverted companion: sum of mobius(d)/d * adams(f, d).
TruncatedSeries psi_inv(const TruncatedSeries& f);

// plog = psi_inv of log (constant term 1); pexp = exp of psi (constant term
// 0). Mutual inverses on the box.
TruncatedSeries plog(const TruncatedSeries& f);
TruncatedSeries pexp(const TruncatedSeries& f);

// Sum over multipartitions mu with |mu| <= v of H_mu * T^|mu|, including the
// implicit 1 at mu = 0.
TruncatedSeries family_series(const FamilyTable& h, const DimVector& v);

// Coefficient table of the plethystic log computed through the type
// expansion instead: coefficient at T^w is the sum over types of size w of
// c_omega * H_omega. Deliberately shares no code with plog.
TruncatedSeries log_via_types(const FamilyTable& h, const DimVector& v);

}  // namespace quiverdt
