#pragma once

#include "quiverdt/dimvec.hpp"
#include "quiverdt/ratfun.hpp"

#include <vector>

namespace quiverdt {

// Power series in variables T_1..T_r truncated to the box 0 <= e <= bound
// (componentwise), coefficients rational functions in t. Stored densely in
// mixed-radix order, last variable fastest.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(DimVector bound);

    const DimVector& bound() const { return bound_; }
    size_t n_vars() const { return bound_.size(); }
    size_t n_entries() const { return c_.size(); }

    const RatFun& coeff(const DimVector& e) const;
    void set_coeff(const DimVector& e, RatFun v);
    void add_to_coeff(const DimVector& e, const RatFun& v);

    bool in_box(const DimVector& e) const;
    const RatFun& constant_term() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const RatFun& s) const;
    bool operator==(const TruncatedSeries& o) const;

    static TruncatedSeries one(const DimVector& bound);

  private:
    size_t index(const DimVector& e) const;
    DimVector bound_;
    std::vector<RatFun> c_;
};

// log of a series with constant term 1
TruncatedSeries series_log(const TruncatedSeries& s);
// exp of a series with constant term 0
TruncatedSeries series_exp(const TruncatedSeries& s);

}  // namespace quiverdt
