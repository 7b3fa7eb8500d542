#include "quiverdt/series.hpp"

#include "quiverdt/error.hpp"

#include <utility>

namespace quiverdt {

TruncatedSeries::TruncatedSeries(DimVector bound) : bound_(std::move(bound)) {
    size_t n = 1;
    for (int b : bound_) {
        if (b < 0) throw input_error("series box with a negative bound");
        n *= static_cast<size_t>(b) + 1;
    }
    c_.assign(n, RatFun());
}

size_t TruncatedSeries::index(const DimVector& e) const {
    if (e.size() != bound_.size())
        throw input_error("series exponent of wrong arity");
    size_t idx = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > bound_[i])
            throw input_error("series exponent outside the box");
        idx = idx * (static_cast<size_t>(bound_[i]) + 1) + static_cast<size_t>(e[i]);
    }
    return idx;
}

bool TruncatedSeries::in_box(const DimVector& e) const {
    if (e.size() != bound_.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > bound_[i]) return false;
    return true;
}

const RatFun& TruncatedSeries::coeff(const DimVector& e) const { return c_[index(e)]; }

void TruncatedSeries::set_coeff(const DimVector& e, RatFun v) { c_[index(e)] = std::move(v); }

void TruncatedSeries::add_to_coeff(const DimVector& e, const RatFun& v) {
    size_t i = index(e);
    c_[i] = c_[i] + v;
}

const RatFun& TruncatedSeries::constant_term() const { return c_[0]; }

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (bound_ != o.bound_) throw input_error("series boxes differ");
    TruncatedSeries r(bound_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (bound_ != o.bound_) throw input_error("series boxes differ");
    TruncatedSeries r(bound_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (bound_ != o.bound_) throw input_error("series boxes differ");
    TruncatedSeries r(bound_);
    DimVector sum(bound_.size(), 0);
    for_each_below(bound_, [&](const DimVector& a) {
        size_t ia = index(a);
        if (c_[ia].is_zero()) return;
        for_each_below(bound_, [&](const DimVector& b) {
            for (size_t i = 0; i < sum.size(); ++i) {
                sum[i] = a[i] + b[i];
                if (sum[i] > bound_[i]) return;
            }
            size_t ib = index(b);
            if (o.c_[ib].is_zero()) return;
            r.add_to_coeff(sum, c_[ia] * o.c_[ib]);
        });
    });
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const RatFun& s) const {
    TruncatedSeries r(bound_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return bound_ == o.bound_ && c_ == o.c_;
}

TruncatedSeries TruncatedSeries::one(const DimVector& bound) {
    TruncatedSeries r(bound);
    r.set_coeff(DimVector(bound.size(), 0), RatFun(mpq_class(1)));
    return r;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s.constant_term() != RatFun(mpq_class(1)))
        throw input_error("series_log needs constant term 1");
    // log(1 + u) as an alternating sum; u^k dies past the total box degree
    TruncatedSeries u = s - TruncatedSeries::one(s.bound());
    TruncatedSeries acc(s.bound());
    TruncatedSeries p = u;
    int kmax = 0;
    for (int b : s.bound()) kmax += b;
    for (int k = 1; k <= kmax; ++k) {
        mpq_class c(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
        acc = acc + p.scaled(RatFun(c));
        if (k < kmax) p = p * u;
    }
    return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.constant_term().is_zero())
        throw input_error("series_exp needs constant term 0");
    TruncatedSeries acc = TruncatedSeries::one(s.bound());
    TruncatedSeries p = s;
    int kmax = 0;
    for (int b : s.bound()) kmax += b;
    mpz_class kfact(1);
    for (int k = 1; k <= kmax; ++k) {
        kfact *= k;
        mpq_class c(mpz_class(1), kfact);
        c.canonicalize();
        acc = acc + p.scaled(RatFun(c));
        if (k < kmax) p = p * s;
    }
    return acc;
}

}  // namespace quiverdt
