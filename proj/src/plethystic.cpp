#include "quiverdt/plethystic.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"

#include <algorithm>

namespace quiverdt {

const RatFun& FamilyTable::value(const MultiPartition& mu) const {
    if (mu.arity() != arity_) throw input_error("family table queried at the wrong arity");
    auto it = memo_.find(mu);
    if (it != memo_.end()) return it->second;
    RatFun v = mu.is_zero() ? RatFun(mpq_class(1)) : producer_(mu);
    return memo_.emplace(mu, std::move(v)).first->second;
}

RatFun FamilyTable::type_value(const TypeOmega& omega) const {
    RatFun h(mpq_class(1));
    for (const auto& [key, mult] : omega.support())
        h = h * value(key.second).substitute_power(key.first).pow(mult);
    return h;
}

TruncatedSeries adams(const TruncatedSeries& f, int d) {
    if (d < 1) throw input_error("adams operation needs d >= 1");
    TruncatedSeries r(f.bound());
    DimVector scaled(f.bound().size());
    for_each_below(f.bound(), [&](const DimVector& e) {
        const RatFun& c = f.coeff(e);
        if (c.is_zero()) return;
        for (size_t i = 0; i < e.size(); ++i) scaled[i] = d * e[i];
        if (!r.in_box(scaled)) return;
        r.set_coeff(scaled, c.substitute_power(d));
    });
    return r;
}

namespace {
int adams_cutoff(const TruncatedSeries& f) {
    int m = 0;
    for (int b : f.bound()) m = std::max(m, b);
    return m;
}
}  // namespace

TruncatedSeries psi(const TruncatedSeries& f) {
    if (!f.constant_term().is_zero())
        throw input_error("psi needs zero constant term");
    TruncatedSeries acc(f.bound());
    for (int d = 1; d <= adams_cutoff(f); ++d)
        acc = acc + adams(f, d).scaled(RatFun(mpq_class(1, d)));
    return acc;
}

TruncatedSeries psi_inv(const TruncatedSeries& f) {
    if (!f.constant_term().is_zero())
        throw input_error("psi_inv needs zero constant term");
    TruncatedSeries acc(f.bound());
    for (int d = 1; d <= adams_cutoff(f); ++d) {
        int mu = mobius(d);
        if (mu == 0) continue;
        acc = acc + adams(f, d).scaled(RatFun(mpq_class(mu, d)));
    }
    return acc;
}

TruncatedSeries plog(const TruncatedSeries& f) { return psi_inv(series_log(f)); }

TruncatedSeries pexp(const TruncatedSeries& f) { return series_exp(psi(f)); }

TruncatedSeries family_series(const FamilyTable& h, const DimVector& v) {
    TruncatedSeries s(v);
    for_each_below(v, [&](const DimVector& w) {
        if (dim_is_zero(w)) {
            s.set_coeff(w, RatFun(mpq_class(1)));
            return;
        }
        RatFun total;
        for (const auto& mu : enumerate_multipartitions(w)) total = total + h.value(mu);
        s.set_coeff(w, total);
    });
    return s;
}

TruncatedSeries log_via_types(const FamilyTable& h, const DimVector& v) {
    TruncatedSeries s(v);
    for_each_below(v, [&](const DimVector& w) {
        if (dim_is_zero(w)) return;
        RatFun total;
        for (const auto& omega : enumerate_types(w))
            total = total + h.type_value(omega) * RatFun(c_omega(omega));
        s.set_coeff(w, total);
    });
    return s;
}

}  // namespace quiverdt
