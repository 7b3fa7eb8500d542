#include "quiverdt/types.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"

#include <algorithm>

namespace quiverdt {

void TypeOmega::add(int d, const MultiPartition& mu, int multiplicity) {
    if (d < 1) throw input_error("type support needs degree d >= 1");
    if (mu.is_zero()) throw input_error("type support may not contain the zero multipartition");
    if (mu.arity() != arity_) throw input_error("type support entry has the wrong arity");
    if (multiplicity < 1) throw input_error("type multiplicity must be positive");
    support_[{d, mu}] += multiplicity;
}

DimVector TypeOmega::size() const {
    DimVector v(arity_, 0);
    for (const auto& [key, mult] : support_) {
        DimVector mv = key.second.size();
        for (size_t i = 0; i < arity_; ++i) v[i] += key.first * mv[i] * mult;
    }
    return v;
}

int TypeOmega::r_omega() const {
    int r = 0;
    for (const auto& [key, mult] : support_) r += mult;
    return r;
}

bool type_precedes(const TypeOmega& a, const TypeOmega& b) {
    auto ia = a.support().begin(), ib = b.support().begin();
    TypeKeyLess less;
    for (; ia != a.support().end() && ib != b.support().end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.support().end() && ib != b.support().end();
}

namespace {

// all candidate support keys for size v, canonically ordered
std::vector<TypeKey> candidate_keys(const DimVector& v) {
    int maxd = 0;
    for (int x : v) maxd = std::max(maxd, x);
    std::vector<TypeKey> keys;
    for (int d = 1; d <= maxd; ++d) {
        DimVector cap(v.size());
        for (size_t i = 0; i < v.size(); ++i) cap[i] = v[i] / d;
        std::vector<MultiPartition> mus;
        for_each_below(cap, [&](const DimVector& w) {
            if (dim_is_zero(w)) return;
            for (const auto& mu : enumerate_multipartitions(w)) mus.push_back(mu);
        });
        std::sort(mus.begin(), mus.end(), multipartition_precedes);
        for (const auto& mu : mus) keys.emplace_back(d, mu);
    }
    return keys;
}

void types_rec(const std::vector<TypeKey>& keys, size_t idx, DimVector& remaining,
               TypeOmega& current, std::vector<TypeOmega>& out) {
    if (dim_is_zero(remaining)) {
        out.push_back(current);
        return;
    }
    if (idx == keys.size()) return;
    const auto& [d, mu] = keys[idx];
    DimVector step = mu.size();
    for (auto& x : step) x *= d;
    // multiplicity 0 first, then as many copies as fit
    types_rec(keys, idx + 1, remaining, current, out);
    int m = 0;
    while (true) {
        bool fits = true;
        for (size_t i = 0; i < remaining.size(); ++i)
            if (remaining[i] < step[i]) { fits = false; break; }
        if (!fits) break;
        for (size_t i = 0; i < remaining.size(); ++i) remaining[i] -= step[i];
        ++m;
        TypeOmega next = current;
        next.add(d, mu, m);
        types_rec(keys, idx + 1, remaining, next, out);
    }
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] += m * step[i];
}

}  // namespace

std::vector<TypeOmega> enumerate_types(const DimVector& v) {
    for (int x : v)
        if (x < 0) throw input_error("enumerate_types needs a nonnegative dimension vector");
    std::vector<TypeKey> keys = candidate_keys(v);
    std::vector<TypeOmega> out;
    DimVector remaining = v;
    TypeOmega empty(v.size());
    types_rec(keys, 0, remaining, empty, out);
    std::sort(out.begin(), out.end(), type_precedes);
    return out;
}

mpq_class c_omega(const TypeOmega& omega) {
    if (omega.is_zero()) throw input_error("c_omega of the zero type");
    int d = omega.support().begin()->first.first;
    for (const auto& [key, mult] : omega.support())
        if (key.first != d) return mpq_class(0);
    int r = omega.r_omega();
    mpz_class num(mobius(d));
    if ((r - 1) % 2 != 0) num = -num;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r - 1));
    num *= fact;
    mpz_class den(d);
    for (const auto& [key, mult] : omega.support()) {
        mpz_class mf;
        mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mult));
        den *= mf;
    }
    mpq_class result(num, den);
    result.canonicalize();
    return result;
}

mpz_class weyl_order(const TypeOmega& omega) {
    mpz_class w(1);
    for (const auto& [key, mult] : omega.support()) {
        mpz_class dpow;
        mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(key.first),
                      static_cast<unsigned long>(mult));
        mpz_class mf;
        mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mult));
        w *= dpow * mf;
    }
    return w;
}

namespace {
mpq_class mpq_pow(const mpq_class& q, unsigned long k) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
    return r;  // canonical since q is
}
}  // namespace

mpq_class phi_d(int d, const mpq_class& q) {
    if (d < 1) throw input_error("phi_d needs d >= 1");
    mpq_class sum(0);
    for (int r : divisors(d))
        sum += mobius(r) * (mpq_pow(q, static_cast<unsigned long>(d / r)) - 1);
    sum /= d;
    return sum;
}

RatFun centralizer_poly(const MultiPartition& mu) {
    RatFun z(mpq_class(1));
    for (const auto& lambda : mu.components()) {
        z = z * RatFun::t_pow(static_cast<int>(pairing(lambda, lambda)));
        for (int k = 1; k <= lambda.max_part(); ++k) {
            int m = lambda.multiplicity(k);
            for (int j = 1; j <= m; ++j)
                z = z * (RatFun::constant(1) - RatFun::t_pow(-j));
        }
    }
    return z;
}

RatFun centralizer_poly_type(const TypeOmega& omega) {
    RatFun z(mpq_class(1));
    for (const auto& [key, mult] : omega.support())
        z = z * centralizer_poly(key.second).substitute_power(key.first).pow(mult);
    return z;
}

}  // namespace quiverdt
