#include "quiverdt/invariants.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"
#include "quiverdt/types.hpp"

#include <algorithm>

namespace quiverdt {

FamilyTable hua_family(const Quiver& g) {
    return FamilyTable(static_cast<size_t>(g.vertices()),
                       [g](const MultiPartition& mu) { return hua_term(g, mu); });
}

namespace {

RatFun steinberg_unipotent(const MultiPartition& mu) {
    for (const auto& comp : mu.components())
        for (int p : comp.parts())
            if (p != 1) return RatFun();
    DimVector v = mu.size();
    long squares = 0;
    for (int x : v) squares += static_cast<long>(x) * x;
    long e = HalfExponent::of_halves(squares - delta(v)).finalize();
    return RatFun::t_pow(static_cast<int>(e));
}

RatFun apply_delta_sign(const RatFun& f, const DimVector& w) {
    return delta(w) % 2 != 0 ? -f : f;
}

}  // namespace

FamilyTable steinberg_hua_family(const Quiver& g) {
    return FamilyTable(static_cast<size_t>(g.vertices()), [g](const MultiPartition& mu) {
        RatFun st = steinberg_unipotent(mu);
        if (st.is_zero()) return st;
        return apply_delta_sign(st * hua_term(g, mu), mu.size());
    });
}

std::map<DimVector, RatFun> generic_multiplicity_table(const FamilyTable& f,
                                                       const DimVector& v) {
    FamilyTable normalized(f.arity(), [&f](const MultiPartition& mu) {
        return f.value(mu) / centralizer_poly(mu);
    });
    TruncatedSeries log_table = plog(family_series(normalized, v));
    RatFun tm1 = RatFun::t() - RatFun::constant(1);

    std::map<DimVector, RatFun> out;
    for_each_below(v, [&](const DimVector& w) {
        if (dim_is_zero(w)) return;
        RatFun via_types;
        for (const auto& omega : enumerate_types(w)) {
            mpq_class c = c_omega(omega);
            if (c == 0) continue;
            via_types = via_types + f.type_value(omega) /
                                        centralizer_poly_type(omega) * RatFun(c);
        }
        via_types = via_types * tm1;
        RatFun via_log = log_table.coeff(w) * tm1;
        if (via_types != via_log)
            throw math_error("generic multiplicity routes disagree at w = " + dim_text(w));
        out.emplace(w, std::move(via_types));
    });
    return out;
}

RatFun generic_multiplicity(const FamilyTable& f, const DimVector& v) {
    if (dim_is_zero(v)) return RatFun();
    return generic_multiplicity_table(f, v).at(v);
}

std::map<DimVector, Poly> kac_polynomials(const Quiver& g, const DimVector& v) {
    FamilyTable hua = hua_family(g);
    std::map<DimVector, Poly> out;
    for (const auto& [w, val] : generic_multiplicity_table(hua, v)) {
        if (!val.is_polynomial() || !val.as_polynomial().integer_coeffs())
            throw math_error("Kac value at w = " + dim_text(w) +
                             " is not an integer polynomial");
        out.emplace(w, val.as_polynomial());
    }
    return out;
}

namespace {

RatFun dt_genfun_coeff(const Quiver& g, const DimVector& w) {
    long gb = gamma_bar(g, w), dl = delta(w);
    long e = HalfExponent::of_halves(-(gb + dl)).finalize();
    RatFun c = RatFun::t_pow(static_cast<int>(e));
    for (int wi : w)
        for (int j = 1; j <= wi; ++j)
            c = c / (RatFun::constant(1) - RatFun::t_pow(-j));
    return apply_delta_sign(c, w);
}

Poly cast_dt_value(const RatFun& val, const DimVector& w) {
    if (!val.is_polynomial() || !val.as_polynomial().nonneg_integer_coeffs())
        throw math_error("DT value at w = " + dim_text(w) +
                         " is not a polynomial with nonnegative integer coefficients");
    return val.as_polynomial();
}

}  // namespace

TruncatedSeries dt_generating_series(const Quiver& g, const DimVector& v) {
    TruncatedSeries s(v);
    for_each_below(v, [&](const DimVector& w) { s.set_coeff(w, dt_genfun_coeff(g, w)); });
    return s;
}

TruncatedSeries hua_series(const Quiver& g, const DimVector& v) {
    FamilyTable f = hua_family(g);
    FamilyTable normalized(f.arity(), [f](const MultiPartition& mu) {
        return f.value(mu) / centralizer_poly(mu);
    });
    return family_series(normalized, v);
}

std::map<DimVector, Poly> dt_invariants(const Quiver& g, const DimVector& v) {
    TruncatedSeries s = dt_generating_series(g, v);
    TruncatedSeries log_table = plog(s);
    RatFun tm1 = RatFun::t() - RatFun::constant(1);

    std::map<DimVector, Poly> out;
    for_each_below(v, [&](const DimVector& w) {
        if (dim_is_zero(w)) return;
        RatFun val = apply_delta_sign(log_table.coeff(w) * tm1, w);
        out.emplace(w, cast_dt_value(val, w));
    });
    return out;
}

std::map<DimVector, Poly> dt_via_steinberg(const Quiver& g, const DimVector& v) {
    FamilyTable f = steinberg_hua_family(g);
    std::map<DimVector, Poly> reference = dt_invariants(g, v);
    std::map<DimVector, Poly> out;
    for (const auto& [w, val] : generic_multiplicity_table(f, v)) {
        Poly p = cast_dt_value(apply_delta_sign(val, w), w);
        if (p != reference.at(w))
            throw math_error("Steinberg route disagrees with the generating function at w = " +
                             dim_text(w));
        out.emplace(w, std::move(p));
    }
    return out;
}

std::map<DimVector, RatFun> total_count_symbolic(const Quiver& g, const DimVector& v) {
    TruncatedSeries a(v);
    for (const auto& [w, p] : kac_polynomials(g, v)) a.set_coeff(w, RatFun(p));
    TruncatedSeries total = pexp(a);
    std::map<DimVector, RatFun> out;
    for_each_below(v, [&](const DimVector& w) { out.emplace(w, total.coeff(w)); });
    return out;
}

namespace {

TruncatedSeries series_int_pow(TruncatedSeries base, mpz_class e) {
    TruncatedSeries acc = TruncatedSeries::one(base.bound());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

mpz_class ipow(long base, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

}  // namespace

std::map<DimVector, mpq_class> total_count_series(const Quiver& g, const DimVector& v,
                                                  long q) {
    if (!is_prime_power(q)) throw input_error("q must be a prime power >= 2");
    std::map<DimVector, RatFun> symbolic = total_count_symbolic(g, v);

    FamilyTable hua = hua_family(g);
    int maxd = 0;
    for (int x : v) maxd = std::max(maxd, x);

    TruncatedSeries prod = TruncatedSeries::one(v);
    for (int d = 1; d <= maxd; ++d) {
        mpq_class exponent = phi_d(d, mpq_class(q));
        if (exponent.get_den() != 1 || exponent < 0)
            throw math_error("irreducible-count exponent is not a nonnegative integer");
        mpq_class qd(ipow(q, d));
        TruncatedSeries factor = TruncatedSeries::one(v);
        DimVector cap(v.size());
        for (size_t i = 0; i < v.size(); ++i) cap[i] = v[i] / d;
        for_each_below(cap, [&](const DimVector& w) {
            if (dim_is_zero(w)) return;
            mpq_class coeff(0);
            for (const auto& mu : enumerate_multipartitions(w))
                coeff += hua.value(mu).eval(qd) / centralizer_poly(mu).eval(qd);
            DimVector scaled(w.size());
            for (size_t i = 0; i < w.size(); ++i) scaled[i] = d * w[i];
            factor.set_coeff(scaled, RatFun(coeff));
        });
        prod = prod * series_int_pow(std::move(factor), exponent.get_num());
    }

    std::map<DimVector, mpq_class> out;
    for_each_below(v, [&](const DimVector& w) {
        const RatFun& c = prod.coeff(w);
        if (!c.is_polynomial() || c.num().degree() > 0)
            throw math_error("product route produced a non-constant coefficient");
        mpq_class via_product = c.is_zero() ? mpq_class(0) : c.num().coeff(0);
        mpq_class via_exp = symbolic.at(w).eval(q);
        if (via_product != via_exp)
            throw math_error("isomorphism-class counts disagree between the product and "
                             "exp routes at w = " + dim_text(w));
        out.emplace(w, via_product);
    });
    return out;
}

InvariantReport full_report(const Quiver& g, const DimVector& v) {
    InvariantReport rep;
    rep.box = v;
    FamilyTable hua = hua_family(g);
    rep.vgen = generic_multiplicity_table(hua, v);
    rep.kac = kac_polynomials(g, v);
    rep.dt = dt_via_steinberg(g, v);  // internally checks the generating function
    rep.total = total_count_symbolic(g, v);
    rep.routes = {"kac: type-sum cross-checked against plethystic log",
                  "dt: generating function cross-checked against the Steinberg family",
                  "total: plethystic exp of the Kac table"};
    return rep;
}

}  // namespace quiverdt
