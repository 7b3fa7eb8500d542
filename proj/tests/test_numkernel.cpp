#include "doctest.h"

#include "quiverdt/cyclotomic.hpp"
#include "quiverdt/error.hpp"
#include "quiverdt/poly.hpp"
#include "quiverdt/ratfun.hpp"
#include "quiverdt/series.hpp"

#include <random>

using namespace quiverdt;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<mpq_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

// small random rational with a fixed-seed engine passed in
mpq_class rand_q(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Poly rand_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<mpq_class> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = rand_q(rng);
    return Poly(std::move(c));
}

RatFun rand_ratfun(std::mt19937& rng, int maxdeg) {
    Poly den;
    do {
        den = rand_poly(rng, maxdeg);
    } while (den.is_zero());
    return RatFun(rand_poly(rng, maxdeg), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly p = from_ints({1, -2, 0, 1});  // 1 - 2t + t^3
    CHECK(p.degree() == 3);
    CHECK(p.coeff(1) == -2);
    CHECK(p.coeff(2) == 0);
    CHECK(p.eval(2) == mpq_class(5));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(Poly::t_pow(0) == Poly::constant(1));

    Poly q = from_ints({-1, 1});  // t - 1
    CHECK(p * q == from_ints({-1, 3, -2, -1, 1}));
    CHECK(p.substitute_power(2) == from_ints({1, 0, -2, 0, 0, 0, 1}));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 60; ++i) {
        Poly a = rand_poly(rng, 5), b = rand_poly(rng, 5), c = rand_poly(rng, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        mpq_class x = rand_q(rng);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("polynomial division and gcd") {
    std::mt19937 rng(999);
    for (int i = 0; i < 40; ++i) {
        Poly a = rand_poly(rng, 6);
        Poly b;
        do {
            b = rand_poly(rng, 3);
        } while (b.is_zero());
        auto [q, r] = a.divmod(b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());

        Poly g = rand_poly(rng, 2);
        if (g.is_zero()) continue;
        Poly common = poly_gcd(a * g, b * g);
        // the common factor must divide the gcd
        CHECK(common.divmod(g.monic()).second.is_zero());
    }
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(from_ints({0, 2}), Poly()) == from_ints({0, 1}));
}

TEST_CASE("rational function canonical form and arithmetic") {
    // (t^2 - t)/(t - 1) reduces to t
    RatFun f(from_ints({0, -1, 1}), from_ints({-1, 1}));
    CHECK(f == RatFun::t());
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == Poly::t());

    // denominators come out monic
    RatFun g(from_ints({1}), from_ints({0, 2}));
    CHECK(g.den() == Poly::t());
    CHECK(g.num() == Poly(mpq_class(1, 2)));

    CHECK(RatFun::t_pow(-2) * RatFun::t_pow(5) == RatFun::t_pow(3));
    CHECK(RatFun::t().pow(-3) == RatFun::t_pow(-3));

    RatFun h = RatFun::t() - RatFun::constant(1);
    CHECK(h.eval(7) == mpq_class(6));
    CHECK((RatFun::t() / h).eval(2) == mpq_class(2));
    CHECK_THROWS_AS((RatFun::constant(1) / h).eval(1), input_error);
    CHECK_THROWS_AS(h / RatFun(), input_error);
    CHECK_THROWS_AS((RatFun::constant(1) / h).as_polynomial(), math_error);
}

TEST_CASE("rational function field axioms on random inputs") {
    std::mt19937 rng(777);
    for (int i = 0; i < 40; ++i) {
        RatFun a = rand_ratfun(rng, 3), b = rand_ratfun(rng, 3), c = rand_ratfun(rng, 3);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a.substitute_power(2) * b.substitute_power(2) == (a * b).substitute_power(2));
    }
}

TEST_CASE("half exponents") {
    HalfExponent e = HalfExponent::of_halves(3) + HalfExponent::of_halves(5);
    CHECK(e.finalize() == 4);
    CHECK(HalfExponent::whole(-2).finalize() == -2);
    CHECK_THROWS_AS(HalfExponent::of_halves(7).finalize(), math_error);
}

TEST_CASE("truncated series multiplication stays in the box") {
    TruncatedSeries one = TruncatedSeries::one({2});
    TruncatedSeries s({2});
    s.set_coeff({0}, RatFun(mpq_class(1)));
    s.set_coeff({1}, RatFun(mpq_class(1)));
    TruncatedSeries d({2});
    d.set_coeff({0}, RatFun(mpq_class(1)));
    d.set_coeff({1}, RatFun(mpq_class(-1)));
    TruncatedSeries p = s * d;  // (1+T)(1-T) = 1 - T^2
    CHECK(p.coeff({0}) == RatFun(mpq_class(1)));
    CHECK(p.coeff({1}).is_zero());
    CHECK(p.coeff({2}) == RatFun(mpq_class(-1)));
    CHECK(p * one == p);
}

TEST_CASE("series log of 1/(1-T)") {
    // 1/(1-T) = 1 + T + T^2 + T^3 in the box (3); its log is sum T^k/k
    TruncatedSeries s({3});
    for (int k = 0; k <= 3; ++k) s.set_coeff({k}, RatFun(mpq_class(1)));
    TruncatedSeries l = series_log(s);
    CHECK(l.coeff({0}).is_zero());
    CHECK(l.coeff({1}) == RatFun(mpq_class(1)));
    CHECK(l.coeff({2}) == RatFun(mpq_class(1, 2)));
    CHECK(l.coeff({3}) == RatFun(mpq_class(1, 3)));
    CHECK(series_exp(l) == s);
}

TEST_CASE("series exp and log invert each other on random data") {
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 25; ++rep) {
        DimVector bound = (rep % 2 == 0) ? DimVector{3} : DimVector{2, 2};
        TruncatedSeries s(bound);
        bool first = true;
        for_each_below(bound, [&](const DimVector& e) {
            if (first) {
                first = false;
                return;  // keep constant term zero
            }
            s.set_coeff(e, rand_ratfun(rng, 2));
        });
        TruncatedSeries back = series_log(series_exp(s));
        CHECK(back == s);
    }
}

TEST_CASE("series precondition errors") {
    TruncatedSeries s({2});
    CHECK_THROWS_AS(series_log(s), input_error);  // constant term 0, not 1
    TruncatedSeries u = TruncatedSeries::one({2});
    CHECK_THROWS_AS(series_exp(u), input_error);  // constant term 1, not 0
    TruncatedSeries other({3});
    CHECK_THROWS_AS(s + other, input_error);
    CHECK_THROWS_AS(s.coeff({5}), input_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == from_ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == from_ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == from_ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == from_ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == from_ints({1, 0, -1, 0, 1}));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("roots of unity basics") {
    CHECK(cyclo_embed(2, 1) == Cyclo(mpq_class(-1)));
    CHECK(cyclo_embed(4, 2) == Cyclo(mpq_class(-1)));
    CHECK(cyclo_embed(3, 3) == Cyclo(mpq_class(1)));
    CHECK(cyclo_embed(5, -1) == cyclo_embed(5, 4));
    CHECK(cyclo_embed(6, 1) * cyclo_embed(6, 5) == Cyclo(mpq_class(1)));

    // conjugation inverts the root
    for (int m = 2; m <= 12; ++m)
        CHECK(cyclo_embed(m, 1).conj() == cyclo_embed(m, m - 1));

    CHECK_THROWS_AS(cyclo_embed(101, 1), input_error);
    CHECK_THROWS_AS(cyclo_embed(0, 1), input_error);
}

TEST_CASE("roots of unity orthogonality") {
    // sum over j of zeta_m^(jk) is m when m | k, else 0
    for (int m = 1; m <= 12; ++m) {
        for (int k = 0; k <= 2 * m; ++k) {
            Cyclo sum;
            for (int j = 0; j < m; ++j) sum = sum + cyclo_embed(m, static_cast<long>(j) * k);
            if (k % m == 0)
                CHECK(sum == Cyclo(mpq_class(m)));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("cyclotomic mixed-modulus arithmetic") {
    // zeta_4 * zeta_3 = zeta_12^7
    CHECK(cyclo_embed(4, 1) * cyclo_embed(3, 1) == cyclo_embed(12, 7));
    // zeta_3 + zeta_3^2 = -1
    Cyclo s = cyclo_embed(3, 1) + cyclo_embed(3, 2);
    CHECK(s.is_rational());
    CHECK(s.to_rational() == -1);
    CHECK_THROWS_AS(cyclo_embed(5, 1).to_rational(), math_error);

    // norm of a + b*zeta_3 through conjugation is rational
    Cyclo z = Cyclo(mpq_class(2)) + cyclo_embed(3, 1).scaled(mpq_class(5));
    Cyclo norm = z * z.conj();
    CHECK(norm.is_rational());
    CHECK(norm.to_rational() == mpq_class(19));  // 4 - 10 + 25
}
