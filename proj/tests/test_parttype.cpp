#include "doctest.h"

#include "quiverdt/error.hpp"
#include "quiverdt/partition.hpp"
#include "quiverdt/types.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace quiverdt;

namespace {

Partition pt(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

MultiPartition mp(std::initializer_list<Partition> comps) {
    return MultiPartition(std::vector<Partition>(comps));
}

// independent partition counter: p(n, k) = partitions of n with parts <= k
long count_partitions_dp(int n) {
    std::vector<std::vector<long>> p(static_cast<size_t>(n) + 1,
                                     std::vector<long>(static_cast<size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            long v = p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)];
            if (m >= k) v += p[static_cast<size_t>(m - k)][static_cast<size_t>(k)];
            p[static_cast<size_t>(m)][static_cast<size_t>(k)] = v;
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

// pentagonal number recurrence for p(n)
long count_partitions_pentagonal(int n) {
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) s += sign * p[static_cast<size_t>(m - g1)];
            if (g2 <= m) s += sign * p[static_cast<size_t>(m - g2)];
        }
        p[static_cast<size_t>(m)] = s;
    }
    return p[static_cast<size_t>(n)];
}

// order-insensitive fingerprint of a type, for set comparison
std::vector<std::vector<int>> type_fingerprint(const TypeOmega& om) {
    std::vector<std::vector<int>> fp;
    for (const auto& [key, mult] : om.support()) {
        std::vector<int> row{key.first, mult};
        for (const auto& comp : key.second.components()) {
            row.push_back(-1);  // component separator
            for (int part : comp.parts()) row.push_back(part);
        }
        fp.push_back(row);
    }
    std::sort(fp.begin(), fp.end());
    return fp;
}

// direct generator of all finitely supported maps of size v, no sharing with
// the library's enumerator beyond the Partition type itself
std::vector<std::vector<std::vector<int>>> brute_types(const DimVector& v) {
    int total = dim_sum(v);
    struct Key {
        int d;
        MultiPartition mu;
        DimVector step;
    };
    std::vector<Key> keys;
    for (int d = 1; d <= total; ++d) {
        for_each_below(v, [&](const DimVector& w) {
            if (dim_is_zero(w)) return;
            for (const auto& mu : enumerate_multipartitions(w)) {
                DimVector step = w;
                bool fits = true;
                for (size_t i = 0; i < v.size(); ++i) {
                    step[i] *= d;
                    if (step[i] > v[i]) fits = false;
                }
                if (fits) keys.push_back({d, mu, step});
            }
        });
    }
    DimVector bound;
    for (const auto& k : keys) {
        int cap = 0;
        while (true) {
            bool ok = true;
            for (size_t i = 0; i < v.size(); ++i)
                if ((cap + 1) * k.step[i] > v[i]) { ok = false; break; }
            if (!ok) break;
            ++cap;
        }
        bound.push_back(cap);
    }
    std::vector<std::vector<std::vector<int>>> out;
    for_each_below(bound, [&](const DimVector& mults) {
        DimVector sz(v.size(), 0);
        for (size_t k = 0; k < keys.size(); ++k)
            for (size_t i = 0; i < v.size(); ++i) sz[i] += mults[k] * keys[k].step[i];
        if (sz != v) return;
        TypeOmega om(v.size());
        for (size_t k = 0; k < keys.size(); ++k)
            if (mults[k] > 0) om.add(keys[k].d, keys[k].mu, mults[k]);
        out.push_back(type_fingerprint(om));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("partition construction and invariants") {
    CHECK_THROWS_AS(pt({1, 2}), input_error);
    CHECK_THROWS_AS(pt({0}), input_error);
    Partition l = pt({4, 2, 2, 1});
    CHECK(l.size() == 9);
    CHECK(l.length() == 4);
    CHECK(l.multiplicity(2) == 2);
    CHECK(l.part(1) == 4);
    CHECK(l.part(9) == 0);
    CHECK(l.dual() == pt({4, 3, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) CHECK(p.dual().dual() == p);
}

TEST_CASE("partition enumeration order and counts") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].is_zero());

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == pt({3}));
    CHECK(p3[1] == pt({2, 1}));
    CHECK(p3[2] == pt({1, 1, 1}));

    CHECK(enumerate_partitions(6).size() == 11);

    for (int n = 0; n <= 20; ++n) {
        long expected = count_partitions_dp(n);
        CHECK(expected == count_partitions_pentagonal(n));
        if (n <= 14) {
            auto all = enumerate_partitions(n);
            CHECK(static_cast<long>(all.size()) == expected);
            for (size_t i = 0; i + 1 < all.size(); ++i)
                CHECK(partition_precedes(all[i], all[i + 1]));
            for (const auto& p : all) CHECK(p.size() == n);
        }
    }
}

TEST_CASE("pairing values and dual identity") {
    CHECK(pairing(pt({1}), pt({1})) == 1);
    CHECK(pairing(pt({1, 1}), pt({1, 1})) == 4);
    CHECK(pairing(pt({2}), pt({1, 1})) == 2);
    for (int n = 0; n <= 8; ++n) {
        for (const auto& l : enumerate_partitions(n)) {
            Partition dl = l.dual();
            long sq = 0;
            for (int dj : dl.parts()) sq += static_cast<long>(dj) * dj;
            CHECK(pairing(l, l) == sq);
            for (const auto& m : enumerate_partitions(n > 4 ? 3 : n))
                CHECK(pairing(l, m) == pairing(m, l));
        }
    }
}

TEST_CASE("multipartition helpers") {
    MultiPartition mu = mp({pt({2, 1}), pt({1, 1})});
    CHECK(mu.size() == DimVector{3, 2});
    CHECK_FALSE(mu.is_zero());
    CHECK(MultiPartition::all_ones({3, 0}) == mp({pt({1, 1, 1}), Partition()}));
    CHECK(MultiPartition::one_row({3, 0}) == mp({pt({3}), Partition()}));
    CHECK(MultiPartition(std::vector<Partition>{Partition()}).is_zero());

    auto all = enumerate_multipartitions({2, 1});
    REQUIRE(all.size() == 2);  // 2 partitions of 2, 1 partition of 1
    CHECK(all[0] == mp({pt({2}), pt({1})}));
    CHECK(all[1] == mp({pt({1, 1}), pt({1})}));
}

TEST_CASE("type enumeration pinned cases") {
    auto t1 = enumerate_types({1});
    REQUIRE(t1.size() == 1);
    TypeOmega expect1(1);
    expect1.add(1, mp({pt({1})}), 1);
    CHECK(t1[0] == expect1);

    auto t2 = enumerate_types({2});
    REQUIRE(t2.size() == 4);
    TypeOmega a(1), b(1), c(1), d(1);
    a.add(1, mp({pt({2})}), 1);
    b.add(1, mp({pt({1, 1})}), 1);
    c.add(1, mp({pt({1})}), 2);
    d.add(2, mp({pt({1})}), 1);
    CHECK(t2[0] == a);
    CHECK(t2[1] == b);
    CHECK(t2[2] == c);
    CHECK(t2[3] == d);

    auto t10 = enumerate_types({1, 0});
    REQUIRE(t10.size() == 1);
    TypeOmega expect10(2);
    expect10.add(1, mp({pt({1}), Partition()}), 1);
    CHECK(t10[0] == expect10);
}

TEST_CASE("type enumeration against a direct generator") {
    std::vector<DimVector> cases = {{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 1, 2}};
    for (const auto& v : cases) {
        auto lib = enumerate_types(v);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& om : lib) {
            CHECK(om.size() == v);
            CHECK(seen.insert(type_fingerprint(om)).second);  // no duplicates
        }
        auto brute = brute_types(v);
        REQUIRE(lib.size() == brute.size());
        std::vector<std::vector<std::vector<int>>> libfp(seen.begin(), seen.end());
        CHECK(libfp == brute);
    }
}

TEST_CASE("type constants") {
    MultiPartition mu0 = mp({pt({1})});
    MultiPartition mu1 = mp({pt({2})});

    TypeOmega single(1);
    single.add(1, mu1, 1);
    CHECK(c_omega(single) == mpq_class(1));
    CHECK(weyl_order(single) == 1);

    TypeOmega deg2(1);
    deg2.add(2, mu0, 1);
    CHECK(c_omega(deg2) == mpq_class(-1, 2));
    CHECK(weyl_order(deg2) == 2);

    TypeOmega mixed(1);
    mixed.add(1, mu1, 1);
    mixed.add(2, mu0, 1);
    CHECK(c_omega(mixed) == mpq_class(0));

    TypeOmega twice(1);
    twice.add(1, mu0, 2);
    CHECK(c_omega(twice) == mpq_class(-1, 2));  // (-1)^1 * 1! / 2!
    CHECK(weyl_order(twice) == 2);

    TypeOmega pair(1);
    pair.add(1, mu0, 1);
    pair.add(1, mu1, 1);
    CHECK(c_omega(pair) == mpq_class(-1));

    TypeOmega triple(1);
    triple.add(1, mu0, 3);
    CHECK(weyl_order(triple) == 6);
    CHECK(c_omega(triple) == mpq_class(1, 3));  // 2!/3!

    TypeOmega zero(1);
    CHECK_THROWS_AS(c_omega(zero), input_error);
    CHECK_THROWS_AS(zero.add(1, mp({Partition()}), 1), input_error);
    CHECK_THROWS_AS(zero.add(0, mu0, 1), input_error);
}

TEST_CASE("irreducible polynomial counts") {
    CHECK(phi_d(1, 3) == 2);
    CHECK(phi_d(2, 2) == 1);
    CHECK(phi_d(3, 2) == 2);
    CHECK(phi_d(4, 2) == 3);  // x^4+x+1, x^4+x^3+1, x^4+x^3+x^2+x+1
    // sum over d | n of d * phi_d(q) counts nonzero field elements of F_q^n
    // grouped by the degree of their minimal polynomial
    for (int q : {2, 3, 5}) {
        for (int n = 1; n <= 6; ++n) {
            mpq_class total(0);
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) total += d * phi_d(d, q);
            mpq_class qn(1);
            for (int i = 0; i < n; ++i) qn *= q;
            CHECK(total == qn - 1);
        }
    }
}

TEST_CASE("centralizer order polynomials") {
    RatFun z1 = centralizer_poly(mp({pt({1})}));
    CHECK(z1.is_polynomial());
    CHECK(z1.eval(3) == 2);
    CHECK(z1 == RatFun::t() - RatFun::constant(1));

    RatFun z11 = centralizer_poly(mp({pt({1, 1})}));
    RatFun expect11 = (RatFun::t_pow(2) - RatFun::constant(1)) * (RatFun::t_pow(2) - RatFun::t());
    CHECK(z11 == expect11);
    CHECK(z11.eval(2) == 6);   // order of GL_2(F_2)
    CHECK(z11.eval(3) == 48);  // order of GL_2(F_3)

    RatFun z2 = centralizer_poly(mp({pt({2})}));
    CHECK(z2 == RatFun::t_pow(2) - RatFun::t());
    CHECK(z2.eval(2) == 2);

    // full-group orders at the all-ones multipartition
    CHECK(centralizer_poly(MultiPartition::all_ones({3})).eval(2) == 168);

    // two vertices multiply
    CHECK(centralizer_poly(mp({pt({1}), pt({1})})) ==
          (RatFun::t() - RatFun::constant(1)).pow(2));

    // degree law
    for (const auto& v : std::vector<DimVector>{{1}, {2}, {3}, {4}, {2, 2}, {3, 1}}) {
        for (const auto& mu : enumerate_multipartitions(v)) {
            RatFun z = centralizer_poly(mu);
            CHECK(z.is_polynomial());
            long expected = 0;
            for (const auto& comp : mu.components()) expected += pairing(comp, comp);
            CHECK(z.num().degree() == expected);
        }
    }
}

TEST_CASE("type centralizer orders") {
    MultiPartition mu0 = mp({pt({1})});
    TypeOmega deg2(1);
    deg2.add(2, mu0, 1);
    CHECK(centralizer_poly_type(deg2) == RatFun::t_pow(2) - RatFun::constant(1));

    TypeOmega twice(1);
    twice.add(1, mu0, 2);
    CHECK(centralizer_poly_type(twice) == (RatFun::t() - RatFun::constant(1)).pow(2));

    TypeOmega zero(1);
    CHECK(centralizer_poly_type(zero) == RatFun(mpq_class(1)));
}
