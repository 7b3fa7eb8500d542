// Acceptance checks. Each criterion prints exactly one PASS or FAIL line and
// the exit code is the number of failures. All comparisons are exact.

#include "quiverdt/dimvec.hpp"
#include "quiverdt/error.hpp"
#include "quiverdt/fq.hpp"
#include "quiverdt/glclasses.hpp"
#include "quiverdt/invariants.hpp"
#include "quiverdt/numtheory.hpp"
#include "quiverdt/oracle.hpp"
#include "quiverdt/partition.hpp"
#include "quiverdt/plethystic.hpp"
#include "quiverdt/poly.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/ratfun.hpp"
#include "quiverdt/series.hpp"
#include "quiverdt/types.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace quiverdt;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

int failures = 0;

void run_criterion(int id, const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
        ++failures;
    }
    auto stop = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(stop - start).count();
    std::printf("%s %2d  %s  (%.2fs)%s%s\n", verdict.c_str(), id, name.c_str(), secs,
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

Quiver point() { return Quiver(1, {}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }
Quiver two_loop() { return Quiver(1, {{0, 0}, {0, 0}}); }
Quiver a2() { return Quiver(2, {{0, 1}}); }

struct Named {
    const char* name;
    Quiver g;
};

std::vector<Named> corpus() {
    return {{"point", point()}, {"jordan", jordan()}, {"two-loop", two_loop()}, {"a2", a2()}};
}

// Same shape of random data as the unit tests use.
RatFun small_ratfun(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-3, 3), deg(0, 2), denpick(0, 2);
    auto poly = [&](int maxdeg, bool nonzero) {
        std::vector<mpq_class> c(static_cast<size_t>(maxdeg) + 1);
        bool any = false;
        for (auto& x : c) {
            x = pick(rng);
            if (x != 0) any = true;
        }
        if (nonzero && !any) c[0] = 1;
        return Poly(std::move(c));
    };
    return RatFun(poly(deg(rng), false), poly(denpick(rng), true));
}

TruncatedSeries random_series(std::mt19937& rng, const DimVector& bound, bool unit_constant) {
    TruncatedSeries s(bound);
    bool first = true;
    for_each_below(bound, [&](const DimVector& e) {
        if (first) {
            first = false;
            if (unit_constant) s.set_coeff(e, RatFun(mpq_class(1)));
            return;
        }
        s.set_coeff(e, small_ratfun(rng));
    });
    return s;
}

DimVector random_dims(std::mt19937& rng, int rank, int total_cap) {
    std::uniform_int_distribution<int> entry(0, total_cap);
    for (;;) {
        DimVector v(static_cast<size_t>(rank));
        for (int& x : v) x = entry(rng);
        if (!dim_is_zero(v) && dim_sum(v) <= total_cap) return v;
    }
}

long smallest_admissible_prime(int n) {
    for (long q = 2;; ++q)
        if (is_prime(static_cast<int>(q)) && (q - 1) % n == 0) return q;
}

GroupScope scope_for(const Fq& f, const DimVector& v) {
    return group_order(f, v) <= 200000 ? GroupScope::element_mode(f, v)
                                       : GroupScope::class_mode(f, v);
}

// Oracle value at the smallest admissible prime, compared against the table
// entry evaluated there.
void check_against_oracle(const Quiver& g, const DimVector& w, const Poly& p,
                          OracleTarget target, const std::string& label) {
    long q = smallest_admissible_prime(dim_sum(w));
    Fq f(q, 81);
    GroupScope scope = scope_for(f, w);
    mpq_class oracle = multiplicity_oracle(g, scope, target);
    require(oracle == p.eval(mpq_class(q)),
            label + " at " + dim_text(w) + ", q = " + std::to_string(q) +
                ": oracle " + oracle.get_str() + " vs table " +
                p.eval(mpq_class(q)).get_str());
}

Poly poly_t() { return Poly(std::vector<mpq_class>{0, 1}); }
Poly poly_one() { return Poly(std::vector<mpq_class>{1}); }
Poly poly_zero() { return Poly(std::vector<mpq_class>{}); }

// Orbit count of GL_v acting on the representation space over F_q, obtained
// by averaging fixed point counts over the full group.
mpq_class orbit_count(const Quiver& g, const Fq& f, const DimVector& v) {
    mpz_class total = 0;
    for (const GroupElement& x : enumerate_group(f, v))
        total += fixed_count(g, f, x);
    return mpq_class(total) / group_order(f, v);
}

void criterion_plethystic_inverses() {
    std::mt19937 rng(20260819);
    std::uniform_int_distribution<int> rank_pick(1, 2), bound_pick(1, 4);
    for (int i = 0; i < 200; ++i) {
        int rank = rank_pick(rng);
        DimVector bound(static_cast<size_t>(rank));
        for (int& b : bound) b = bound_pick(rng);
        if (i % 2 == 0) {
            TruncatedSeries u = random_series(rng, bound, true);
            require(pexp(plog(u)) == u, "pexp(plog(u)) != u at iteration " + std::to_string(i));
        } else {
            TruncatedSeries s = random_series(rng, bound, false);
            require(plog(pexp(s)) == s, "plog(pexp(s)) != s at iteration " + std::to_string(i));
        }
    }
}

void criterion_log_via_types() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> rank_pick(1, 2);
    for (int i = 0; i < 50; ++i) {
        int rank = rank_pick(rng);
        DimVector v = random_dims(rng, rank, 5);
        FamilyTable h(static_cast<size_t>(rank),
                      [&rng](const MultiPartition&) { return small_ratfun(rng); });
        require(log_via_types(h, v) == plog(family_series(h, v)),
                "type expansion disagrees with plog at iteration " + std::to_string(i) +
                    ", v = " + dim_text(v));
    }
}

void criterion_kac_values() {
    std::map<DimVector, Poly> jt = kac_polynomials(jordan(), {3});
    require(jt.at({1}) == poly_t(), "loop quiver A(1)");
    require(jt.at({2}) == poly_t(), "loop quiver A(2)");
    require(jt.at({3}) == poly_t(), "loop quiver A(3)");
    check_against_oracle(jordan(), {1}, jt.at({1}), OracleTarget::kac, "loop");
    check_against_oracle(jordan(), {2}, jt.at({2}), OracleTarget::kac, "loop");
    check_against_oracle(jordan(), {3}, jt.at({3}), OracleTarget::kac, "loop");

    std::map<DimVector, Poly> pt = kac_polynomials(point(), {2});
    require(pt.at({1}) == poly_one(), "point quiver A(1)");
    require(pt.at({2}) == poly_zero(), "point quiver A(2)");
    check_against_oracle(point(), {1}, pt.at({1}), OracleTarget::kac, "point");
    check_against_oracle(point(), {2}, pt.at({2}), OracleTarget::kac, "point");

    std::map<DimVector, Poly> at = kac_polynomials(a2(), {1, 1});
    require(at.at({1, 1}) == poly_one(), "a2 quiver A(1,1)");
    check_against_oracle(a2(), {1, 1}, at.at({1, 1}), OracleTarget::kac, "a2");
}

void criterion_dt_routes() {
    for (const Named& n : corpus()) {
        if (n.g.arrow_count() > 1) continue;  // point, jordan, a2 only
        DimVector box = n.g.vertices() == 1 ? DimVector{4} : DimVector{2, 2};
        std::map<DimVector, Poly> direct = dt_invariants(n.g, box);
        std::map<DimVector, Poly> twisted = dt_via_steinberg(n.g, box);
        require(direct == twisted,
                std::string(n.name) + ": the two DT routes disagree as polynomials");
        for (const auto& [w, p] : direct)
            check_against_oracle(n.g, w, p, OracleTarget::dt, std::string(n.name) + " DT");
    }
}

void criterion_dt_seeds() {
    require(dt_invariants(point(), {1}).at({1}) == poly_one(), "point DT(1)");
    require(dt_invariants(jordan(), {1}).at({1}) == poly_t(), "loop DT(1)");
}

void criterion_om_sums() {
    auto all_pass = [](const GroupScope& scope, const std::string& label) {
        std::vector<OmLine> lines = verify_om(scope);
        require(!lines.empty(), label + ": no types enumerated");
        for (const OmLine& l : lines)
            require(l.pass, label + ": determinant class sum fails for a type");
    };
    Fq f3(3), f7(7, 81);
    all_pass(GroupScope::element_mode(f3, {2}), "(2) at q = 3");
    all_pass(GroupScope::element_mode(f3, {1, 1}), "(1,1) at q = 3");
    all_pass(GroupScope::class_mode(f7, {3}), "(3) at q = 7");
    all_pass(GroupScope::class_mode(f7, {1, 2}), "(1,2) at q = 7");
}

void criterion_additive_side() {
    struct Case {
        Quiver g;
        DimVector v;
        long q;
        OracleTarget target;
        const char* label;
    };
    std::vector<Case> cases = {
        {a2(), {1, 1}, 3, OracleTarget::kac, "a2 (1,1) q=3 kac"},
        {jordan(), {1}, 2, OracleTarget::dt, "loop (1) q=2 dt"},
        {point(), {2}, 3, OracleTarget::dt, "point (2) q=3 dt"},
    };
    for (const Case& c : cases) {
        Fq f(c.q);
        AdditiveSideResult a = additive_side(c.g, f, c.v, c.target);
        GroupScope scope = scope_for(f, c.v);
        mpq_class m = multiplicity_oracle(c.g, scope, c.target);
        require(a.value == m, std::string(c.label) + ": additive " + a.value.get_str() +
                                  " vs character " + m.get_str());
    }
}

void criterion_dimension_expressions() {
    for (const Named& n : corpus()) {
        std::vector<DimVector> vecs;
        if (n.g.vertices() == 1) {
            for (int a = 1; a <= 5; ++a) vecs.push_back({a});
        } else {
            for (int a = 0; a <= 5; ++a)
                for (int b = 0; a + b <= 5; ++b)
                    if (a + b > 0) vecs.push_back({a, b});
        }
        for (const DimVector& v : vecs)
            for (const MultiPartition& mu : enumerate_multipartitions(v)) {
                VarietyDim d = variety_dim(n.g, v, mu);
                require(d.dimension % 2 == 0,
                        std::string(n.name) + " " + dim_text(v) + ": odd dimension");
            }
    }
}

// Boxes whose entries cover every w with total at most 5.
std::map<DimVector, Poly> table_cap5(const Quiver& g,
                                     std::map<DimVector, Poly> (*route)(const Quiver&,
                                                                        const DimVector&)) {
    DimVector box = g.vertices() == 1 ? DimVector{5} : DimVector{5, 5};
    std::map<DimVector, Poly> full = route(g, box);
    std::map<DimVector, Poly> capped;
    for (const auto& [w, p] : full)
        if (dim_sum(w) <= 5) capped[w] = p;
    return capped;
}

// The Kac tables are shared with the degree criterion below.
const std::map<DimVector, Poly>& kac_cap5(const Named& n) {
    static std::map<std::string, std::map<DimVector, Poly>> memo;
    auto it = memo.find(n.name);
    if (it == memo.end())
        it = memo.emplace(n.name, table_cap5(n.g, kac_polynomials)).first;
    return it->second;
}

void criterion_positivity() {
    for (const Named& n : corpus()) {
        for (const auto& [w, p] : kac_cap5(n))
            require(p.nonneg_integer_coeffs(), std::string(n.name) + ": A " + dim_text(w) +
                                                   " has a bad coefficient");
        for (const auto& [w, p] : table_cap5(n.g, dt_invariants))
            require(p.nonneg_integer_coeffs(), std::string(n.name) + ": DT " + dim_text(w) +
                                                   " has a bad coefficient");
    }
}

void criterion_kac_degree() {
    for (const Named& n : corpus()) {
        for (const auto& [w, p] : kac_cap5(n)) {
            if (dim_gcd(w) != 1 || p.degree() < 0) continue;
            VarietyDim d = variety_dim(n.g, w, MultiPartition::all_ones(w));
            require(2 * static_cast<long>(p.degree()) == d.dimension,
                    std::string(n.name) + " " + dim_text(w) + ": deg A = " +
                        std::to_string(p.degree()) + " but the fiber dimension is " +
                        std::to_string(d.dimension));
        }
    }
}

void criterion_orbit_counts() {
    struct Case {
        Quiver g;
        DimVector v;
        long q;
        mpq_class expected;
        const char* label;
    };
    std::vector<Case> cases = {
        {jordan(), {2}, 2, mpq_class(6), "loop (2) q=2"},
        {a2(), {1, 1}, 3, mpq_class(2), "a2 (1,1) q=3"},
    };
    for (const Case& c : cases) {
        mpq_class series_value = total_count_series(c.g, c.v, c.q).at(c.v);
        Fq f(c.q);
        mpq_class orbits = orbit_count(c.g, f, c.v);
        require(series_value == c.expected, std::string(c.label) + ": series value " +
                                                series_value.get_str() + " expected " +
                                                c.expected.get_str());
        require(orbits == c.expected, std::string(c.label) + ": orbit count " +
                                          orbits.get_str() + " expected " +
                                          c.expected.get_str());
    }
}

}  // namespace

int main() {
    run_criterion(1, "plog and pexp invert each other on random series",
                  criterion_plethystic_inverses);
    run_criterion(2, "the type expansion computes the plethystic logarithm",
                  criterion_log_via_types);
    run_criterion(3, "known Kac polynomials match the counting oracle",
                  criterion_kac_values);
    run_criterion(4, "the two DT routes agree and match the counting oracle",
                  criterion_dt_routes);
    run_criterion(5, "DT seeds at dimension one", criterion_dt_seeds);
    run_criterion(6, "determinant class sums match the type constants",
                  criterion_om_sums);
    run_criterion(7, "the additive convolution matches the character route",
                  criterion_additive_side);
    run_criterion(8, "the two dimension expressions agree and are even",
                  criterion_dimension_expressions);
    run_criterion(9, "Kac and DT tables have nonnegative integer coefficients",
                  criterion_positivity);
    run_criterion(10, "the Kac degree is half the generic fiber dimension",
                  criterion_kac_degree);
    run_criterion(11, "counting series match direct orbit counts",
                  criterion_orbit_counts);
    if (failures == 0)
        std::printf("all 11 criteria passed\n");
    else
        std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
