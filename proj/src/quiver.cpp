#include "quiverdt/quiver.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace quiverdt {

Quiver::Quiver(int vertices, std::vector<std::pair<int, int>> arrows)
    : vertices_(vertices), arrows_(std::move(arrows)) {
    if (vertices_ < 1) throw input_error("quiver needs at least one vertex");
    for (const auto& [i, j] : arrows_)
        if (i < 0 || i >= vertices_ || j < 0 || j >= vertices_)
            throw input_error("quiver arrow endpoint out of range");
}

Quiver double_quiver(const Quiver& g) {
    std::vector<std::pair<int, int>> arrows = g.arrows();
    for (const auto& [i, j] : g.arrows()) arrows.emplace_back(j, i);
    return Quiver(g.vertices(), std::move(arrows));
}

long delta(const DimVector& v) { return dim_sum(v); }

long gamma_bar(const Quiver& g, const DimVector& v) {
    if (static_cast<int>(v.size()) != g.vertices())
        throw input_error("dimension vector length does not match the quiver");
    long s = 0;
    for (int x : v) s += static_cast<long>(x) * x;
    for (const auto& [i, j] : g.arrows())
        s -= 2L * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return s;
}

RatFun hua_term(const Quiver& g, const MultiPartition& mu) {
    if (mu.arity() != static_cast<size_t>(g.vertices()))
        throw input_error("multipartition arity does not match the quiver");
    long e = 0;
    for (const auto& [i, j] : g.arrows())
        e += pairing(mu.component(static_cast<size_t>(i)), mu.component(static_cast<size_t>(j)));
    return RatFun::t_pow(static_cast<int>(e));
}

ExtendedQuiver extended_quiver(const Quiver& g, const DimVector& v, const MultiPartition& mu) {
    if (mu.arity() != static_cast<size_t>(g.vertices()) ||
        static_cast<int>(v.size()) != g.vertices())
        throw input_error("extended quiver needs matching arities");
    if (mu.size() != v)
        throw input_error("multipartition size does not match the dimension vector");

    std::vector<std::vector<int>> legs(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& parts = mu.component(i).parts();
        int running = v[i];
        for (size_t j = 0; j + 1 < parts.size(); ++j) {
            running -= parts[j];
            if (running <= 0) throw math_error("leg dimension must stay positive");
            legs[i].push_back(running);
        }
    }

    int total = g.vertices();
    std::vector<int> leg_start(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        leg_start[i] = total;
        total += static_cast<int>(legs[i].size());
    }

    // undirected edge counts for the Cartan matrix
    std::vector<std::vector<long>> adj(static_cast<size_t>(total),
                                       std::vector<long>(static_cast<size_t>(total), 0));
    for (const auto& [i, j] : g.arrows()) {
        adj[static_cast<size_t>(i)][static_cast<size_t>(j)] += 1;
        adj[static_cast<size_t>(j)][static_cast<size_t>(i)] += 1;
    }
    for (size_t i = 0; i < v.size(); ++i) {
        int prev = static_cast<int>(i);
        for (size_t j = 0; j < legs[i].size(); ++j) {
            int cur = leg_start[i] + static_cast<int>(j);
            adj[static_cast<size_t>(prev)][static_cast<size_t>(cur)] += 1;
            adj[static_cast<size_t>(cur)][static_cast<size_t>(prev)] += 1;
            prev = cur;
        }
    }
    std::vector<std::vector<long>> cartan(static_cast<size_t>(total),
                                          std::vector<long>(static_cast<size_t>(total), 0));
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b)
            cartan[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                (a == b ? 2 : 0) - adj[static_cast<size_t>(a)][static_cast<size_t>(b)];

    DimVector dims = v;
    for (const auto& leg : legs)
        for (int d : leg) dims.push_back(d);

    return ExtendedQuiver{g, std::move(legs), std::move(cartan), std::move(dims)};
}

long tits_form(const ExtendedQuiver& e) {
    long s = 0;
    for (size_t a = 0; a < e.dims.size(); ++a)
        for (size_t b = 0; b < e.dims.size(); ++b)
            s += e.cartan[a][b] * e.dims[a] * e.dims[b];
    return s;
}

namespace {
MultiPartition dual_components(const MultiPartition& mu) {
    std::vector<Partition> comps;
    comps.reserve(mu.arity());
    for (const auto& p : mu.components()) comps.push_back(p.dual());
    return MultiPartition(std::move(comps));
}

long dimension_both_ways(const Quiver& g, const DimVector& v, const MultiPartition& mu) {
    ExtendedQuiver ext = extended_quiver(g, v, dual_components(mu));
    long left = 2 - tits_form(ext);

    long rep = 0;
    for (const auto& [i, j] : g.arrows())
        rep += 2L * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    long orbit = 0, squares = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        squares += static_cast<long>(v[i]) * v[i];
        orbit += static_cast<long>(v[i]) * v[i] - pairing(mu.component(i), mu.component(i));
    }
    long right = rep + orbit - 2 * (squares - 1);

    if (left != right)
        throw math_error("dimension formulas disagree; extension construction is wrong");
    if (left % 2 != 0) throw math_error("variety dimension must be even");
    return left;
}
}  // namespace

VarietyDim variety_dim(const Quiver& g, const DimVector& v, const MultiPartition& mu) {
    long dim = dimension_both_ways(g, v, mu);
    long regular = dimension_both_ways(g, v, MultiPartition::one_row(v));
    return VarietyDim{dim, regular - dim};
}

std::vector<mpq_class> generic_xi_rational(const DimVector& v) {
    if (dim_is_zero(v)) throw input_error("generic form needs a nonzero dimension vector");
    if (dim_gcd(v) != 1) throw input_error("generic form needs an indivisible dimension vector");
    size_t solve_at = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) solve_at = i;

    for (long base = 1; base <= 1000; ++base) {
        std::vector<mpq_class> xi(v.size(), mpq_class(0));
        mpq_class partial(0);
        mpq_class power(1);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0 || i == solve_at) continue;
            xi[i] = power;
            partial += xi[i] * v[i];
            power *= base;
        }
        xi[solve_at] = -partial / v[solve_at];

        bool ok = true;
        for_each_below(v, [&](const DimVector& w) {
            if (!ok || dim_is_zero(w) || w == v) return;
            mpq_class dot(0);
            for (size_t i = 0; i < v.size(); ++i) dot += xi[i] * w[i];
            if (dot == 0) ok = false;
        });
        if (ok) return xi;
    }
    throw math_error("no generic rational form found, search bound exceeded");
}

namespace {
std::vector<int> xi_search_mod(const DimVector& v, int q, bool require_kernel,
                               const char* what) {
    if (dim_is_zero(v)) throw input_error("generic form needs a nonzero dimension vector");
    if (!is_prime(q)) throw input_error("generic form search needs a prime field");
    DimVector bound(v.size(), q - 1);
    std::vector<int> found;
    DimVector last_fail_w;
    std::vector<int> last_fail_xi;
    for_each_below(bound, [&](const DimVector& xi) {
        if (!found.empty()) return;
        if (require_kernel) {
            long dot = 0;
            for (size_t i = 0; i < v.size(); ++i) dot += static_cast<long>(xi[i]) * v[i];
            if (dot % q != 0) return;
        }
        bool ok = true;
        for_each_below(v, [&](const DimVector& w) {
            if (!ok || dim_is_zero(w) || w == v) return;
            long dot = 0;
            for (size_t i = 0; i < v.size(); ++i) dot += static_cast<long>(xi[i]) * w[i];
            if (dot % q == 0) {
                ok = false;
                last_fail_w = w;
                last_fail_xi = std::vector<int>(xi.begin(), xi.end());
            }
        });
        if (ok) found = std::vector<int>(xi.begin(), xi.end());
    });
    if (found.empty()) {
        std::string msg = std::string("no ") + what + " over F_" + std::to_string(q) +
                          " for v = " + dim_text(v);
        if (!last_fail_w.empty())
            msg += "; candidate " + dim_text(last_fail_xi) + " fails at w = " +
                   dim_text(last_fail_w);
        throw input_error(msg);
    }
    return found;
}
}  // namespace

std::vector<int> generic_xi_mod(const DimVector& v, int q) {
    if (dim_gcd(v) != 1) throw input_error("generic form needs an indivisible dimension vector");
    return xi_search_mod(v, q, true, "generic linear form");
}

std::vector<int> generic_xi_box_only_mod(const DimVector& v, int q) {
    return xi_search_mod(v, q, false, "box-separating linear form");
}

}  // namespace quiverdt
