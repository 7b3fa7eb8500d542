#include "quiverdt/glclasses.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace quiverdt {

mpz_class gl_order(const Fq& f, int n) {
    if (n < 0) throw input_error("negative matrix size");
    mpz_class qn = 1, order = 1;
    for (int i = 0; i < n; ++i) qn *= f.q();
    mpz_class qj = 1;
    for (int j = 0; j < n; ++j) {
        order *= qn - qj;
        qj *= f.q();
    }
    return order;
}

mpz_class group_order(const Fq& f, const DimVector& v) {
    mpz_class order = 1;
    for (int n : v) order *= gl_order(f, n);
    return order;
}

namespace {

FqMat matrix_from_index(const Fq& f, int n, long idx) {
    FqMat m = mat_zero(n, n);
    for (size_t e = 0; e < m.a.size(); ++e) {
        m.a[e] = static_cast<int>(idx % f.q());
        idx /= f.q();
    }
    return m;
}

long index_of_matrix(const Fq& f, const FqMat& m) {
    long idx = 0;
    for (size_t e = m.a.size(); e-- > 0;) idx = idx * f.q() + m.a[e];
    return idx;
}

long matrix_space_size(const Fq& f, int n) {
    long s = 1;
    for (int e = 0; e < n * n; ++e) s *= f.q();
    return s;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const Fq& f, const DimVector& v, long budget) {
    mpz_class order = group_order(f, v);
    if (order > budget)
        throw input_error("group order " + order.get_str() + " exceeds the budget " +
                          std::to_string(budget));
    std::vector<std::vector<FqMat>> per_vertex;
    for (int n : v) {
        std::vector<FqMat> invertibles;
        long space = matrix_space_size(f, n);
        for (long idx = 0; idx < space; ++idx) {
            FqMat m = matrix_from_index(f, n, idx);
            if (mat_invertible(f, m)) invertibles.push_back(std::move(m));
        }
        per_vertex.push_back(std::move(invertibles));
    }
    std::vector<GroupElement> out;
    out.reserve(order.get_ui());
    std::vector<size_t> pick(v.size(), 0);
    while (true) {
        GroupElement g;
        for (size_t i = 0; i < v.size(); ++i) g.push_back(per_vertex[i][pick[i]]);
        out.push_back(std::move(g));
        size_t i = v.size();
        while (i-- > 0) {
            if (++pick[i] < per_vertex[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (v.empty()) return out;
    }
}

std::vector<std::vector<FqMat>> enumerate_gl(const Fq& f, const DimVector& v, long budget) {
    mpz_class total = 1;
    for (int n : v) total *= matrix_space_size(f, n);
    if (total > budget)
        throw input_error("matrix space size " + total.get_str() + " exceeds the budget " +
                          std::to_string(budget));
    long count = total.get_si();
    std::vector<std::vector<FqMat>> out;
    out.reserve(static_cast<size_t>(count));
    for (long t = 0; t < count; ++t) {
        long rest = t;
        std::vector<FqMat> x(v.size());
        for (size_t i = v.size(); i-- > 0;) {
            long space = matrix_space_size(f, v[i]);
            x[i] = matrix_from_index(f, v[i], rest % space);
            rest /= space;
        }
        out.push_back(std::move(x));
    }
    return out;
}

size_t gl_point_index(const Fq& f, const DimVector& v, const std::vector<FqMat>& x) {
    if (x.size() != v.size()) throw input_error("tuple arity mismatch");
    size_t idx = 0;
    for (size_t i = 0; i < v.size(); ++i)
        idx = idx * static_cast<size_t>(matrix_space_size(f, v[i])) +
              static_cast<size_t>(index_of_matrix(f, x[i]));
    return idx;
}

namespace {

// ascending (degree, encoding) order of irreducible polynomials
bool poly_key_less(const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Partition partition_from_dual_counts(const std::vector<int>& counts) {
    std::vector<int> parts;
    for (size_t j = counts.size(); j-- > 0;) {
        int next = j + 1 < counts.size() ? counts[j + 1] : 0;
        if (counts[j] < next) throw math_error("nullity increments are not decreasing");
        for (int c = 0; c < counts[j] - next; ++c)
            parts.push_back(static_cast<int>(j) + 1);
    }
    return Partition(parts);
}

struct ClassSearch {
    const Fq& f;
    const DimVector& v;
    long budget;
    std::vector<std::pair<int, FqPoly>> positions;  // (degree, polynomial)
    std::map<DimVector, std::vector<MultiPartition>> mu_cache;
    Spectrum current;
    std::vector<ClassDescriptor> out;

    const std::vector<MultiPartition>& candidates(const DimVector& w_max) {
        auto it = mu_cache.find(w_max);
        if (it != mu_cache.end()) return it->second;
        std::vector<MultiPartition> list;
        for_each_below(w_max, [&](const DimVector& w) {
            if (dim_is_zero(w)) return;
            for (const auto& mu : enumerate_multipartitions(w)) list.push_back(mu);
        });
        return mu_cache.emplace(w_max, std::move(list)).first->second;
    }

    void emit() {
        if (static_cast<long>(out.size()) >= budget)
            throw input_error("class count exceeds the budget " + std::to_string(budget));
        ClassDescriptor d;
        d.spectrum = current;
        d.type = spectrum_type(current, v.size());
        mpq_class cent = centralizer_poly_type(d.type).eval(mpq_class(f.q()));
        if (cent.get_den() != 1)
            throw math_error("centralizer order is not an integer");
        d.centralizer_order = cent.get_num();
        mpz_class order = group_order(f, v);
        if (order % d.centralizer_order != 0)
            throw math_error("centralizer order does not divide the group order");
        d.size = order / d.centralizer_order;
        for (size_t i = 0; i < v.size(); ++i) {
            int det = 1;
            std::vector<FqMat> blocks;
            for (const auto& [gamma, mu] : current) {
                const Partition& part = mu.component(i);
                if (part.length() == 0) continue;
                int base = f.mul(f.pow(f.neg(1), fqpoly_degree(gamma)), gamma[0]);
                det = f.mul(det, f.pow(base, part.size()));
                for (int m : part.parts())
                    blocks.push_back(companion(f, fqpoly_pow(f, gamma, m)));
            }
            d.det.push_back(det);
            d.rep.push_back(block_diag(blocks));
        }
        out.push_back(std::move(d));
    }

    void search(size_t pos, DimVector remaining) {
        if (dim_is_zero(remaining)) {
            emit();
            return;
        }
        if (pos == positions.size()) return;
        int d = positions[pos].first;
        int cap = 0;
        for (int r : remaining) cap = std::max(cap, r);
        if (d > cap) return;
        search(pos + 1, remaining);
        DimVector w_max(remaining.size());
        for (size_t i = 0; i < remaining.size(); ++i) w_max[i] = remaining[i] / d;
        for (const auto& mu : candidates(w_max)) {
            DimVector next = remaining;
            DimVector w = mu.size();
            for (size_t i = 0; i < next.size(); ++i) next[i] -= d * w[i];
            current.emplace_back(positions[pos].second, mu);
            search(pos + 1, std::move(next));
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<ClassDescriptor> enumerate_classes(const Fq& f, const DimVector& v,
                                               long budget) {
    int maxd = 0;
    for (int n : v) {
        if (n < 0) throw input_error("negative dimension entry");
        maxd = std::max(maxd, n);
    }
    ClassSearch cs{f, v, budget, {}, {}, {}, {}};
    for (int d = 1; d <= maxd; ++d)
        for (const FqPoly& gamma : irreducible_monic(f, d))
            if (gamma[0] != 0) cs.positions.emplace_back(d, gamma);
    cs.search(0, v);

    mpz_class total = 0;
    for (const ClassDescriptor& c : cs.out) total += c.size;
    if (total != group_order(f, v))
        throw math_error("class sizes do not partition the group order");
    return std::move(cs.out);
}

Spectrum element_spectrum(const Fq& f, const GroupElement& g) {
    std::map<FqPoly, std::vector<Partition>,
             bool (*)(const FqPoly&, const FqPoly&)>
        found(poly_key_less);
    for (size_t i = 0; i < g.size(); ++i) {
        const FqMat& block = g[i];
        if (block.rows != block.cols) throw input_error("non-square block");
        int n = block.rows;
        int remaining = n;
        for (int d = 1; d <= n && remaining > 0; ++d) {
            for (const FqPoly& gamma : irreducible_monic(f, d)) {
                if (gamma[0] == 0) continue;
                FqMat base = fqpoly_eval_matrix(f, gamma, block);
                std::vector<int> counts;
                FqMat power = mat_identity(n);
                int prev = 0;
                while (true) {
                    power = mat_mul(f, power, base);
                    int nul = mat_nullity(f, power);
                    if (nul == prev) break;
                    if ((nul - prev) % d != 0)
                        throw math_error("nullity step is not divisible by the degree");
                    counts.push_back((nul - prev) / d);
                    prev = nul;
                }
                if (counts.empty()) continue;
                Partition part = partition_from_dual_counts(counts);
                auto it = found.emplace(gamma, std::vector<Partition>(g.size())).first;
                it->second[i] = part;
                remaining -= d * part.size();
                if (remaining == 0) break;
            }
        }
        if (remaining != 0) throw math_error("block sizes do not fill the dimension");
    }
    Spectrum s;
    for (auto& [gamma, comps] : found) s.emplace_back(gamma, MultiPartition(comps));
    return s;
}

TypeOmega spectrum_type(const Spectrum& s, size_t arity) {
    std::map<TypeKey, int, TypeKeyLess> counts;
    for (const auto& [gamma, mu] : s) ++counts[{fqpoly_degree(gamma), mu}];
    TypeOmega omega(arity);
    for (const auto& [key, mult] : counts) omega.add(key.first, key.second, mult);
    return omega;
}

bool is_semisimple_matrix(const Fq& f, const FqMat& m) {
    FqPoly mp = minimal_polynomial(f, m);
    FqPoly g = fqpoly_gcd(f, mp, fqpoly_derivative(f, mp));
    return fqpoly_degree(g) == 0;
}

}  // namespace quiverdt
