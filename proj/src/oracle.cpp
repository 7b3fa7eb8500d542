#include "quiverdt/oracle.hpp"

#include "quiverdt/dimvec.hpp"
#include "quiverdt/error.hpp"
#include "quiverdt/partition.hpp"

#include <map>
#include <string>
#include <utility>

namespace quiverdt {

Cyclo additive_char(const Fq& f, int x) {
    return Cyclo::root_power(f.p(), f.trace_to_prime(x));
}

AlphaCharacter::AlphaCharacter(const Fq& f, const DimVector& v) : f_(&f) {
    long n = dim_sum(v);
    if (n < 1) throw input_error("character order must be positive");
    if ((f.q() - 1) % n != 0)
        throw input_error("no multiplicative character of order " + std::to_string(n) +
                          " over a field with " + std::to_string(f.q()) +
                          " elements; the order must divide q - 1");
    n_ = static_cast<int>(n);
}

Cyclo AlphaCharacter::value(int x) const { return Cyclo::root_power(n_, f_->dlog(x)); }

Cyclo AlphaCharacter::on_dets(const std::vector<int>& dets) const {
    int prod = 1;
    for (int d : dets) prod = f_->mul(prod, d);
    return value(prod);
}

long commuting_exponent(const Quiver& g, const Fq& f, const std::vector<FqMat>& x) {
    if (static_cast<int>(x.size()) != g.vertices())
        throw input_error("tuple arity does not match the quiver");
    long total = 0;
    for (const auto& [i, j] : g.arrows()) {
        const FqMat& xt = x[static_cast<size_t>(i)];
        const FqMat& xh = x[static_cast<size_t>(j)];
        int vi = xt.rows, vj = xh.rows;
        int dim = vi * vj;
        if (dim == 0) continue;
        // matrix of Y -> xh Y - Y xt on vj x vi matrices, vec by rows
        FqMat op = mat_zero(dim, dim);
        for (int s = 0; s < vj; ++s)
            for (int t = 0; t < vi; ++t) {
                int col = s * vi + t;
                for (int r = 0; r < vj; ++r)
                    op.at(r * vi + t, col) = f.add(op.at(r * vi + t, col), xh.at(r, s));
                for (int c = 0; c < vi; ++c)
                    op.at(s * vi + c, col) = f.sub(op.at(s * vi + c, col), xt.at(t, c));
            }
        total += mat_nullity(f, op);
    }
    return total;
}

mpz_class fixed_count(const Quiver& g, const Fq& f, const std::vector<FqMat>& x) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(f.q()),
                  static_cast<unsigned long>(commuting_exponent(g, f, x)));
    return r;
}

mpq_class steinberg_value(const Fq& f, const DimVector& v, const ClassDescriptor& c) {
    for (const auto& [gamma, mu] : c.spectrum)
        for (const Partition& part : mu.components())
            for (int m : part.parts())
                if (m != 1) return 0;
    long rank_group = dim_sum(v);
    long rank_centralizer = 0;
    mpz_class p_part = 1;
    for (const auto& [gamma, mu] : c.spectrum) {
        long d = fqpoly_degree(gamma);
        for (const Partition& part : mu.components()) {
            long m = part.length();
            rank_centralizer += m;
            mpz_class factor;
            mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(f.q()),
                          static_cast<unsigned long>(d * m * (m - 1) / 2));
            p_part *= factor;
        }
    }
    mpq_class val(p_part);
    return (rank_group + rank_centralizer) % 2 == 0 ? val : -val;
}

namespace {

struct SpectrumLess {
    bool operator()(const Spectrum& a, const Spectrum& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].first != b[i].first) return a[i].first < b[i].first;
            if (!(a[i].second == b[i].second))
                return multipartition_precedes(a[i].second, b[i].second);
        }
        return false;
    }
};

}  // namespace

GroupScope::GroupScope(const Fq& f, DimVector v, bool brute, long budget)
    : f_(f), v_(std::move(v)), brute_(brute) {
    order_ = group_order(f, v_);
    classes_ = enumerate_classes(f, v_, budget);
    if (!brute_) return;

    std::vector<GroupElement> elements = enumerate_group(f, v_, budget);
    std::map<Spectrum, std::pair<mpz_class, GroupElement>, SpectrumLess> groups;
    for (GroupElement& g : elements) {
        Spectrum s = element_spectrum(f, g);
        auto it = groups.find(s);
        if (it == groups.end())
            groups.emplace(std::move(s), std::make_pair(mpz_class(1), std::move(g)));
        else
            it->second.first += 1;
    }
    if (groups.size() != classes_.size())
        throw math_error("brute-force class count " + std::to_string(groups.size()) +
                         " disagrees with the closed form " +
                         std::to_string(classes_.size()));
    for (ClassDescriptor& c : classes_) {
        auto it = groups.find(c.spectrum);
        if (it == groups.end())
            throw math_error("a predicted class was never seen in enumeration");
        if (it->second.first != c.size)
            throw math_error("brute-force class size disagrees with the closed form");
        const GroupElement& seen = it->second.second;
        for (size_t i = 0; i < v_.size(); ++i)
            if (mat_det(f, seen[i]) != c.det[static_cast<size_t>(i)])
                throw math_error("determinant formula disagrees with enumeration");
        c.rep = seen;
    }
}

GroupScope GroupScope::class_mode(const Fq& f, const DimVector& v, long budget) {
    return GroupScope(f, v, false, budget);
}

GroupScope GroupScope::element_mode(const Fq& f, const DimVector& v, long budget) {
    return GroupScope(f, v, true, budget);
}

Cyclo GroupScope::inner_product(const ClassValue& a, const ClassValue& b) const {
    Cyclo total;
    for (const ClassDescriptor& c : classes_)
        total = total + (a(c) * b(c).conj()).scaled(mpq_class(c.size));
    return total.scaled(mpq_class(1) / mpq_class(order_));
}

std::vector<OmLine> verify_om(const GroupScope& scope) {
    AlphaCharacter alpha(scope.field(), scope.dims());
    std::vector<TypeOmega> types = enumerate_types(scope.dims());
    std::vector<Cyclo> sums(types.size());
    for (const ClassDescriptor& c : scope.classes()) {
        size_t found = types.size();
        for (size_t i = 0; i < types.size(); ++i)
            if (types[i] == c.type) {
                found = i;
                break;
            }
        if (found == types.size()) throw math_error("class type missing from the type list");
        sums[found] = sums[found] + alpha.on_dets(c.det);
    }
    mpq_class qm1(scope.field().q() - 1);
    std::vector<OmLine> out;
    for (size_t i = 0; i < types.size(); ++i) {
        OmLine line;
        line.omega = types[i];
        line.lhs = sums[i];
        line.rhs = qm1 * c_omega(types[i]);
        line.pass = line.lhs == Cyclo(line.rhs);
        out.push_back(std::move(line));
    }
    return out;
}

mpq_class multiplicity_oracle(const Quiver& g, const GroupScope& scope, OracleTarget t) {
    AlphaCharacter alpha(scope.field(), scope.dims());
    const Fq& f = scope.field();
    const DimVector& v = scope.dims();
    auto counting = [&](const ClassDescriptor& c) {
        return Cyclo(mpq_class(fixed_count(g, f, c.rep)));
    };
    auto twist = [&](const ClassDescriptor& c) {
        Cyclo val = alpha.on_dets(c.det);
        if (t == OracleTarget::dt) val = val * Cyclo(steinberg_value(f, v, c));
        return val;
    };
    return scope.inner_product(counting, twist).to_rational();
}

namespace {

Cyclo trace_pairing_char(const Fq& f, const std::vector<FqMat>& x,
                         const std::vector<FqMat>& y) {
    int t = 0;
    for (size_t i = 0; i < x.size(); ++i)
        t = f.add(t, mat_trace(f, mat_mul(f, x[i], y[i])));
    return additive_char(f, t);
}

// does the form xi separate the whole box below v (and kill v when required)
bool xi_admits(const Fq& f, const DimVector& v, const std::vector<int>& xi,
               bool require_kernel) {
    auto dot = [&](const DimVector& w) {
        int s = 0;
        for (size_t i = 0; i < v.size(); ++i)
            s = f.add(s, f.mul(xi[i], static_cast<int>(w[i] % f.p())));
        return s;
    };
    if (require_kernel && dot(v) != 0) return false;
    DimVector w(v.size(), 0);
    for (;;) {
        size_t i = w.size();
        while (i > 0 && w[i - 1] == v[i - 1]) {
            w[i - 1] = 0;
            --i;
        }
        if (i == 0) return true;
        ++w[i - 1];
        if (w == v) continue;
        if (dot(w) == 0) return false;
    }
}

// First form in the element encoding order whose values separate the box.
// The kernel condition is read in F_q, so it can be satisfiable even when
// the strict integral search is not (characteristic dividing the vector) and
// vice versa. Coordinates at empty vertices never enter any condition and
// stay zero.
std::vector<int> xi_search_fq(const Fq& f, const DimVector& v, bool require_kernel) {
    if (dim_is_zero(v)) throw input_error("generic form needs a nonzero dimension vector");
    std::vector<size_t> live;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) live.push_back(i);
    std::vector<int> xi(v.size(), 0);
    for (;;) {
        if (xi_admits(f, v, xi, require_kernel)) return xi;
        size_t i = live.size();
        while (i > 0 && xi[live[i - 1]] == f.q() - 1) {
            xi[live[i - 1]] = 0;
            --i;
        }
        if (i == 0) break;
        ++xi[live[i - 1]];
    }
    throw input_error(std::string("no ") +
                      (require_kernel ? "kernel-generic linear form" : "box-separating linear form") +
                      " over F_" + std::to_string(f.q()) + " for v = " + dim_text(v));
}

}  // namespace

AdditiveSideResult additive_side(const Quiver& g, const Fq& f, const DimVector& v,
                                 OracleTarget t, long budget) {
    if (static_cast<int>(v.size()) != g.vertices())
        throw input_error("dimension vector length does not match the quiver");

    int q = static_cast<int>(f.q());
    long squares = 0, nilp_exp = 0;
    for (int x : v) {
        squares += static_cast<long>(x) * x;
        nilp_exp += static_cast<long>(x) * (x - 1);
    }
    mpz_class space, nilp_count;
    mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(squares));
    mpz_ui_pow_ui(nilp_count.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(nilp_exp));
    mpz_class cost = t == OracleTarget::dt ? space * nilp_count : space;
    if (cost > budget)
        throw input_error("matrix-space sum of size " + cost.get_str() +
                          " exceeds the budget " + std::to_string(budget));

    AdditiveSideResult res;
    try {
        res.xi = xi_search_fq(f, v, true);
        res.strict_xi = true;
    } catch (const input_error&) {
        res.xi = xi_search_fq(f, v, false);
        res.strict_xi = false;
    }

    std::vector<std::vector<FqMat>> points = enumerate_gl(f, v, budget);

    std::vector<std::vector<FqMat>> nilpotents;
    if (t == OracleTarget::dt) {
        for (const auto& y : points) {
            bool nilp = true;
            for (size_t i = 0; i < v.size() && nilp; ++i)
                nilp = mat_pow(f, y[i], v[i]) == mat_zero(v[i], v[i]);
            if (nilp) nilpotents.push_back(y);
        }
        if (mpz_class(static_cast<long>(nilpotents.size())) != nilp_count)
            throw math_error("nilpotent count does not match q^(sum v_i^2 - v_i)");
    }

    Cyclo total;
    for (const auto& x : points) {
        int form = 0;
        for (size_t i = 0; i < v.size(); ++i)
            form = f.add(form, f.mul(res.xi[i], mat_trace(f, x[i])));
        Cyclo twist = additive_char(f, form);
        if (t == OracleTarget::dt) {
            Cyclo n;
            for (const auto& y : nilpotents) n = n + trace_pairing_char(f, x, y);
            twist = twist * n;
        }
        mpz_class theta;
        mpz_ui_pow_ui(theta.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(commuting_exponent(g, f, x)));
        total = total + twist.conj().scaled(mpq_class(theta));
    }

    MultiPartition orbit_shape =
        t == OracleTarget::dt ? MultiPartition::one_row(v) : MultiPartition::all_ones(v);
    long orbit_dim = 0;
    for (size_t i = 0; i < v.size(); ++i)
        orbit_dim += static_cast<long>(v[i]) * v[i] -
                     pairing(orbit_shape.component(i), orbit_shape.component(i));
    if (orbit_dim % 2 != 0) throw math_error("orbit dimension is odd");
    mpz_class half_power;
    mpz_ui_pow_ui(half_power.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(orbit_dim / 2));

    mpq_class scale = mpq_class(q - 1, q) / mpq_class(group_order(f, v)) /
                      mpq_class(half_power);
    res.value = total.scaled(scale).to_rational();
    return res;
}

std::vector<Cyclo> fourier_gl(const Fq& f, const DimVector& v,
                              const std::vector<Cyclo>& values, long budget) {
    std::vector<std::vector<FqMat>> points = enumerate_gl(f, v, budget);
    if (values.size() != points.size())
        throw input_error("value table size does not match the matrix space");
    std::vector<Cyclo> out(points.size());
    for (size_t xi = 0; xi < points.size(); ++xi) {
        Cyclo sum;
        for (size_t yi = 0; yi < points.size(); ++yi)
            sum = sum + values[yi] * trace_pairing_char(f, points[xi], points[yi]);
        out[xi] = sum;
    }
    return out;
}

}  // namespace quiverdt
