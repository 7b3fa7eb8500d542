#include "quiverdt/fqlinalg.hpp"

#include "quiverdt/error.hpp"

#include <tuple>

namespace quiverdt {

bool FqMat::operator<(const FqMat& o) const {
    return std::tie(rows, cols, a) < std::tie(o.rows, o.cols, o.a);
}

FqMat mat_zero(int rows, int cols) {
    return FqMat{rows, cols, std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
}

FqMat mat_identity(int n) {
    FqMat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void require_same_shape(const FqMat& x, const FqMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw input_error("matrix shape mismatch");
}

}  // namespace

FqMat mat_add(const Fq& f, const FqMat& x, const FqMat& y) {
    require_same_shape(x, y);
    FqMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
    return r;
}

FqMat mat_sub(const Fq& f, const FqMat& x, const FqMat& y) {
    require_same_shape(x, y);
    FqMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
    return r;
}

FqMat mat_mul(const Fq& f, const FqMat& x, const FqMat& y) {
    if (x.cols != y.rows) throw input_error("matrix shape mismatch");
    FqMat r = mat_zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(v, y.at(k, j)));
        }
    return r;
}

FqMat mat_scale(const Fq& f, int s, const FqMat& x) {
    FqMat r = x;
    for (int& v : r.a) v = f.mul(s, v);
    return r;
}

FqMat mat_neg(const Fq& f, const FqMat& x) {
    FqMat r = x;
    for (int& v : r.a) v = f.neg(v);
    return r;
}

FqMat mat_pow(const Fq& f, FqMat x, long e) {
    if (x.rows != x.cols) throw input_error("power of a non-square matrix");
    if (e < 0) {
        x = mat_inverse(f, x);
        e = -e;
    }
    FqMat r = mat_identity(x.rows);
    while (e > 0) {
        if (e & 1) r = mat_mul(f, r, x);
        x = mat_mul(f, x, x);
        e >>= 1;
    }
    return r;
}

int mat_trace(const Fq& f, const FqMat& x) {
    if (x.rows != x.cols) throw input_error("trace of a non-square matrix");
    int t = 0;
    for (int i = 0; i < x.rows; ++i) t = f.add(t, x.at(i, i));
    return t;
}

namespace {

// row echelon form in place; returns (rank, det_of_leading_square_part)
std::pair<int, int> echelon(const Fq& f, FqMat& m) {
    int rank = 0, det = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(rank, col));
        int piv_inv = f.inv(m.at(rank, col));
        for (int r = rank + 1; r < m.rows; ++r) {
            int factor = f.mul(m.at(r, col), piv_inv);
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return {rank, det};
}

}  // namespace

int mat_rank(const Fq& f, FqMat x) { return echelon(f, x).first; }

int mat_nullity(const Fq& f, const FqMat& x) { return x.cols - mat_rank(f, x); }

int mat_det(const Fq& f, FqMat x) {
    if (x.rows != x.cols) throw input_error("determinant of a non-square matrix");
    if (x.rows == 0) return 1;
    auto [rank, det] = echelon(f, x);
    return rank == x.rows ? det : 0;
}

bool mat_invertible(const Fq& f, const FqMat& x) {
    return x.rows == x.cols && mat_rank(f, FqMat(x)) == x.rows;
}

FqMat mat_inverse(const Fq& f, const FqMat& x) {
    if (x.rows != x.cols) throw input_error("inverse of a non-square matrix");
    int n = x.rows;
    if (mat_rank(f, x) < n) throw math_error("matrix is singular");
    FqMat aug = mat_zero(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = 1;
    }
    echelon(f, aug);
    for (int i = n - 1; i >= 0; --i) {
        int piv_inv = f.inv(aug.at(i, i));
        for (int c = i; c < 2 * n; ++c) aug.at(i, c) = f.mul(piv_inv, aug.at(i, c));
        for (int r = 0; r < i; ++r) {
            int factor = aug.at(r, i);
            if (factor == 0) continue;
            for (int c = i; c < 2 * n; ++c)
                aug.at(r, c) = f.sub(aug.at(r, c), f.mul(factor, aug.at(i, c)));
        }
    }
    FqMat inv = mat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

FqMat block_diag(const std::vector<FqMat>& blocks) {
    int n = 0, m = 0;
    for (const FqMat& b : blocks) {
        n += b.rows;
        m += b.cols;
    }
    FqMat r = mat_zero(n, m);
    int ro = 0, co = 0;
    for (const FqMat& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) r.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows;
        co += b.cols;
    }
    return r;
}

bool mat_solve(const Fq& f, FqMat A, std::vector<int> b, std::vector<int>& out) {
    if (static_cast<int>(b.size()) != A.rows) throw input_error("solver shape mismatch");
    int n = A.rows, m = A.cols;
    FqMat aug = mat_zero(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, m) = b[static_cast<size_t>(i)];
    }
    echelon(f, aug);
    out.assign(static_cast<size_t>(m), 0);
    for (int r = n - 1; r >= 0; --r) {
        int lead = -1;
        for (int c = 0; c <= m; ++c)
            if (aug.at(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        if (lead == m) return false;
        int rhs = aug.at(r, m);
        for (int c = lead + 1; c < m; ++c)
            rhs = f.sub(rhs, f.mul(aug.at(r, c), out[static_cast<size_t>(c)]));
        out[static_cast<size_t>(lead)] = f.mul(f.inv(aug.at(r, lead)), rhs);
    }
    return true;
}

FqPoly fqpoly_trim(FqPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int fqpoly_degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly fqpoly_add(const Fq& f, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return fqpoly_trim(std::move(r));
}

FqPoly fqpoly_mul(const Fq& f, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

FqPoly fqpoly_rem(const Fq& f, FqPoly a, const FqPoly& b) {
    if (b.empty()) throw input_error("polynomial remainder by zero");
    int lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        int c = f.mul(a.back(), lead_inv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a = fqpoly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

FqPoly fqpoly_pow(const Fq& f, const FqPoly& a, int e) {
    FqPoly r = {1}, base = a;
    while (e > 0) {
        if (e & 1) r = fqpoly_mul(f, r, base);
        base = fqpoly_mul(f, base, base);
        e >>= 1;
    }
    return r;
}

FqPoly fqpoly_derivative(const Fq& f, const FqPoly& a) {
    FqPoly r;
    for (size_t i = 1; i < a.size(); ++i) {
        int c = 0;
        for (size_t j = 0; j < i % static_cast<size_t>(f.p()); ++j) c = f.add(c, a[i]);
        r.push_back(c);
    }
    return fqpoly_trim(std::move(r));
}

FqPoly fqpoly_monic(const Fq& f, FqPoly a) {
    if (a.empty()) return a;
    int lead_inv = f.inv(a.back());
    for (int& c : a) c = f.mul(lead_inv, c);
    return a;
}

FqPoly fqpoly_gcd(const Fq& f, FqPoly a, FqPoly b) {
    while (!b.empty()) {
        FqPoly r = fqpoly_rem(f, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return fqpoly_monic(f, std::move(a));
}

FqMat fqpoly_eval_matrix(const Fq& f, const FqPoly& a, const FqMat& m) {
    if (m.rows != m.cols) throw input_error("polynomial of a non-square matrix");
    FqMat r = mat_zero(m.rows, m.rows);
    for (size_t i = a.size(); i-- > 0;) {
        r = mat_mul(f, r, m);
        for (int d = 0; d < m.rows; ++d) r.at(d, d) = f.add(r.at(d, d), a[i]);
    }
    return r;
}

FqMat companion(const Fq& f, const FqPoly& monic) {
    int d = fqpoly_degree(monic);
    if (d < 1 || monic.back() != 1) throw input_error("companion needs a monic polynomial");
    FqMat m = mat_zero(d, d);
    for (int i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) m.at(i, d - 1) = f.neg(monic[static_cast<size_t>(i)]);
    return m;
}

std::vector<FqPoly> irreducible_monic(const Fq& f, int degree) {
    if (degree < 1) throw input_error("irreducible enumeration needs degree >= 1");
    // reducibility is witnessed by an irreducible divisor of at most half the
    // degree, built up recursively
    std::vector<std::vector<FqPoly>> by_degree(static_cast<size_t>(degree) + 1);
    for (int d = 1; d <= degree; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= f.q();
        for (long idx = 0; idx < count; ++idx) {
            FqPoly cand;
            long rest = idx;
            for (int i = 0; i < d; ++i) {
                cand.push_back(static_cast<int>(rest % f.q()));
                rest /= f.q();
            }
            cand.push_back(1);
            bool reducible = false;
            for (int e = 1; 2 * e <= d && !reducible; ++e)
                for (const FqPoly& g : by_degree[static_cast<size_t>(e)])
                    if (fqpoly_rem(f, cand, g).empty()) {
                        reducible = true;
                        break;
                    }
            if (!reducible) by_degree[static_cast<size_t>(d)].push_back(std::move(cand));
        }
    }
    return by_degree[static_cast<size_t>(degree)];
}

FqPoly minimal_polynomial(const Fq& f, const FqMat& m) {
    if (m.rows != m.cols) throw input_error("minimal polynomial of a non-square matrix");
    int n = m.rows;
    if (n == 0) return {1};
    std::vector<FqMat> powers = {mat_identity(n)};
    for (int j = 1; j <= n; ++j) {
        powers.push_back(mat_mul(f, powers.back(), m));
        FqMat A = mat_zero(n * n, j);
        for (int c = 0; c < j; ++c)
            for (int e = 0; e < n * n; ++e) A.at(e, c) = powers[static_cast<size_t>(c)].a[static_cast<size_t>(e)];
        std::vector<int> sol;
        if (mat_solve(f, A, powers.back().a, sol)) {
            FqPoly p;
            for (int c : sol) p.push_back(f.neg(c));
            p.push_back(1);
            return p;
        }
    }
    throw math_error("no linear dependency among matrix powers");
}

}  // namespace quiverdt
