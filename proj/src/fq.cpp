#include "quiverdt/fq.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"

#include <string>

namespace quiverdt {

namespace {

constexpr long kHardMaxQ = 81;

// digit vectors over F_p, constant coordinate first, length k
std::vector<int> digits_of(long a, int p, int k) {
    std::vector<int> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        d[static_cast<size_t>(i)] = static_cast<int>(a % p);
        a /= p;
    }
    return d;
}

long value_of(const std::vector<int>& d, int p) {
    long a = 0;
    for (size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// polynomial arithmetic over F_p for building the modulus and the tables;
// coefficients constant-first with no trailing zeros
std::vector<int> pp_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> pp_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return pp_trim(std::move(c));
}

int pp_inv_mod_p(int a, int p) {
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    return 0;
}

std::vector<int> pp_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    int lead_inv = pp_inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        int c = a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        a = pp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool pp_irreducible(const std::vector<int>& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    // trial division by every monic polynomial of degree up to deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<int> g = digits_of(idx, p, d);
            g.push_back(1);
            if (pp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> smallest_irreducible(int p, int k) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<int> f = digits_of(idx, p, k);
        f.push_back(1);
        if (pp_irreducible(f, p)) return f;
    }
    throw math_error("no irreducible modulus found");
}

}  // namespace

Fq::Fq(long q, long max_q) : q_(q) {
    if (max_q > kHardMaxQ) max_q = kHardMaxQ;
    if (q < 2 || q > max_q)
        throw input_error("field size " + std::to_string(q) +
                          " outside the supported range 2.." + std::to_string(max_q));
    long n = q;
    int p = 0;
    for (int c = 2; c <= n; ++c) {
        if (n % c == 0) {
            p = c;
            break;
        }
    }
    int k = 0;
    while (n > 1) {
        if (n % p != 0)
            throw input_error("field size " + std::to_string(q) + " is not a prime power");
        n /= p;
        ++k;
    }
    p_ = p;
    k_ = k;
    mod_ = smallest_irreducible(p, k);

    mul_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
    for (long a = 0; a < q_; ++a) {
        std::vector<int> da = digits_of(a, p_, k_);
        for (long b = 0; b <= a; ++b) {
            std::vector<int> prod = pp_rem(pp_mul(da, digits_of(b, p_, k_), p_), mod_, p_);
            prod.resize(static_cast<size_t>(k_), 0);
            int v = static_cast<int>(value_of(prod, p_));
            mul_[static_cast<size_t>(a) * q_ + b] = v;
            mul_[static_cast<size_t>(b) * q_ + a] = v;
        }
    }

    inv_.assign(static_cast<size_t>(q_), 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[static_cast<size_t>(a)] = b;
                break;
            }

    trace_.resize(static_cast<size_t>(q_));
    for (int a = 0; a < q_; ++a) {
        int t = 0, frob = a;
        for (int i = 0; i < k_; ++i) {
            t = add(t, frob);
            frob = pow(frob, p_);
        }
        trace_[static_cast<size_t>(a)] = t;
    }

    gen_ = 0;
    dlog_.assign(static_cast<size_t>(q_), -1);
    for (int g = 1; g < q_ && gen_ == 0; ++g) {
        std::vector<long> log(static_cast<size_t>(q_), -1);
        int x = 1;
        long e = 0;
        do {
            log[static_cast<size_t>(x)] = e++;
            x = mul(x, g);
        } while (x != 1);
        if (e == q_ - 1) {
            gen_ = g;
            dlog_ = std::move(log);
        }
    }
    if (gen_ == 0) throw math_error("unit group generator not found");
}

int Fq::check(int a) const {
    if (a < 0 || a >= q_) throw input_error("element out of range");
    return a;
}

size_t Fq::index(int a, int b) const {
    return static_cast<size_t>(check(a)) * static_cast<size_t>(q_) +
           static_cast<size_t>(check(b));
}

int Fq::add(int a, int b) const {
    check(a);
    check(b);
    int r = 0, m = 1;
    for (int i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

int Fq::neg(int a) const {
    check(a);
    int r = 0, m = 1;
    for (int i = 0; i < k_; ++i) {
        r += (p_ - a % p_) % p_ * m;
        a /= p_;
        m *= p_;
    }
    return r;
}

int Fq::sub(int a, int b) const { return add(a, neg(b)); }

int Fq::inv(int a) const {
    if (check(a) == 0) throw input_error("inverse of zero");
    return inv_[static_cast<size_t>(a)];
}

int Fq::pow(int a, long e) const {
    check(a);
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

long Fq::dlog(int a) const {
    if (check(a) == 0) throw input_error("discrete log of zero");
    return dlog_[static_cast<size_t>(a)];
}

}  // namespace quiverdt
