#include "quiverdt/cyclotomic.hpp"

#include "quiverdt/error.hpp"
#include "quiverdt/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace quiverdt {

namespace {
constexpr int kMaxModulus = 100;

void check_modulus(int m) {
    if (m < 1 || m > kMaxModulus)
        throw input_error("cyclotomic modulus out of range (1..100)");
}
}  // namespace

int euler_phi(int m) {
    if (m < 1) throw input_error("euler_phi of a nonpositive integer");
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const Poly& cyclotomic_polynomial(int m) {
    check_modulus(m);
    static std::map<int, Poly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // (x^m - 1) / prod of the lower cyclotomic polynomials at divisors
    Poly num = Poly::t_pow(m) - Poly::constant(1);
    for (int d : divisors(m)) {
        if (d == m) continue;
        auto [q, r] = num.divmod(cyclotomic_polynomial(d));
        if (!r.is_zero()) throw math_error("cyclotomic polynomial division left a remainder");
        num = q;
    }
    return cache.emplace(m, num).first->second;
}

Cyclo::Cyclo(int m, std::vector<mpq_class> c) : m_(m) {
    reduce_and_normalize(std::move(c));
}

void Cyclo::reduce_and_normalize(std::vector<mpq_class> raw) {
    check_modulus(m_);
    Poly rem = Poly(std::move(raw)).divmod(cyclotomic_polynomial(m_)).second;
    size_t deg = static_cast<size_t>(euler_phi(m_));
    c_.assign(deg, mpq_class(0));
    for (size_t i = 0; i < deg; ++i) c_[i] = rem.coeff(static_cast<int>(i));
    bool rational = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) { rational = false; break; }
    if (rational && m_ != 1) {
        m_ = 1;
        c_.resize(1);
    }
}

Cyclo Cyclo::root_power(int m, long k) {
    check_modulus(m);
    long r = k % m;
    if (r < 0) r += m;
    std::vector<mpq_class> c(static_cast<size_t>(r) + 1, mpq_class(0));
    c.back() = 1;
    return Cyclo(m, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

mpq_class Cyclo::to_rational() const {
    if (m_ != 1) throw math_error("cyclotomic value is not rational");
    return c_[0];
}

Cyclo Cyclo::lifted(int target_m) const {
    if (target_m == m_) return *this;
    if (target_m % m_ != 0) throw math_error("cyclotomic lift to a non-multiple modulus");
    check_modulus(target_m);
    int stretch = target_m / m_;
    std::vector<mpq_class> c(c_.size() == 0 ? 1 : (c_.size() - 1) * static_cast<size_t>(stretch) + 1,
                             mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(stretch)] = c_[i];
    return Cyclo(target_m, std::move(c));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    int m = std::lcm(m_, o.m_);
    // lifting renormalizes rational values to conductor 1, so the two
    // coefficient vectors may have different lengths; pad with zeros
    Cyclo a = lifted(m), b = o.lifted(m);
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Cyclo(m, std::move(c));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    int m = std::lcm(m_, o.m_);
    Cyclo a = lifted(m), b = o.lifted(m);
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Cyclo(m, std::move(c));
}

Cyclo Cyclo::scaled(const mpq_class& s) const {
    Cyclo r = *this;
    for (auto& x : r.c_) x *= s;
    if (s == 0) return Cyclo(r.m_, std::move(r.c_));  // renormalize to conductor 1
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

Cyclo Cyclo::conj() const {
    if (m_ == 1) return *this;
    std::vector<mpq_class> c(static_cast<size_t>(m_), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        size_t j = (static_cast<size_t>(m_) - i) % static_cast<size_t>(m_);
        c[j] += c_[i];
    }
    return Cyclo(m_, std::move(c));
}

Cyclo cyclo_embed(int m, long k) { return Cyclo::root_power(m, k); }

}  // namespace quiverdt
