#include "quiverdt/poly.hpp"

#include "quiverdt/error.hpp"

#include <algorithm>
#include <utility>

namespace quiverdt {

Poly::Poly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return t_pow(1); }

Poly Poly::t_pow(int k) {
    if (k < 0) throw input_error("t_pow: negative exponent");
    std::vector<mpq_class> c(static_cast<size_t>(k) + 1, mpq_class(0));
    c.back() = 1;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return mpq_class(0);
    return c_[static_cast<size_t>(k)];
}

mpq_class Poly::leading() const {
    if (c_.empty()) return mpq_class(0);
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> c(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpq_class> c(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const mpq_class& s) const {
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::substitute_power(int d) const {
    if (d < 1) throw input_error("substitute_power: exponent must be >= 1");
    if (is_zero()) return Poly();
    std::vector<mpq_class> c(static_cast<size_t>(degree()) * d + 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(d)] = c_[i];
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned k) const {
    Poly acc = Poly(mpq_class(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw input_error("divmod: division by zero polynomial");
    Poly rem = *this;
    std::vector<mpq_class> q;
    int dd = divisor.degree();
    if (rem.degree() >= dd)
        q.assign(static_cast<size_t>(rem.degree() - dd) + 1, mpq_class(0));
    const mpq_class lead = divisor.leading();
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        mpq_class f = rem.leading() / lead;
        q[static_cast<size_t>(shift)] = f;
        std::vector<mpq_class> sub(static_cast<size_t>(shift), mpq_class(0));
        for (const auto& c : divisor.c_) sub.push_back(c * f);
        rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (mpq_class(1) / leading());
}

bool Poly::integer_coeffs() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

bool Poly::nonneg_integer_coeffs() const {
    for (const auto& c : c_)
        if (c.get_den() != 1 || c < 0) return false;
    return true;
}

namespace {

// clear denominators and strip integer content
std::vector<mpz_class> primitive_z(const Poly& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    mpz_class content(0);
    for (const auto& c : p.coeffs()) {
        mpz_class zi = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.get_mpz_t());
        z.push_back(std::move(zi));
    }
    if (content > 1)
        for (auto& zi : z) zi /= content;
    return z;
}

void strip_content(std::vector<mpz_class>& a) {
    mpz_class content(0);
    for (const auto& x : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
        for (auto& x : a) x /= content;
}

// primitive pseudo-remainder, keeping coefficients integral and small
std::vector<mpz_class> prem_primitive(std::vector<mpz_class> a,
                                      const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        strip_content(a);
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> za = primitive_z(a), zb = primitive_z(b);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        std::vector<mpz_class> r = prem_primitive(std::move(za), zb);
        za = std::move(zb);
        zb = std::move(r);
    }
    std::vector<mpq_class> q;
    q.reserve(za.size());
    for (const auto& x : za) q.emplace_back(x);
    return Poly(std::move(q)).monic();
}

}  // namespace quiverdt
