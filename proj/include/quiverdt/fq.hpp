#pragma once

#include <vector>

namespace quiverdt {

// Finite field with q = p^k elements, small enough for table arithmetic.
// Elements are the integers 0..q-1, read as coordinate vectors over F_p in
// base p with the constant coordinate least significant; the prime subfield
// is 0..p-1. Multiplication works modulo the first irreducible monic
// polynomial of degree k in that same encoding order.
class Fq {
  public:
    explicit Fq(long q, long max_q = 9);

    long q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }
    // monic modulus, constant coefficient first, length k+1
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const { return mul_[index(a, b)]; }
    int inv(int a) const;  // input_error at 0
    int pow(int a, long e) const;

    // Tr(a) = a + a^p + ... + a^(p^(k-1)), lands in the prime subfield
    int trace_to_prime(int a) const { return trace_[check(a)]; }
    // fixed generator of the unit group (smallest in the element encoding)
    int generator() const { return gen_; }
    // exponent of a nonzero element with respect to the generator
    long dlog(int a) const;

  private:
    size_t index(int a, int b) const;
    int check(int a) const;

    int p_, k_;
    long q_;
    std::vector<int> mod_;
    std::vector<int> mul_, inv_, trace_;
    std::vector<long> dlog_;
    int gen_;
};

}  // namespace quiverdt
