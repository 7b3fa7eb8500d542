#pragma once

#include "quiverdt/error.hpp"

#include <vector>

namespace quiverdt {

inline int mobius(int n) {
    if (n < 1) throw input_error("mobius of a nonpositive integer");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

inline std::vector<int> divisors(int n) {
    if (n < 1) throw input_error("divisors of a nonpositive integer");
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_prime_power(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;
}

}  // namespace quiverdt
