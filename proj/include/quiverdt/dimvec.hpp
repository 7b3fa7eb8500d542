#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "quiverdt/error.hpp"

namespace quiverdt {

// Dimension vector: one nonnegative integer per vertex. Also reused as the
// exponent vector of a series monomial T^w.
using DimVector = std::vector<int>;

inline bool dim_is_zero(const DimVector& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

inline bool dim_leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw input_error("dimension vectors of different length");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int dim_sum(const DimVector& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

inline long dim_dot(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw input_error("dimension vectors of different length");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

// gcd of the entries; an indivisible vector has gcd 1.
inline int dim_gcd(const DimVector& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    return g;
}

inline std::string dim_text(const DimVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// Visits every w with 0 <= w <= bound componentwise, in odometer order
// (last coordinate fastest), starting from the zero vector.
template <class F>
void for_each_below(const DimVector& bound, F&& visit) {
    DimVector w(bound.size(), 0);
    for (;;) {
        visit(const_cast<const DimVector&>(w));
        size_t i = bound.size();
        while (i > 0) {
            --i;
            if (w[i] < bound[i]) {
                ++w[i];
                break;
            }
            w[i] = 0;
            if (i == 0) return;
        }
        if (bound.empty()) return;
    }
}

}  // namespace quiverdt
