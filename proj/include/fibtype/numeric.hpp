#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace fibtype {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Least non-negative residue of a mod n.
inline int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline int gcd3(int a, int b, int c) { return std::gcd(a, std::gcd(b, c)); }

inline bool is_unit(int c, int n) { return std::gcd(mod(c, n), n) == 1; }

inline int mod_inverse(int c, int n) {
    c = mod(c, n);
    if (std::gcd(c, n) != 1) throw std::invalid_argument("mod_inverse: not a unit");
    int t = 0, new_t = 1, r = n, new_r = c;
    while (new_r != 0) {
        int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod(t, n);
}

/// Additive order of x in Z_n (order of the trivial element is 1).
inline int additive_order(int x, int n) {
    x = mod(x, n);
    return n / std::gcd(x, n);
}

inline Int pow2(int e) {
    Int r = 1;
    return r << e;
}

}  // namespace fibtype
