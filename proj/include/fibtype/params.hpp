#pragma once

#include "fibtype/numeric.hpp"

#include <compare>
#include <vector>

namespace fibtype {

/// Parameter triple (n,m,k) of G_n(m,k) with the derived residues A = k and
/// B = k - m (mod n) that drive the whole classification.
struct FibParams {
    int n, m, k;
    int A, B;
    int gcd_nmk;

    bool a_zero() const { return A == 0; }
    bool b_zero() const { return B == 0; }
    bool decomposable() const { return gcd_nmk > 1; }
};

inline FibParams derive(int n, int m, int k) {
    if (n < 2) throw std::invalid_argument("derive: n must be >= 2");
    if (m < 0 || m >= n || k < 0 || k >= n)
        throw std::invalid_argument("derive: m,k must lie in [0,n)");
    FibParams p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.A = mod(k, n);
    p.B = mod(k - m, n);
    p.gcd_nmk = gcd3(n, m, k);
    return p;
}

/// G_n(m,k) ~ G_n(n-m, n-m+k); on derived residues this swaps (A,B).
inline FibParams swap_iso(const FibParams& p) {
    return derive(p.n, mod(p.n - p.m, p.n), mod(p.n - p.m + p.k, p.n));
}

/// Subscript rescaling by a unit c: G_n(m,k) ~ G_n(cm, ck); (A,B) -> (cA, cB).
inline FibParams rescale_iso(const FibParams& p, int c) {
    if (!is_unit(c, p.n)) throw std::invalid_argument("rescale_iso: c is not a unit mod n");
    return derive(p.n, mod(1LL * c * p.m, p.n), mod(1LL * c * p.k, p.n));
}

/// Canonical representative of the orbit of (A,B) under unit rescaling and swap.
struct OrbitKey {
    int A, B;
    friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
};

inline OrbitKey canonicalize(const FibParams& p) {
    if (p.gcd_nmk != 1)
        throw std::invalid_argument(
            "canonicalize: gcd(n,m,k) > 1, group decomposes as a free product; reduce parameters");
    OrbitKey best{p.n, p.n};
    for (int c = 1; c < p.n; ++c) {
        if (!is_unit(c, p.n)) continue;
        int a = mod(1LL * c * p.A, p.n);
        int b = mod(1LL * c * p.B, p.n);
        best = std::min(best, OrbitKey{a, b});
        best = std::min(best, OrbitKey{b, a});
    }
    return best;
}

/// The case list for 13 <= n <= 7p: representatives G_{pN}(m', tN) with m' as
/// forced by gcd considerations, one family per section 3.2 line.
inline std::vector<FibParams> case_representatives(int p) {
    std::vector<FibParams> out;
    auto add_family = [&](int mval, std::vector<int> ts, std::vector<int> Ns) {
        for (int N : Ns)
            for (int t : ts) out.push_back(derive(p * N, mval, t * N));
    };
    switch (p) {
        case 5:
            add_family(1, {1, 2, 3, 4}, {3, 4, 5, 6, 7});
            add_family(5, {1, 2, 3, 4}, {3, 4, 6, 7});
            break;
        case 4:
            add_family(1, {1, 3}, {4, 5, 6, 7});
            add_family(2, {1, 3}, {5, 7});
            add_family(4, {1, 3}, {5, 7});
            break;
        case 3:
            add_family(1, {1, 2}, {5, 6, 7});
            add_family(3, {1, 2}, {5, 7});
            break;
        default:
            throw std::invalid_argument("case_representatives: p must be 3, 4 or 5");
    }
    return out;
}

}  // namespace fibtype
