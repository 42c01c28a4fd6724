#pragma once

#include "fibtype/numeric.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fibtype {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
  public:
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Relation matrix of P_n(m,k): circulant, row i has +1 at columns i and i+m
/// and -1 at column i+k (entries summed when indices coincide).
inline IntMatrix relation_matrix(int n, int m, int k) {
    if (n < 1 || m < 0 || m >= n || k < 0 || k >= n)
        throw std::invalid_argument("relation_matrix: bad parameters");
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i) {
        M.at(i, i) += 1;
        M.at(i, mod(i + m, n)) += 1;
        M.at(i, mod(i + k, n)) -= 1;
    }
    return M;
}

/// Invariant factors of an abelian group: torsion chain d_1 | d_2 | ... (each
/// > 1) plus free rank.
struct AbelianInvariants {
    std::vector<Int> torsion;
    size_t free_rank = 0;

    bool finite() const { return free_rank == 0; }
    std::optional<Int> order() const {
        if (!finite()) return std::nullopt;
        Int o = 1;
        for (const auto& d : torsion) o *= d;
        return o;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) { os << "Z"; first = false; }
        else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
        for (const auto& d : torsion) {
            if (!first) os << " x ";
            os << "Z_" << d;
            first = false;
        }
        if (first) os << "1";
        return os.str();
    }
};

/// Smith normal form by elimination, pivoting on the least nonzero absolute
/// value. Exact arithmetic throughout; no modular shortcuts.
inline AbelianInvariants smith_normal_form(IntMatrix M) {
    const size_t R = M.rows(), C = M.cols();
    std::vector<Int> diag;
    size_t t = 0;
    while (t < R && t < C) {
        // locate pivot: least |entry| != 0 in the trailing submatrix
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j) {
                if (M.at(i, j) == 0) continue;
                if (!found || abs(M.at(i, j)) < abs(M.at(pi, pj))) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        for (size_t j = 0; j < C; ++j) std::swap(M.at(t, j), M.at(pi, j));
        for (size_t i = 0; i < R; ++i) std::swap(M.at(i, t), M.at(i, pj));

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < R; ++i) {
                if (M.at(i, t) == 0) continue;
                Int q = M.at(i, t) / M.at(t, t);
                for (size_t j = t; j < C; ++j) M.at(i, j) -= q * M.at(t, j);
                if (M.at(i, t) != 0) {  // remainder became the smaller pivot
                    for (size_t j = 0; j < C; ++j) std::swap(M.at(t, j), M.at(i, j));
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < C; ++j) {
                if (M.at(t, j) == 0) continue;
                Int q = M.at(t, j) / M.at(t, t);
                for (size_t i = t; i < R; ++i) M.at(i, j) -= q * M.at(i, t);
                if (M.at(t, j) != 0) {
                    for (size_t i = 0; i < R; ++i) std::swap(M.at(i, t), M.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: pivot must divide every trailing entry
            bool fixed = true;
            for (size_t i = t + 1; i < R && fixed; ++i)
                for (size_t j = t + 1; j < C && fixed; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        for (size_t jj = t; jj < C; ++jj) M.at(t, jj) += M.at(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (M.at(t, t) < 0) M.at(t, t) = -M.at(t, t);
        diag.push_back(M.at(t, t));
        ++t;
    }
    AbelianInvariants inv;
    inv.free_rank = std::min(R, C) - diag.size() + (C > R ? C - R : 0);
    for (auto& d : diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

/// Exact determinant (Bareiss fraction-free elimination); square matrices.
inline Int determinant(IntMatrix M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: square matrix required");
    const size_t n = M.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t t = 0; t + 1 < n; ++t) {
        if (M.at(t, t) == 0) {
            size_t s = t + 1;
            while (s < n && M.at(s, t) == 0) ++s;
            if (s == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(M.at(t, j), M.at(s, j));
            sign = -sign;
        }
        for (size_t i = t + 1; i < n; ++i)
            for (size_t j = t + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(t, t) - M.at(i, t) * M.at(t, j)) / prev;
        prev = M.at(t, t);
    }
    return sign * M.at(n - 1, n - 1);
}

/// H_1 of G_n(m,k), exactly.
inline AbelianInvariants abelian_invariants(int n, int m, int k) {
    return smith_normal_form(relation_matrix(n, m, k));
}

}  // namespace fibtype
