// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pfh/binom.hpp"
#include "pfh/multipoly.hpp"

namespace pfh::testing {

// Fraction-free (Bareiss) determinant of an integer matrix.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Random integer alternating matrix with entries in [-9, 9].
inline std::vector<std::vector<Int>> random_alternating(size_t n, std::mt19937_64& rng) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            long v = static_cast<long>(rng() % 19) - 9;
            m[i][j] = v;
            m[j][i] = -v;
        }
    return m;
}

inline std::vector<std::vector<MultiPoly>> to_constant_matrix(
    const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<MultiPoly>> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            out[i].push_back(MultiPoly::constant(0, Rat(m[i][j])));
    return out;
}

// Pfaffian by expansion along the last row/column,
// Pf = sum_{i<m} (-1)^(i+1) a[i][m] Pf(minor), with 1-based i.
inline MultiPoly pfaffian_last_row(const std::vector<std::vector<MultiPoly>>& m,
                                   std::vector<size_t> idx, int dim) {
    if (idx.empty()) return MultiPoly::constant(dim, 1);
    size_t last = idx.back();
    MultiPoly acc(dim);
    for (size_t i = 0; i + 1 < idx.size(); ++i) {
        std::vector<size_t> rest;
        for (size_t k = 0; k + 1 < idx.size(); ++k)
            if (k != i) rest.push_back(idx[k]);
        MultiPoly contrib = m[idx[i]][last] * pfaffian_last_row(m, rest, dim);
        acc = (i % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

inline MultiPoly pfaffian_last_row(const std::vector<std::vector<MultiPoly>>& m) {
    int dim = m.empty() ? 0 : m[0][0].dim();
    std::vector<size_t> idx(m.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pfaffian_last_row(m, idx, dim);
}

}  // namespace pfh::testing
