#pragma once

#include <random>

#include "imf/matrix.hpp"
#include "imf/sv.hpp"

namespace imf::testing {

inline Matrix wilson() {
    return Matrix::from_rows({{5, 7, 6, 5}, {7, 10, 8, 7}, {6, 8, 10, 9}, {5, 7, 9, 10}});
}

inline Matrix z_factor() {
    return Matrix::from_rows({{2, 3, 2, 2}, {1, 1, 2, 1}, {0, 0, 1, 2}, {0, 0, 1, 1}});
}

inline Matrix z_prime() {
    return Matrix::from_rows({{frac(1, 2), 1, 0, 1},
                              {frac(3, 2), 2, 3, 3},
                              {frac(1, 2), 1, 0, 0},
                              {frac(3, 2), 2, 1, 0}});
}

inline Matrix z_double_prime() {
    return Matrix::from_rows({{frac(3, 2), 2, 2, 2},
                              {frac(3, 2), 2, 2, 1},
                              {frac(1, 2), 1, 1, 2},
                              {frac(-1, 2), -1, 1, 1}});
}

/// Weightless constant-sum part of the Wilson matrix.
inline Matrix w_zero() {
    return frac(1, 16) * Matrix::from_rows({{15, 11, -9, -17},
                                            {11, 23, -13, -21},
                                            {-9, -13, 15, 7},
                                            {-17, -21, 7, 31}});
}

/// Constant-sum part W0 + (wt W) E of the Wilson matrix.
inline Matrix w_s() { return w_zero() + frac(119, 16) * Matrix::ones(4); }

inline Matrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

inline Matrix random_rational_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(num(rng), den(rng));
    return m;
}

/// Independent determinant oracle: cofactor expansion along the first row.
inline Rat naive_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m(0, 0);
    Rat total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Rat term = m(0, j) * naive_det(minor);
        total += (j % 2 == 0) ? term : Rat(-term);
    }
    return total;
}

/// Independent characteristic polynomial oracle (Faddeev-LeVerrier),
/// coefficients in descending degree with leading 1.
inline std::vector<Rat> char_poly_faddeev(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[0] = 1;
    Matrix mk = m;
    Rat ck(0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) mk = m * (mk + ck * Matrix::identity(n));
        ck = Rat(-trace(mk)) / Rat(static_cast<long>(k));
        coeffs[k] = ck;
    }
    return coeffs;
}

/// Project a matrix onto the weightless constant-sum subspace.
inline Matrix project_weightless_s(const Matrix& m) { return decompose(m).m0; }

}  // namespace imf::testing
