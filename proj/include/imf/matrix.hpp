#pragma once

#include <cstddef>
#include <vector>

#include "imf/rational.hpp"

namespace imf {

using Vec = std::vector<Rat>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense matrix of exact rationals, row-major. Immutable use is the norm;
/// all operations return fresh values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    /// Build from nested initializer-style data (rows of equal length).
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static Matrix identity(std::size_t n);
    /// The all-ones matrix E_n = 1 1^T.
    static Matrix ones(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    /// Outer product u v^T.
    static Matrix outer(const Vec& u, const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Rat>& entries() const { return entries_; }

    Matrix transpose() const;
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);  // exact product
Matrix operator*(const Rat& s, const Matrix& m);
Matrix operator-(const Matrix& m);

Vec operator*(const Matrix& m, const Vec& v);

Rat dot(const Vec& a, const Vec& b);
Vec all_ones(std::size_t n);
Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Rat& s, const Vec& v);

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rat det(const Matrix& m);

/// Transpose-of-cofactors matrix; satisfies M * adj(M) = det(M) * I.
/// adjugate of a 1x1 matrix is the 1x1 identity.
Matrix adjugate(const Matrix& m);

/// Exact rank via fraction-free elimination with exact zero tests.
std::size_t rank(const Matrix& m);

Rat trace(const Matrix& m);

}  // namespace imf
