#include "imf/sv.hpp"

namespace imf {

Rat weight(const Matrix& m) {
    if (!m.square()) throw DimensionError("weight: matrix not square");
    if (m.rows() == 0) throw DimensionError("weight: empty matrix");
    Rat s(0);
    for (const auto& e : m.entries()) s += e;
    return s / Rat(static_cast<long>(m.rows() * m.rows()));
}

SVParts decompose(const Matrix& m) {
    if (!m.square()) throw DimensionError("decompose: matrix not square");
    const std::size_t n = m.rows();
    const Rat w = weight(m);
    SVParts p{zero_vec(n), zero_vec(n), Matrix(n, n), w};
    const Rat inv_n = frac(1, static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Rat rs(0), cs(0);
        for (std::size_t j = 0; j < n; ++j) {
            rs += m(i, j);
            cs += m(j, i);
        }
        p.a[i] = inv_n * rs - w;
        p.b[i] = inv_n * cs - w;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.m0(i, j) = m(i, j) - p.a[i] - p.b[j] - w;
    return p;
}

Matrix recompose(const SVParts& p) {
    const std::size_t n = p.dim();
    if (p.b.size() != n || p.m0.rows() != n || p.m0.cols() != n)
        throw DimensionError("recompose: inconsistent part dimensions");
    Rat sa(0), sb(0);
    for (std::size_t i = 0; i < n; ++i) {
        sa += p.a[i];
        sb += p.b[i];
    }
    if (sa != 0 || sb != 0)
        throw std::invalid_argument("recompose: a and b must be orthogonal to 1");
    for (std::size_t i = 0; i < n; ++i) {
        Rat rs(0), cs(0);
        for (std::size_t j = 0; j < n; ++j) {
            rs += p.m0(i, j);
            cs += p.m0(j, i);
        }
        if (rs != 0 || cs != 0)
            throw std::invalid_argument("recompose: m0 must have zero row and column sums");
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = p.a[i] + p.b[j] + p.m0(i, j) + p.weight;
    return m;
}

std::optional<Rat> is_type_s(const Matrix& m) {
    if (!m.square()) throw DimensionError("is_type_s: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(0);
    Rat target(0);
    for (std::size_t j = 0; j < n; ++j) target += m(0, j);
    for (std::size_t i = 0; i < n; ++i) {
        Rat rs(0), cs(0);
        for (std::size_t j = 0; j < n; ++j) {
            rs += m(i, j);
            cs += m(j, i);
        }
        if (rs != target || cs != target) return std::nullopt;
    }
    return target / Rat(static_cast<long>(n));
}

bool is_type_v(const Matrix& m) {
    if (!m.square()) throw DimensionError("is_type_v: matrix not square");
    const std::size_t n = m.rows();
    Rat total(0);
    for (const auto& e : m.entries()) total += e;
    if (total != 0) return false;
    // m(i,j) + m(k,l) = m(i,l) + m(k,j) for all pairs is equivalent to
    // checking all pairs against the first row/column.
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (m(i, j) + m(0, 0) != m(i, 0) + m(0, j)) return false;
    return true;
}

Matrix v_from_vectors(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("v_from_vectors: length mismatch");
    Rat sa(0), sb(0);
    for (const auto& e : a) sa += e;
    for (const auto& e : b) sb += e;
    if (sa != 0 || sb != 0)
        throw std::invalid_argument("v_from_vectors: vectors must be orthogonal to 1");
    const std::size_t n = a.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i] + b[j];
    return m;
}

std::vector<Rat> v_char_poly(const Vec& a, const Vec& b) {
    const std::size_t n = a.size();
    if (n < 2) throw DimensionError("v_char_poly: need n >= 2");
    if (b.size() != n) throw DimensionError("v_char_poly: length mismatch");
    // lambda^{n-2} (lambda^2 - n b^T a), descending degree
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[0] = 1;
    coeffs[2] = Rat(-static_cast<long>(n)) * dot(b, a);
    return coeffs;
}

Rat frobenius_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("frobenius_inner: shape mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(i, j);
    return s;
}

Matrix s_part(const SVParts& p) {
    return p.m0 + p.weight * Matrix::ones(p.dim());
}

Matrix v_part(const SVParts& p) { return v_from_vectors(p.a, p.b); }

}  // namespace imf
