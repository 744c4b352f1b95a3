#include "imf/matrix.hpp"

#include <sstream>
#include <utility>

namespace imf {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::ones(std::size_t n) {
    Matrix m(n, n);
    for (auto& e : m.entries_) e = 1;
    return m;
}

Matrix Matrix::outer(const Vec& u, const Vec& v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

namespace {
std::string shape_msg(const char* op, const Matrix& a, const Matrix& b) {
    std::ostringstream os;
    os << op << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    return os.str();
}
}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(shape_msg("add", a, b));
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(shape_msg("sub", a, b));
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError(shape_msg("mul", a, b));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Rat& s, const Matrix& m) {
    Matrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = s * m(i, j);
    return c;
}

Matrix operator-(const Matrix& m) { return Rat(-1) * m; }

Vec operator*(const Matrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vec r(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec all_ones(std::size_t n) { return Vec(n, Rat(1)); }
Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

bool is_zero(const Vec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vsub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vscale(const Rat& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

namespace {

// Clear denominators: returns integer matrix A = d*M and the multiplier d.
std::pair<std::vector<Int>, Int> clear_denominators(const Matrix& m) {
    Int d(1);
    for (const auto& e : m.entries()) {
        Int den = e.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    std::vector<Int> a;
    a.reserve(m.entries().size());
    for (const auto& e : m.entries()) a.push_back(e.get_num() * (d / e.get_den()));
    return {std::move(a), d};
}

// Bareiss elimination on an integer matrix (row-major, n x n).
// Returns the determinant; if rank_out is non-null, fills the rank and the
// determinant value is only meaningful for full rank.
Int bareiss_det(std::vector<Int> a, std::size_t n, std::size_t* rank_out) {
    Int prev(1);
    int sign = 1;
    std::size_t r = 0;  // current pivot row
    for (std::size_t k = 0; k < n && r < n; ++k) {
        // find a nonzero pivot in column k at or below row r
        std::size_t piv = r;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) {
            if (!rank_out) return Int(0);
            continue;  // rank-deficient column, move on
        }
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[r * n + j]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[r * n + k] - a[i * n + k] * a[r * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = a[r * n + k];
        ++r;
    }
    if (rank_out) *rank_out = r;
    if (r < n) return Int(0);
    return sign < 0 ? Int(-prev) : prev;
}

}  // namespace

Rat det(const Matrix& m) {
    if (!m.square()) throw DimensionError("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    auto [a, d] = clear_denominators(m);
    Int num = bareiss_det(std::move(a), n, nullptr);
    Int den(1);
    mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
    return frac(num, den);
}

std::size_t rank(const Matrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    // embed into a square matrix padded with zeros; padding never raises rank
    const std::size_t n = std::max(r, c);
    Matrix sq(n, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) sq(i, j) = m(i, j);
    auto [a, d] = clear_denominators(sq);
    (void)d;
    std::size_t rk = 0;
    bareiss_det(std::move(a), n, &rk);
    return rk;
}

Matrix adjugate(const Matrix& m) {
    if (!m.square()) throw DimensionError("adjugate: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) return Matrix::identity(1);
    Matrix adj(n, n);
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj(i,j) = (-1)^{i+j} det(M with row j and column i deleted)
            std::size_t mi = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(mi, mj) = m(r, c);
                    ++mj;
                }
                ++mi;
            }
            Rat d = det(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : Rat(-d);
        }
    }
    return adj;
}

Rat trace(const Matrix& m) {
    if (!m.square()) throw DimensionError("trace: matrix not square");
    Rat s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

}  // namespace imf
