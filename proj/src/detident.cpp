#include "imf/detident.hpp"

namespace imf {

Rat det_rank1_update(const Matrix& m, const Vec& u, const Vec& v) {
    if (!m.square() || u.size() != m.rows() || v.size() != m.rows())
        throw DimensionError("det_rank1_update: shape mismatch");
    Matrix adj = adjugate(m);
    return det(m) + dot(v, adj * u);
}

Rat det_via_weight(const Matrix& m) {
    auto w = is_type_s(m);
    if (!w) throw std::invalid_argument("det_via_weight: matrix not of constant-sum type");
    const std::size_t n = m.rows();
    Matrix m0 = m - *w * Matrix::ones(n);
    return Rat(static_cast<long>(n * n)) * *w * weight(adjugate(m0));
}

Rat det_via_decomposition(const Matrix& m) {
    if (!m.square()) throw DimensionError("det_via_decomposition: matrix not square");
    const std::size_t n = m.rows();
    const SVParts p = decompose(m);
    Matrix core = p.m0 - Matrix::outer(p.a, p.b);
    const Rat wm1 = p.weight - 1;
    Vec a1(n), b1(n);
    for (std::size_t i = 0; i < n; ++i) {
        a1[i] = p.a[i] + 1;
        b1[i] = p.b[i] + 1;
    }
    Vec ones = all_ones(n);
    Rat first = wm1 * dot(ones, adjugate(core) * ones);
    Matrix shifted = core + wm1 * Matrix::ones(n);
    Rat second = dot(b1, adjugate(shifted) * a1);
    return first + second;
}

Rat adj_weightless_s(const Matrix& m0) {
    auto w = is_type_s(m0);
    if (!w || *w != 0)
        throw std::invalid_argument("adj_weightless_s: matrix not weightless constant-sum");
    Matrix adj = adjugate(m0);
    const Rat& c = adj(0, 0);
    for (const auto& e : adj.entries())
        if (e != c) throw std::logic_error("adj_weightless_s: adjugate entries not constant");
    return c;
}

AdjugateVerdict adjugate_characterises_s(const Matrix& m) {
    if (!m.square()) throw DimensionError("adjugate_characterises_s: matrix not square");
    AdjugateVerdict v;
    Matrix adj = adjugate(m);
    const Rat& c = adj(0, 0);
    v.constant_adjugate = true;
    for (const auto& e : adj.entries())
        if (e != c) {
            v.constant_adjugate = false;
            break;
        }
    if (!v.constant_adjugate) return v;
    v.w = c;
    auto w = is_type_s(m);
    v.weightless_s = w.has_value() && *w == 0;
    v.rank = rank(m);
    if (v.w != 0) v.counterexample = !(v.weightless_s && v.rank == m.rows() - 1);
    return v;
}

}  // namespace imf
