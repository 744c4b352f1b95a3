#pragma once

#include "imf/sv.hpp"

namespace imf {

/// det(M + u v^T) = det(M) + v^T adj(M) u, evaluated through the right-hand
/// side (the rank-1 determinant update identity).
Rat det_rank1_update(const Matrix& m, const Vec& u, const Vec& v);

/// For constant-sum M = M0 + w E: det M = n^2 (wt M)(wt adj M0).
/// Throws if M is not of constant-sum type.
Rat det_via_weight(const Matrix& m);

/// Determinant through the decomposition-based formula
/// det M = (wt M - 1) 1^T adj(M0 - a b^T) 1
///         + (b + 1)^T adj(M0 - a b^T + (wt M - 1) E) (a + 1).
Rat det_via_decomposition(const Matrix& m);

/// For weightless constant-sum M0, the adjugate is a constant multiple w * E;
/// returns w after verifying all n^2 entries are in fact equal.
Rat adj_weightless_s(const Matrix& m0);

/// Report of the adjugate characterisation of weightless constant-sum
/// matrices: a nonzero-constant adjugate forces weightless type S of rank n-1.
struct AdjugateVerdict {
    bool constant_adjugate = false;  // adj(M) = w E for some w
    Rat w = Rat(0);
    bool weightless_s = false;  // constant-sum with weight 0
    std::size_t rank = 0;
    bool counterexample = false;  // w != 0 but M fails the characterisation
};

AdjugateVerdict adjugate_characterises_s(const Matrix& m);

}  // namespace imf
