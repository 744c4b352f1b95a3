#pragma once

#include <optional>

#include "imf/matrix.hpp"

namespace imf {

/// Unique decomposition M = a 1^T + 1 b^T + M0 + weight * E_n with
/// a, b orthogonal to 1 and M0 constant-sum of weight 0.
struct SVParts {
    Vec a;       // row-sum deviation vector
    Vec b;       // column-sum deviation vector
    Matrix m0;   // weightless constant-sum part
    Rat weight;  // mean of all entries

    std::size_t dim() const { return a.size(); }
};

/// Mean of all n^2 entries.
Rat weight(const Matrix& m);

/// Split a square matrix into its unique S+V parts. Orientation is fixed
/// throughout the library: the a vector comes from row sums and b from
/// column sums.
SVParts decompose(const Matrix& m);

/// Inverse of decompose; rejects parts violating the zero-sum invariants.
Matrix recompose(const SVParts& p);

/// If every row and column sum equals n*w for a common w, returns w.
std::optional<Rat> is_type_s(const Matrix& m);

/// Vertex cross sum property plus zero total entry sum.
bool is_type_v(const Matrix& m);

/// a 1^T + 1 b^T for a, b orthogonal to 1 (throws otherwise).
Matrix v_from_vectors(const Vec& a, const Vec& b);

/// Coefficients (descending degree, leading 1) of the characteristic
/// polynomial lambda^{n-2} (lambda^2 - n b^T a) of a 1^T + 1 b^T.
std::vector<Rat> v_char_poly(const Vec& a, const Vec& b);

/// tr(A^T B).
Rat frobenius_inner(const Matrix& a, const Matrix& b);

/// Convenience projections: the S part m0 + weight*E and the V part a1^T+1b^T.
Matrix s_part(const SVParts& p);
Matrix v_part(const SVParts& p);

}  // namespace imf
