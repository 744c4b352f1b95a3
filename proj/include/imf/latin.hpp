#pragma once

#include <cstdint>

#include "imf/sv.hpp"

namespace imf {

/// n x n grid over symbols 1..n, each exactly once per row and column.
struct LatinSquare {
    std::size_t n = 0;
    std::vector<std::vector<int>> cells;  // 1-based symbols
};

/// Permutation-shaped cell selection: row p selects column mapping[p].
struct Transversal {
    std::vector<std::size_t> mapping;
};

/// The Hankel Latin square with entry 1 + ((i+j-2) mod m).
LatinSquare hankel_latin(std::size_t m);

/// A Latin square with corner pattern [[1,2],[2,1]]; defined for n not in
/// {1,3}. Even n doubles the Hankel square into 2x2 blocks; odd n tries the
/// modified-antidiagonal construction and, when that fails validation (the
/// construction as printed is not reliable), completes the fixed corner by
/// backtracking.
LatinSquare corner_latin(std::size_t n);

/// Row/column distinctness over 1..n; out-of-range symbols make it false.
bool is_latin(const std::vector<std::vector<int>>& cells);

/// Cells carrying symbol k, as a transversal (row -> column).
Transversal symbol_positions(const LatinSquare& l, int k);

/// Definition-level co-Latin check: every permutation transversal of M sums
/// to zero. Each symbol class of a Latin square is a transversal, and any
/// single transversal extends to a Latin square, so quantifying over all n!
/// transversals is equivalent to quantifying over all Latin squares.
/// Guarded to n <= 7.
bool colatin_check(const Matrix& m);

/// Equivalent check through the decomposition: M is co-Latin iff its
/// weightless constant-sum part and weight both vanish.
bool colatin_check_fast(const Matrix& m);

/// All Latin squares of order n by backtracking (test support; n <= 5 is
/// practical).
std::vector<LatinSquare> all_latin_squares(std::size_t n);

}  // namespace imf
