#pragma once

#include "imf/obstruction.hpp"

namespace imf {

/// A factor N with N^T N = M, entries in (1/n^2) * integers.
struct FactorCandidate {
    Matrix n_matrix;
    ObstructionSolution source;
    bool is_integer = false;
};

struct SignedPermutation {
    std::vector<std::size_t> perm;  // row i of U*N is signs[i] * row perm[i] of N
    std::vector<int> signs;         // +1 / -1

    Matrix to_matrix() const;
};

struct EquivalenceClass {
    Matrix canonical;
    std::vector<Matrix> members;
};

struct SearchStatistics {
    std::size_t solution_count = 0;    // obstruction solutions enumerated
    std::size_t fertile_solutions = 0; // solutions yielding at least one factor
    std::size_t distinct_factors = 0;  // factors after exact deduplication
    std::size_t class_count = 0;
    double wall_seconds = 0.0;
};

/// Lift one obstruction solution to all factors N = a1^T + 1b^T + N0 + w_N E
/// with N^T N = M and entries in (1/n^2)Z. The weightless part N0 is found by
/// column backtracking over the integer-scaled quadratic matrix equation;
/// b then follows from y = N0^T a + n w_N b. For w = 0 that relation cannot
/// be solved for b, so the lift falls back to the backtracking oracle
/// filtered by the prescribed (w, a).
std::vector<FactorCandidate> reconstruct_gram(const Matrix& m, const ObstructionSolution& sol);

/// Independent oracle: all N with entries in (1/denominator)Z and N^T N = M,
/// reduced to one canonical representative per signed-permutation class,
/// sorted. Implemented as classical Gram backtracking on P^T P = d^2 M.
std::vector<Matrix> gram_backtrack_oracle(const Matrix& m, const Int& denominator);

/// Exactly one nonzero entry, equal to +-1, in every row and column.
bool is_signed_permutation(const Matrix& u);

/// Lexicographically least element (row-major, exact comparison) of
/// {U*N : U signed permutation}. Guarded to n <= 6.
Matrix canonical_form(const Matrix& n);

/// Group matrices by canonical form; classes sorted by representative.
std::vector<EquivalenceClass> classify(const std::vector<Matrix>& candidates);

/// End-to-end pipeline: obstruction form -> all solutions -> per-solution
/// reconstruction -> classification.
std::pair<std::vector<EquivalenceClass>, SearchStatistics> full_factor_search(
    const Matrix& m, unsigned threads = 1);

/// Row-major exact lexicographic comparison (shape first).
int lex_compare(const Matrix& a, const Matrix& b);

}  // namespace imf
