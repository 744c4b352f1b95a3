#pragma once

#include <string>
#include <vector>

#include "imf/sv.hpp"

namespace imf {

enum class FormMode { Gram, Square };

/// Reduced integer quadratic equation whose integer solutions are necessary
/// for M = N^T N (Gram) or M = N^2 (Square). Variables are w = n^2 wt N and
/// x_1..x_{n-1} (= n^2 a_j with x_n eliminated via the zero-sum constraint);
/// Square mode adds y_1..y_{n-1} (= n^2 b_j).
///
/// The form is stored as integer monomial coefficients. (A single symmetric
/// integer matrix cannot represent the reduced form: after gcd reduction the
/// cross coefficients may be odd.)
struct ObstructionForm {
    std::size_t n = 0;
    FormMode mode = FormMode::Gram;
    Int target;                           // right-hand side after reduction
    Int gram_coeff;                       // coefficient of w^2
    std::vector<Int> diag;                // coefficient of x_i^2
    std::vector<std::vector<Int>> cross;  // cross[i][j] (i<j): coeff of x_i*x_j
    std::vector<std::vector<Int>> bilin;  // Square mode: coeff of x_i*y_j
    Rat scale_note = Rat(1);              // net factor dividing unreduced -> reduced
    bool satisfiable = true;              // Gram: false iff target < 0

    std::size_t free_vars() const { return n == 0 ? 0 : n - 1; }
};

struct ObstructionSolution {
    Int w;               // n^2 * wt N
    std::vector<Int> x;  // length n, with x_n = -sum of the others
    std::vector<Int> y;  // Square mode only, length n

    bool operator==(const ObstructionSolution& o) const = default;
};

/// Weight-balance equation for M = N^T N: n*w^2 + sum x_j^2 = n^4 wt M,
/// x_n eliminated, denominators cleared, divided by the common gcd.
/// Requires M square and symmetric. A negative target flags the form
/// unsatisfiable rather than erroring.
ObstructionForm weight_balance_gram(const Matrix& m);

/// Weight-balance equation for M = N^2: n*w^2 + sum x_j*y_j = n^4 wt M.
/// Indefinite in general; enumeration needs an explicit box.
ObstructionForm weight_balance_square(const Matrix& m);

/// All integer solutions of a positive definite Gram form with w >= 0, sorted
/// lexicographically by (w, x_1, ..., x_{n-1}). Since w enters squared, each
/// listed solution stands for the pair (w, x), (-w, x); listing only the
/// nonnegative representative matches the reference solution count.
/// threads = 0 means one worker per hardware thread; the result is identical
/// for any worker count.
std::vector<ObstructionSolution> solve_gram(const ObstructionForm& f, unsigned threads = 1);

/// All solutions of a Square-mode form with every variable in [-box, box].
std::vector<ObstructionSolution> solve_square(const ObstructionForm& f, const Int& box);

/// True iff the obstruction equation of M has at least one integer solution.
/// Gram mode enumerates fully; Square mode searches the given box only
/// (a semi-decision).
bool necessity_check(const Matrix& m, FormMode mode, const Int& box = Int(0));

/// Left-hand side value of the reduced equation at a solution tuple.
Int eval_form(const ObstructionForm& f, const ObstructionSolution& s);

/// Human-readable equation, e.g.
/// "2*w^2 + x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2 = 952".
std::string format_equation(const ObstructionForm& f);

}  // namespace imf
