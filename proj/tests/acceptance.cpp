// Acceptance sweep: one pass/fail line per criterion, nonzero exit on any
// failure. The factor-search criterion dominates the runtime.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "common.hpp"
#include "imf/detident.hpp"
#include "imf/factor.hpp"
#include "imf/latin.hpp"
#include "imf/obstruction.hpp"

using namespace imf;
using namespace imf::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double seconds = -1.0) {
    if (seconds >= 0)
        std::printf("%s  criterion %2d: %s (%.3fs)\n", ok ? "PASS" : "FAIL", idx, name,
                    seconds);
    else
        std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, name);
    std::fflush(stdout);
    if (!ok) ++failures;
}

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ObstructionSolution gram_sol(long w, long x1, long x2, long x3) {
    return {Int(w), {Int(x1), Int(x2), Int(x3), Int(-x1 - x2 - x3)}, {}};
}

Vec v16(long a, long b, long c, long d) {
    return {frac(a, 16), frac(b, 16), frac(c, 16), frac(d, 16)};
}

}  // namespace

int main() {
    const Matrix w = wilson();

    // 1: exact decomposition of the Wilson matrix, sub-millisecond.
    {
        auto start = Clock::now();
        constexpr int reps = 100;
        SVParts p;
        for (int i = 0; i < reps; ++i) p = decompose(w);
        double per_call = elapsed(start) / reps;
        bool ok = p.a == v16(-27, 9, 13, 5) && p.b == p.a &&
                  p.weight == frac(119, 16) && p.m0 == w_zero() && per_call < 1e-3;
        report(1, "Wilson decomposition, exact and < 1 ms", ok, per_call);
    }

    // 2: the reduced obstruction equation, byte for byte.
    {
        auto start = Clock::now();
        std::string eq = format_equation(weight_balance_gram(w));
        double secs = elapsed(start);
        bool ok = eq == "2*w^2 + x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2 = 952" &&
                  secs < 1e-3;
        report(2, "obstruction equation text, exact and < 1 ms", ok, secs);
    }

    // 3: all 1728 solutions, single-threaded, within 10 s.
    std::vector<ObstructionSolution> sols;
    {
        auto start = Clock::now();
        sols = solve_gram(weight_balance_gram(w), 1);
        double secs = elapsed(start);
        auto has = [&](long a, long b, long c, long d) {
            return std::find(sols.begin(), sols.end(), gram_sol(a, b, c, d)) != sols.end();
        };
        bool ok = sols.size() == 1728 && has(19, 17, 1, -7) && has(18, -8, 20, -12) &&
                  has(19, 11, 7, -1) && secs <= 10.0;
        report(3, "1728 obstruction solutions incl. the three named", ok, secs);
    }

    // 4: fast subset first, then the full fertility sweep.
    {
        bool subset_ok = true;
        for (const auto& s : {gram_sol(19, 17, 1, -7), gram_sol(18, -8, 20, -12),
                              gram_sol(19, 11, 7, -1)}) {
            auto cands = reconstruct_gram(w, s);
            subset_ok = subset_ok && !cands.empty();
            for (const auto& c : cands) {
                subset_ok = subset_ok && c.n_matrix.transpose() * c.n_matrix == w;
                for (const auto& e : c.n_matrix.entries())
                    subset_ok = subset_ok && is_integer(Rat(16) * e);
            }
        }
        report(4, "fast subset: three named solutions are fertile", subset_ok);
    }
    std::vector<EquivalenceClass> classes;
    {
        auto start = Clock::now();
        auto [cls, stats] = full_factor_search(w, 0);
        classes = cls;
        double secs = elapsed(start);
        bool ok = stats.solution_count == 1728 && stats.fertile_solutions == 576 &&
                  secs <= 1800.0;
        report(4, "576 of 1728 solutions are fertile (full sweep)", ok, secs);
    }

    // 5: the three equivalence classes are exactly those of the three factors.
    {
        std::vector<Matrix> want = {canonical_form(z_factor()), canonical_form(z_prime()),
                                    canonical_form(z_double_prime())};
        std::sort(want.begin(), want.end(),
                  [](const Matrix& a, const Matrix& b) { return lex_compare(a, b) < 0; });
        std::vector<Matrix> got;
        for (const auto& c : classes) got.push_back(c.canonical);
        std::sort(got.begin(), got.end(),
                  [](const Matrix& a, const Matrix& b) { return lex_compare(a, b) < 0; });
        report(5, "three classes with the expected canonical forms", got == want);
    }

    // 6: integer factorisations form a single class.
    {
        auto start = Clock::now();
        auto integer_classes = gram_backtrack_oracle(w, Int(1));
        bool ok = integer_classes.size() == 1 &&
                  integer_classes[0] == canonical_form(z_factor());
        report(6, "integer factor class is unique and equals the known one", ok,
               elapsed(start));
    }

    // 7: adjugate and determinant fixtures.
    {
        bool ok = adj_weightless_s(w_zero()) == frac(3, 8) &&
                  det_via_weight(w_s()) == frac(357, 8) && det(w) == 1;
        report(7, "adjugate 3/8, constant-sum det 357/8, det 1", ok);
    }

    // 8: x^T W x as a sum of four squares of linear forms, 1000 random points.
    {
        const std::vector<Vec> forms = {{Rat(0), Rat(0), Rat(1), Rat(1)},
                                        {Rat(0), Rat(0), Rat(1), Rat(2)},
                                        {Rat(1), Rat(1), Rat(2), Rat(1)},
                                        {Rat(2), Rat(3), Rat(2), Rat(2)}};
        std::mt19937 rng(101);
        std::uniform_int_distribution<long> d(-50, 50);
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t) {
            Vec x{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
            Rat quad = dot(x, w * x);
            Rat ssq(0);
            for (const auto& f : forms) {
                Rat v = dot(f, x);
                ssq += v * v;
            }
            ok = quad == ssq;
        }
        report(8, "sum-of-four-squares identity at 1000 random points", ok);
    }

    // 9: the quadratic form represents every integer 1..100.
    {
        auto start = Clock::now();
        Matrix z = z_factor();
        Matrix z_inv = adjugate(z);  // det(Z) = 1
        bool ok = det(z) == 1;
        for (long target = 1; target <= 100 && ok; ++target) {
            bool found = false;
            // Four-square representation of the target, then pull back through
            // the unimodular factor: x = Z^{-1} y gives x^T W x = |y|^2.
            for (long y1 = 0; y1 * y1 <= target && !found; ++y1)
                for (long y2 = y1; y1 * y1 + y2 * y2 <= target && !found; ++y2)
                    for (long y3 = y2; y1 * y1 + y2 * y2 + y3 * y3 <= target && !found;
                         ++y3) {
                        long rest = target - y1 * y1 - y2 * y2 - y3 * y3;
                        long y4 = static_cast<long>(floor_sqrt(Int(rest)).get_si());
                        if (y4 * y4 != rest) continue;
                        Vec y{Rat(y1), Rat(y2), Rat(y3), Rat(y4)};
                        Vec x = z_inv * y;
                        found = dot(x, w * x) == Rat(target);
                    }
            ok = found;
        }
        double secs = elapsed(start);
        report(9, "form represents every integer in 1..100", ok && secs <= 60.0, secs);
    }

    // 10: the co-Latin fixture via all 24 transversals.
    {
        Matrix zv = v_from_vectors(v16(17, 1, -7, -11), v16(-7, -3, 5, 5));
        report(10, "co-Latin check over all 24 transversals", colatin_check(zv));
    }

    // 11: the universal-identity property suites.
    {
        auto start = Clock::now();
        bool ok = true;
        std::mt19937 rng(103);

        // Superalgebra closure and Frobenius orthogonality.
        for (int t = 0; t < 25 && ok; ++t) {
            std::size_t n = 2 + t % 4;
            Matrix m = random_int_matrix(rng, n, -5, 5);
            auto p = decompose(m);
            ok = ok && frobenius_inner(s_part(p), v_part(p)) == 0;
            auto s1 = s_part(p), u1 = v_part(p);
            auto q = decompose(random_int_matrix(rng, n, -5, 5));
            auto s2 = s_part(q), u2 = v_part(q);
            ok = ok && v_part(decompose(s1 * s2)) == Matrix::zero(n);
            ok = ok && s_part(decompose(s1 * u2)) == Matrix::zero(n);
            ok = ok && s_part(decompose(u1 * s2)) == Matrix::zero(n);
            ok = ok && v_part(decompose(u1 * u2)) == Matrix::zero(n);
            // Integrality of the scaled deviation vectors for integer input.
            Rat n2(static_cast<long>(n * n));
            for (std::size_t i = 0; i < n; ++i)
                ok = ok && is_integer(n2 * p.a[i]) && is_integer(n2 * p.b[i]);
        }

        // Obstruction soundness on 200 random factors.
        for (int t = 0; t < 200 && ok; ++t) {
            std::size_t n = 2 + t % 4;
            Matrix nn = random_int_matrix(rng, n, -4, 4);
            auto p = decompose(nn);
            Rat n2(static_cast<long>(n * n));
            ObstructionSolution s;
            s.w = Int(Rat(n2 * p.weight).get_num());
            for (std::size_t j = 0; j < n; ++j)
                s.x.push_back(Int(Rat(n2 * p.a[j]).get_num()));
            auto f = weight_balance_gram(nn.transpose() * nn);
            ok = eval_form(f, s) == f.target;
        }

        // Determinant identities, 50 random matrices each.
        std::uniform_int_distribution<long> d(-5, 5);
        for (int t = 0; t < 50 && ok; ++t) {
            std::size_t n = 2 + t % 4;
            Matrix m = random_rational_matrix(rng, n);
            Vec u(n), v(n);
            for (std::size_t i = 0; i < n; ++i) {
                u[i] = d(rng);
                v[i] = frac(d(rng), 2);
            }
            ok = ok && det_rank1_update(m, u, v) == det(m + Matrix::outer(u, v));
            ok = ok && det_via_decomposition(m) == det(m);
            Matrix s = s_part(decompose(random_int_matrix(rng, n, -5, 5)));
            ok = ok && det_via_weight(s) == det(s);
        }

        // Adjugate characterisation, both directions.
        for (int t = 0; t < 50 && ok; ++t) {
            std::size_t n = 2 + t % 4;
            Matrix m0 = decompose(random_int_matrix(rng, n, -5, 5)).m0;
            Rat aw = adj_weightless_s(m0);
            ok = ok && adjugate(m0) == aw * Matrix::ones(n);
            auto verdict = adjugate_characterises_s(m0);
            ok = ok && verdict.constant_adjugate && !verdict.counterexample;
            if (aw != 0)
                ok = ok && verdict.weightless_s && verdict.rank == n - 1;
        }

        // Co-Latin fast/slow agreement on 100 matrices.
        for (int t = 0; t < 100 && ok; ++t) {
            std::size_t n = 2 + t % 4;
            Matrix m = random_int_matrix(rng, n, -3, 3);
            if (t % 2) m = v_part(decompose(m));
            ok = colatin_check(m) == colatin_check_fast(m);
        }

        // Latin generators for all supported orders up to 12.
        for (std::size_t n = 1; n <= 12 && ok; ++n) {
            ok = ok && is_latin(hankel_latin(n).cells);
            if (n == 1 || n == 3) continue;
            auto l = corner_latin(n);
            ok = ok && is_latin(l.cells) && l.cells[0][0] == 1 && l.cells[1][1] == 1 &&
                 l.cells[0][1] == 2 && l.cells[1][0] == 2;
        }

        // Corner impossibility at order 3.
        {
            bool threw = false;
            try {
                corner_latin(3);
            } catch (const std::invalid_argument&) {
                threw = true;
            }
            ok = ok && threw;
            for (const auto& l : all_latin_squares(3))
                ok = ok && !(l.cells[0][0] == 1 && l.cells[1][1] == 1 &&
                             l.cells[0][1] == 2 && l.cells[1][0] == 2);
        }

        double secs = elapsed(start);
        report(11, "universal-identity property suites", ok && secs <= 300.0, secs);
    }

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
