#include "imf/factor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

namespace imf {

namespace {

using ll = long long;

ll to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value exceeds word size");
    return v.get_si();
}

ll to_ll(const Rat& v) {
    if (v.get_den() != 1) throw std::invalid_argument("expected integer value");
    return to_ll(Int(v.get_num()));
}

ll isqrt_ll(ll v) {
    if (v < 0) return -1;
    ll r = static_cast<ll>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void for_each_signed_perm(std::size_t n, const std::function<void(
                              const std::vector<std::size_t>&, const std::vector<int>&)>& fn) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> signs(n, 1);
    do {
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
            fn(perm, signs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Matrix apply_signed_perm(const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                         const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = signs[i] > 0 ? m(perm[i], j) : Rat(-m(perm[i], j));
    return r;
}

// Zero-sum integer vectors c of length n with |c|^2 <= bound satisfying the
// per-column diagonal constraint of the scaled quadratic matrix equation.
struct ColumnCandidate {
    std::vector<ll> c;
    ll s;        // A . c
    ll norm_sq;  // |c|^2
};

struct ReconstructCtx {
    std::size_t n;
    ll w;                      // n^2 wt N, nonzero on this path
    std::vector<ll> a;         // n^2 a (length n)
    ll nw2;                    // n * w^2
    ll n2;                     // n^2
    ll scale;                  // common denominator multiplier D
    std::vector<ll> dy;        // D * n^2 * Y_j
    std::vector<std::vector<ll>> dr;  // D * R
    std::vector<ll> col_bound;        // floor(n^2 * (n^2 M0)_jj)
};

void enumerate_column(const ReconstructCtx& ctx, std::size_t j,
                      std::vector<ColumnCandidate>& out) {
    const std::size_t n = ctx.n;
    const ll bound = ctx.col_bound[j];
    if (bound < 0) return;
    std::vector<ll> c(n, 0);
    std::function<void(std::size_t, ll, ll)> rec = [&](std::size_t i, ll sum, ll norm) {
        if (i == n - 1) {
            const ll last = -sum;
            const ll total = norm + last * last;
            if (total > bound) return;
            c[n - 1] = last;
            ll s = 0;
            for (std::size_t k = 0; k < n; ++k) s += ctx.a[k] * c[k];
            // D*(s^2 + n w^2 |c|^2) - 2 (D n^2 Y_j) s = D R_jj
            if (ctx.scale * (s * s + ctx.nw2 * total) - 2 * ctx.dy[j] * s != ctx.dr[j][j])
                return;
            out.push_back(ColumnCandidate{c, s, total});
            return;
        }
        const ll r = isqrt_ll(bound - norm);
        for (ll v = -r; v <= r; ++v) {
            c[i] = v;
            rec(i + 1, sum + v, norm + v * v);
        }
    };
    rec(0, 0, 0);
}

bool pair_ok(const ReconstructCtx& ctx, const ColumnCandidate& ci, std::size_t i,
             const ColumnCandidate& cj, std::size_t j) {
    ll dotc = 0;
    for (std::size_t k = 0; k < ctx.n; ++k) dotc += ci.c[k] * cj.c[k];
    return ctx.scale * (ci.s * cj.s + ctx.nw2 * dotc) - (ci.s * ctx.dy[j] + ctx.dy[i] * cj.s) ==
           ctx.dr[i][j];
}

void validate_solution(const Matrix& m, const ObstructionSolution& sol) {
    const std::size_t n = m.rows();
    if (sol.x.size() != n)
        throw std::invalid_argument("reconstruct_gram: solution vector has wrong length");
    Int sum(0);
    for (const auto& v : sol.x) sum += v;
    if (sum != 0) throw std::invalid_argument("reconstruct_gram: solution x does not sum to 0");
    Rat lhs = Rat(static_cast<long>(n)) * Rat(sol.w) * Rat(sol.w);
    for (const auto& v : sol.x) lhs += Rat(v) * Rat(v);
    Rat n4(static_cast<long>(n));
    n4 = n4 * n4 * n4 * n4;
    if (lhs != n4 * weight(m))
        throw std::invalid_argument("reconstruct_gram: solution fails the obstruction equation");
}

void dedupe_matrices(std::vector<Matrix>& ms) {
    std::sort(ms.begin(), ms.end(),
              [](const Matrix& a, const Matrix& b) { return lex_compare(a, b) < 0; });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

// Shared worker; the zero-w path needs the oracle orbit, which callers may
// precompute once per matrix.
std::vector<FactorCandidate> reconstruct_impl(const Matrix& m, const ObstructionSolution& sol,
                                              const std::vector<Matrix>* zero_w_pool) {
    if (m != m.transpose())
        throw std::invalid_argument("reconstruct_gram: matrix not symmetric");
    validate_solution(m, sol);
    const std::size_t n = m.rows();
    const SVParts p = decompose(m);
    const Rat n2r(static_cast<long>(n * n));

    std::vector<Matrix> found;

    if (sol.w == 0) {
        // b cannot be isolated from y = N0^T a + n w_N b; search the oracle
        // orbit for factors whose decomposition matches the prescribed (0, a).
        std::vector<Matrix> pool;
        if (zero_w_pool == nullptr) {
            for (const auto& rep : gram_backtrack_oracle(m, Int(static_cast<long>(n * n))))
                for_each_signed_perm(n, [&](const auto& perm, const auto& signs) {
                    pool.push_back(apply_signed_perm(perm, signs, rep));
                });
        }
        const std::vector<Matrix>& candidates = zero_w_pool ? *zero_w_pool : pool;
        for (const auto& cand : candidates) {
            const SVParts q = decompose(cand);
            if (n2r * q.weight != 0) continue;
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i)
                match = Rat(n2r * q.a[i]) == Rat(sol.x[i]);
            if (match) found.push_back(cand);
        }
    } else {
        ReconstructCtx ctx;
        ctx.n = n;
        ctx.w = to_ll(sol.w);
        ctx.a.resize(n);
        for (std::size_t i = 0; i < n; ++i) ctx.a[i] = to_ll(sol.x[i]);
        ctx.nw2 = static_cast<ll>(n) * ctx.w * ctx.w;
        ctx.n2 = static_cast<ll>(n * n);

        // scaled data: Y = n^2 y, M0s = n^2 M0, R = n^3 w^2 M0s - n^4 Y Y^T
        std::vector<Rat> Y(n);
        for (std::size_t i = 0; i < n; ++i) Y[i] = n2r * p.a[i];
        Matrix M0s = n2r * p.m0;
        Matrix R(n, n);
        const Rat n3(static_cast<long>(n * n * n));
        const Rat n4 = n3 * Rat(static_cast<long>(n));
        const Rat w2 = Rat(sol.w) * Rat(sol.w);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                R(i, j) = n3 * w2 * M0s(i, j) - n4 * Y[i] * Y[j];

        Int D(1);
        auto lcm_den = [&](const Rat& v) {
            Int den = v.get_den(), g;
            mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
            D = D / g * den;
        };
        for (std::size_t i = 0; i < n; ++i) {
            lcm_den(n2r * Y[i]);
            for (std::size_t j = 0; j < n; ++j) lcm_den(R(i, j));
        }
        ctx.scale = to_ll(D);
        ctx.dy.resize(n);
        ctx.dr.assign(n, std::vector<ll>(n));
        const Rat Dr(D);
        for (std::size_t i = 0; i < n; ++i) {
            ctx.dy[i] = to_ll(Rat(Dr * n2r * Y[i]));
            for (std::size_t j = 0; j < n; ++j) ctx.dr[i][j] = to_ll(Rat(Dr * R(i, j)));
        }
        ctx.col_bound.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat b = n2r * M0s(j, j);
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
            ctx.col_bound[j] = to_ll(fl);
        }

        std::vector<std::vector<ColumnCandidate>> cand(n);
        for (std::size_t j = 0; j + 1 < n; ++j) enumerate_column(ctx, j, cand[j]);

        // backtrack over the n-1 free columns; the last column closes the row sums
        std::vector<const ColumnCandidate*> chosen(n - 1, nullptr);
        std::function<void(std::size_t)> dfs = [&](std::size_t j) {
            if (j == n - 1) {
                ColumnCandidate last;
                last.c.assign(n, 0);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t i = 0; i + 1 < n; ++i) last.c[k] -= chosen[i]->c[k];
                last.s = 0;
                last.norm_sq = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    last.s += ctx.a[k] * last.c[k];
                    last.norm_sq += last.c[k] * last.c[k];
                }
                if (ctx.col_bound[n - 1] < 0 || last.norm_sq > ctx.col_bound[n - 1]) return;
                if (ctx.scale * (last.s * last.s + ctx.nw2 * last.norm_sq) -
                        2 * ctx.dy[n - 1] * last.s != ctx.dr[n - 1][n - 1])
                    return;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    if (!pair_ok(ctx, *chosen[i], i, last, n - 1)) return;

                // b from y = N0^T a + n w_N b: n^2 b = (n^2 Y - P^T A)/(n w)
                const Rat nw = Rat(static_cast<long>(n)) * Rat(sol.w);
                Vec bs(n);
                Rat bsum(0);
                auto col_s = [&](std::size_t jj) {
                    return jj + 1 < n ? chosen[jj]->s : last.s;
                };
                for (std::size_t jj = 0; jj < n; ++jj) {
                    bs[jj] = (n2r * Y[jj] - Rat(static_cast<long>(col_s(jj)))) / nw;
                    if (!is_integer(bs[jj])) return;
                    bsum += bs[jj];
                }
                if (bsum != 0) return;

                // N = (A 1^T + 1 B^T + P + w E) / n^2
                Matrix N(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t jj = 0; jj < n; ++jj) {
                        const ll pij = jj + 1 < n ? chosen[jj]->c[i] : last.c[i];
                        N(i, jj) = (Rat(static_cast<long>(ctx.a[i])) + bs[jj] + Rat(static_cast<long>(pij)) + Rat(sol.w)) / n2r;
                    }
                if (N.transpose() * N == m) found.push_back(N);
                return;
            }
            for (const auto& c : cand[j]) {
                bool ok = true;
                for (std::size_t i = 0; i < j && ok; ++i) ok = pair_ok(ctx, *chosen[i], i, c, j);
                if (!ok) continue;
                chosen[j] = &c;
                dfs(j + 1);
            }
        };
        dfs(0);
    }

    dedupe_matrices(found);
    std::vector<FactorCandidate> out;
    out.reserve(found.size());
    for (auto& f : found) {
        bool integral = true;
        for (const auto& e : f.entries())
            if (!is_integer(e)) {
                integral = false;
                break;
            }
        out.push_back(FactorCandidate{std::move(f), sol, integral});
    }
    return out;
}

}  // namespace

Matrix SignedPermutation::to_matrix() const {
    const std::size_t n = perm.size();
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) u(i, perm[i]) = signs[i];
    return u;
}

std::vector<FactorCandidate> reconstruct_gram(const Matrix& m, const ObstructionSolution& sol) {
    return reconstruct_impl(m, sol, nullptr);
}

std::vector<Matrix> gram_backtrack_oracle(const Matrix& m, const Int& denominator) {
    if (m != m.transpose())
        throw std::invalid_argument("gram_backtrack_oracle: matrix not symmetric");
    if (denominator <= 0)
        throw std::invalid_argument("gram_backtrack_oracle: denominator must be positive");
    const std::size_t n = m.rows();
    const Rat d2(denominator * denominator);

    std::vector<std::vector<ll>> g(n, std::vector<ll>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat e = d2 * m(i, j);
            if (!is_integer(e)) return {};
            g[i][j] = to_ll(e);
            if (i == j && g[i][j] < 0) return {};
        }

    // vectors of each required exact norm, cached per norm value
    std::map<ll, std::vector<std::vector<ll>>> by_norm;
    for (std::size_t j = 0; j < n; ++j) {
        const ll target = g[j][j];
        if (by_norm.count(target)) continue;
        auto& list = by_norm[target];
        std::vector<ll> c(n, 0);
        std::function<void(std::size_t, ll)> rec = [&](std::size_t i, ll rem) {
            if (i == n - 1) {
                const ll r = isqrt_ll(rem);
                if (r * r != rem) return;
                c[n - 1] = r;
                list.push_back(c);
                if (r != 0) {
                    c[n - 1] = -r;
                    list.push_back(c);
                }
                return;
            }
            const ll r = isqrt_ll(rem);
            for (ll v = -r; v <= r; ++v) {
                c[i] = v;
                rec(i + 1, rem - v * v);
            }
        };
        rec(0, target);
        std::sort(list.begin(), list.end());
    }

    std::vector<Matrix> all;
    std::vector<const std::vector<ll>*> cols(n, nullptr);
    std::function<void(std::size_t)> dfs = [&](std::size_t j) {
        if (j == n) {
            Matrix N(n, n);
            const Rat dr(denominator);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t jj = 0; jj < n; ++jj) N(i, jj) = Rat(static_cast<long>((*cols[jj])[i])) / dr;
            all.push_back(std::move(N));
            return;
        }
        for (const auto& c : by_norm[g[j][j]]) {
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i) {
                ll dotp = 0;
                for (std::size_t k = 0; k < n; ++k) dotp += (*cols[i])[k] * c[k];
                ok = dotp == g[i][j];
            }
            if (!ok) continue;
            cols[j] = &c;
            dfs(j + 1);
        }
    };
    dfs(0);

    std::vector<Matrix> reps;
    reps.reserve(all.size());
    for (const auto& N : all) reps.push_back(canonical_form(N));
    dedupe_matrices(reps);
    return reps;
}

bool is_signed_permutation(const Matrix& u) {
    if (!u.square()) return false;
    const std::size_t n = u.rows();
    std::vector<int> col_used(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nonzero = 0, at = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (u(i, j) != 0) {
                ++nonzero;
                at = j;
            }
        if (nonzero != 1 || (u(i, at) != 1 && u(i, at) != -1)) return false;
        if (col_used[at]++) return false;
    }
    return true;
}

int lex_compare(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        int c = cmp(a.entries()[k], b.entries()[k]);
        if (c != 0) return c;
    }
    return 0;
}

Matrix canonical_form(const Matrix& n) {
    if (!n.square()) throw DimensionError("canonical_form: matrix not square");
    if (n.rows() > 6)
        throw std::invalid_argument("canonical_form: dimension guard n <= 6 exceeded");
    std::optional<Matrix> best;
    for_each_signed_perm(n.rows(), [&](const auto& perm, const auto& signs) {
        Matrix cand = apply_signed_perm(perm, signs, n);
        if (!best || lex_compare(cand, *best) < 0) best = std::move(cand);
    });
    return *best;
}

std::vector<EquivalenceClass> classify(const std::vector<Matrix>& candidates) {
    for (const auto& c : candidates)
        if (c.rows() != candidates.front().rows() || !c.square())
            throw DimensionError("classify: mixed dimensions");
    std::vector<EquivalenceClass> classes;
    for (const auto& c : candidates) {
        Matrix canon = canonical_form(c);
        auto it = std::find_if(classes.begin(), classes.end(), [&](const EquivalenceClass& e) {
            return lex_compare(e.canonical, canon) == 0;
        });
        if (it == classes.end())
            classes.push_back(EquivalenceClass{std::move(canon), {c}});
        else
            it->members.push_back(c);
    }
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
        return lex_compare(x.canonical, y.canonical) < 0;
    });
    return classes;
}

std::pair<std::vector<EquivalenceClass>, SearchStatistics> full_factor_search(const Matrix& m,
                                                                              unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchStatistics stats;

    ObstructionForm f = weight_balance_gram(m);
    std::vector<ObstructionSolution> sols =
        f.satisfiable ? solve_gram(f, threads) : std::vector<ObstructionSolution>{};
    stats.solution_count = sols.size();

    // the w = 0 lifts all share one oracle orbit; build it once if needed
    std::optional<std::vector<Matrix>> zero_pool;
    if (std::any_of(sols.begin(), sols.end(), [](const auto& s) { return s.w == 0; })) {
        zero_pool.emplace();
        const std::size_t n = m.rows();
        for (const auto& rep : gram_backtrack_oracle(m, Int(static_cast<long>(n * n))))
            for_each_signed_perm(n, [&](const auto& perm, const auto& signs) {
                zero_pool->push_back(apply_signed_perm(perm, signs, rep));
            });
    }
    const std::vector<Matrix>* pool = zero_pool ? &*zero_pool : nullptr;

    std::vector<std::vector<FactorCandidate>> per_sol(sols.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || sols.size() < 2) {
        for (std::size_t i = 0; i < sols.size(); ++i)
            per_sol[i] = reconstruct_impl(m, sols[i], pool);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < sols.size(); i += threads)
                    per_sol[i] = reconstruct_impl(m, sols[i], pool);
            });
        for (auto& w : workers) w.join();
    }

    std::vector<Matrix> factors;
    for (const auto& fs : per_sol) {
        if (!fs.empty()) ++stats.fertile_solutions;
        for (const auto& fc : fs) factors.push_back(fc.n_matrix);
    }
    dedupe_matrices(factors);
    stats.distinct_factors = factors.size();

    auto classes = classify(factors);
    stats.class_count = classes.size();
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(classes), stats};
}

}  // namespace imf
