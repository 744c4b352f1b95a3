#include "imf/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace imf {

namespace {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Shared construction: n*w^2 + <quadratic or bilinear part> = n^4 wt M,
// denominators cleared and divided by the overall gcd.
ObstructionForm build(const Matrix& m, FormMode mode) {
    if (!m.square()) throw DimensionError("weight_balance: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw DimensionError("weight_balance: empty matrix");
    if (mode == FormMode::Gram && m != m.transpose())
        throw std::invalid_argument("weight_balance_gram: matrix not symmetric");

    Rat target_rat = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n)) *
                     Rat(static_cast<long>(n)) * Rat(static_cast<long>(n)) * weight(m);
    const Int den = target_rat.get_den();

    ObstructionForm f;
    f.n = n;
    f.mode = mode;
    f.target = target_rat.get_num();
    f.gram_coeff = Int(static_cast<long>(n)) * den;
    const std::size_t fv = n - 1;
    if (mode == FormMode::Gram) {
        // sum_{j<=n} x_j^2 with x_n = -sum(x_j): diag coeff 2, cross coeff 2
        f.diag.assign(fv, Int(2) * den);
        f.cross.assign(fv, std::vector<Int>(fv, Int(0)));
        for (std::size_t i = 0; i < fv; ++i)
            for (std::size_t j = i + 1; j < fv; ++j) f.cross[i][j] = Int(2) * den;
    } else {
        // sum_{j<=n} x_j y_j with both tails eliminated: I + E on the free vars
        f.bilin.assign(fv, std::vector<Int>(fv, den));
        for (std::size_t i = 0; i < fv; ++i) f.bilin[i][i] = Int(2) * den;
    }

    Int g = gcd(f.target, f.gram_coeff);
    for (std::size_t i = 0; i < fv; ++i) {
        if (mode == FormMode::Gram) {
            g = gcd(g, f.diag[i]);
            for (std::size_t j = i + 1; j < fv; ++j) g = gcd(g, f.cross[i][j]);
        } else {
            for (std::size_t j = 0; j < fv; ++j) g = gcd(g, f.bilin[i][j]);
        }
    }
    if (g == 0) g = 1;
    f.target /= g;
    f.gram_coeff /= g;
    for (std::size_t i = 0; i < fv; ++i) {
        if (mode == FormMode::Gram) {
            f.diag[i] /= g;
            for (std::size_t j = i + 1; j < fv; ++j) f.cross[i][j] /= g;
        } else {
            for (std::size_t j = 0; j < fv; ++j) f.bilin[i][j] /= g;
        }
    }
    f.scale_note = frac(g, den);
    f.satisfiable = mode == FormMode::Square || f.target >= 0;
    return f;
}

// Rational LDL^T of the positive definite form matrix (Q_ii = diag[i],
// Q_ij = cross[i][j]/2). Returns false if any pivot is <= 0.
bool ldl(const ObstructionForm& f, std::vector<Rat>& d, std::vector<std::vector<Rat>>& u) {
    const std::size_t m = f.free_vars();
    d.assign(m, Rat(0));
    u.assign(m, std::vector<Rat>(m, Rat(0)));
    auto q = [&](std::size_t i, std::size_t j) -> Rat {
        if (i == j) return Rat(f.diag[i]);
        if (i > j) std::swap(i, j);
        return Rat(f.cross[i][j]) / 2;
    };
    for (std::size_t i = 0; i < m; ++i) {
        Rat di = q(i, i);
        for (std::size_t k = 0; k < i; ++k) di -= d[k] * u[k][i] * u[k][i];
        if (di <= 0) return false;
        d[i] = di;
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat uij = q(i, j);
            for (std::size_t k = 0; k < i; ++k) uij -= d[k] * u[k][i] * u[k][j];
            u[i][j] = uij / di;
        }
    }
    return true;
}

void append_full_x(const ObstructionForm& f, std::vector<Int> free_x,
                   const Int& w, std::vector<ObstructionSolution>& out) {
    Int last(0);
    for (const auto& v : free_x) last -= v;
    free_x.push_back(last);
    out.push_back(ObstructionSolution{w, std::move(free_x), {}});
}

// Fincke-Pohst style enumeration of q(x) = t over the LDL factorisation.
void enumerate_level(const ObstructionForm& f, const std::vector<Rat>& d,
                     const std::vector<std::vector<Rat>>& u, std::size_t level,
                     const Rat& rem, std::vector<Int>& x, const Int& w,
                     std::vector<ObstructionSolution>& out) {
    const std::size_t m = f.free_vars();
    if (level == std::size_t(-1)) {  // all variables fixed
        if (rem == 0) {
            std::vector<Int> free_x(x.begin(), x.end());
            append_full_x(f, std::move(free_x), w, out);
        }
        return;
    }
    Rat c(0);
    for (std::size_t j = level + 1; j < m; ++j) c += u[level][j] * Rat(x[j]);
    if (rem < 0) return;
    const Rat bound = rem / d[level];
    Int lo = ceil_center_minus_sqrt(-c, bound);
    Int hi = floor_center_plus_sqrt(-c, bound);
    for (Int v = lo; v <= hi; ++v) {
        x[level] = v;
        Rat term = Rat(v) + c;
        enumerate_level(f, d, u, level - 1, rem - d[level] * term * term, x, w, out);
    }
}

void solve_gram_for_w(const ObstructionForm& f, const std::vector<Rat>& d,
                      const std::vector<std::vector<Rat>>& u, const Int& w,
                      std::vector<ObstructionSolution>& out) {
    Rat rem = Rat(f.target) - Rat(f.gram_coeff) * Rat(w) * Rat(w);
    if (rem < 0) return;
    const std::size_t m = f.free_vars();
    if (m == 0) {
        if (rem == 0) append_full_x(f, {}, w, out);
        return;
    }
    std::vector<Int> x(m, Int(0));
    enumerate_level(f, d, u, m - 1, rem, x, w, out);
}

bool lex_less(const ObstructionSolution& a, const ObstructionSolution& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

}  // namespace

ObstructionForm weight_balance_gram(const Matrix& m) { return build(m, FormMode::Gram); }
ObstructionForm weight_balance_square(const Matrix& m) { return build(m, FormMode::Square); }

std::vector<ObstructionSolution> solve_gram(const ObstructionForm& f, unsigned threads) {
    if (f.mode != FormMode::Gram)
        throw std::invalid_argument("solve_gram: form is not Gram mode");
    std::vector<ObstructionSolution> out;
    if (!f.satisfiable) return out;

    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;
    if (f.free_vars() > 0 && !ldl(f, d, u))
        throw std::invalid_argument("solve_gram: form matrix not positive definite");

    const Int wmax = floor_center_plus_sqrt(Rat(0), Rat(f.target) / Rat(f.gram_coeff));
    // w enters squared, so (-w, x) solves whenever (w, x) does; only the
    // nonnegative-w representative of each pair is listed. This is the
    // counting convention that reproduces the reference solution count.
    std::vector<Int> ws;
    for (Int w = wmax; w >= 0; --w) ws.push_back(w);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(ws.size(), 1));
    if (threads <= 1 || ws.size() < 2) {
        for (const auto& w : ws) solve_gram_for_w(f, d, u, w, out);
    } else {
        std::vector<std::vector<ObstructionSolution>> parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < ws.size(); i += threads)
                    solve_gram_for_w(f, d, u, ws[i], parts[t]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            out.insert(out.end(), std::make_move_iterator(p.begin()),
                       std::make_move_iterator(p.end()));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<ObstructionSolution> solve_square(const ObstructionForm& f, const Int& box) {
    if (f.mode != FormMode::Square)
        throw std::invalid_argument("solve_square: form is not Square mode");
    if (box < 0) throw std::invalid_argument("solve_square: negative box");
    const std::size_t m = f.free_vars();
    std::vector<ObstructionSolution> out;
    std::vector<Int> xs(m, Int(0)), ys(m, Int(0));

    // brute force over the box; the form is indefinite so no better bound exists
    auto check = [&](const Int& w) {
        Int lhs = f.gram_coeff * w * w;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) lhs += f.bilin[i][j] * xs[i] * ys[j];
        if (lhs != f.target) return;
        std::vector<Int> x(xs), y(ys);
        Int lx(0), ly(0);
        for (std::size_t i = 0; i < m; ++i) {
            lx -= x[i];
            ly -= y[i];
        }
        x.push_back(lx);
        y.push_back(ly);
        out.push_back(ObstructionSolution{w, std::move(x), std::move(y)});
    };
    // iterate w, then all x entries, then all y entries
    std::function<void(std::size_t, const Int&)> rec = [&](std::size_t idx, const Int& w) {
        if (idx == 2 * m) {
            check(w);
            return;
        }
        auto& slot = idx < m ? xs[idx] : ys[idx - m];
        for (Int v = -box; v <= box; ++v) {
            slot = v;
            rec(idx + 1, w);
        }
    };
    for (Int w = -box; w <= box; ++w) rec(0, w);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool necessity_check(const Matrix& m, FormMode mode, const Int& box) {
    if (mode == FormMode::Gram) {
        ObstructionForm f = weight_balance_gram(m);
        if (!f.satisfiable) return false;
        return !solve_gram(f).empty();
    }
    ObstructionForm f = weight_balance_square(m);
    return !solve_square(f, box).empty();
}

Int eval_form(const ObstructionForm& f, const ObstructionSolution& s) {
    const std::size_t m = f.free_vars();
    Int lhs = f.gram_coeff * s.w * s.w;
    if (f.mode == FormMode::Gram) {
        for (std::size_t i = 0; i < m; ++i) {
            lhs += f.diag[i] * s.x[i] * s.x[i];
            for (std::size_t j = i + 1; j < m; ++j) lhs += f.cross[i][j] * s.x[i] * s.x[j];
        }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) lhs += f.bilin[i][j] * s.x[i] * s.y[j];
    }
    return lhs;
}

std::string format_equation(const ObstructionForm& f) {
    std::string eq;
    auto term = [&](const Int& coeff, const std::string& mono) {
        if (coeff == 0) return;
        if (!eq.empty()) eq += " + ";
        if (coeff != 1) eq += coeff.get_str() + "*";
        eq += mono;
    };
    term(f.gram_coeff, "w^2");
    const std::size_t m = f.free_vars();
    auto var = [](const char* base, std::size_t i) {
        return std::string(base) + std::to_string(i + 1);
    };
    if (f.mode == FormMode::Gram) {
        for (std::size_t i = 0; i < m; ++i) {
            term(f.diag[i], var("x", i) + "^2");
            for (std::size_t j = i + 1; j < m; ++j)
                term(f.cross[i][j], var("x", i) + "*" + var("x", j));
        }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                term(f.bilin[i][j], var("x", i) + "*" + var("y", j));
    }
    if (eq.empty()) eq = "0";
    return eq + " = " + f.target.get_str();
}

}  // namespace imf
