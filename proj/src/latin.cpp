#include "imf/latin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace imf {

LatinSquare hankel_latin(std::size_t m) {
    if (m == 0) throw std::invalid_argument("hankel_latin: order must be positive");
    LatinSquare l{m, std::vector<std::vector<int>>(m, std::vector<int>(m))};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            l.cells[i][j] = static_cast<int>(1 + (i + j) % m);
    return l;
}

bool is_latin(const std::vector<std::vector<int>>& cells) {
    const std::size_t n = cells.size();
    if (n == 0) return false;
    for (const auto& row : cells)
        if (row.size() != n) return false;
    std::vector<bool> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < n; ++j) {
            const int s = cells[i][j];
            if (s < 1 || s > static_cast<int>(n) || seen[s - 1]) return false;
            seen[s - 1] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < n; ++j) {
            const int s = cells[j][i];
            if (s < 1 || s > static_cast<int>(n) || seen[s - 1]) return false;
            seen[s - 1] = true;
        }
    }
    return true;
}

namespace {

// Literal reading of the odd-order modified-antidiagonal construction:
// Hankel fill with the 2x2 corner fixed, three replaced antidiagonals below
// the main one. Output must be validated; the source description does not
// produce a Latin square for all odd orders.
LatinSquare odd_construction_attempt(std::size_t n) {
    LatinSquare l = hankel_latin(n);
    l.cells[1][1] = 1;
    auto fill_antidiag = [&](std::size_t k, const std::vector<int>& seq) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (k < i || k - i >= n) continue;
            l.cells[i][k - i] = seq[idx++];
        }
    };
    // k = n: 3 1 2 1 2 ... 1 2 3 (n-1 cells)
    {
        std::vector<int> seq(n - 1);
        seq.front() = 3;
        seq.back() = 3;
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) seq[i] = i % 2 == 1 ? 1 : 2;
        fill_antidiag(n, seq);
    }
    // k = n+1: 2 3 3 ... 3 1 (n-2 cells)
    {
        std::vector<int> seq(n - 2, 3);
        seq.front() = 2;
        seq.back() = 1;
        fill_antidiag(n + 1, seq);
    }
    // k = n+2: 1 2 1 ... 2 (n-3 cells)
    {
        std::vector<int> seq(n - 3);
        for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i % 2 == 0 ? 1 : 2;
        fill_antidiag(n + 2, seq);
    }
    return l;
}

// Backtracking completion with the 2x2 corner prescribed.
bool complete_with_corner(LatinSquare& l) {
    const std::size_t n = l.n;
    std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
    auto mark = [&](std::size_t i, std::size_t j, int s) {
        row_used[i] |= 1u << s;
        col_used[j] |= 1u << s;
    };
    mark(0, 0, 1);
    mark(0, 1, 2);
    mark(1, 0, 2);
    mark(1, 1, 1);
    std::function<bool(std::size_t)> fill = [&](std::size_t cell) -> bool {
        if (cell == n * n) return true;
        const std::size_t i = cell / n, j = cell % n;
        if (l.cells[i][j] != 0) return fill(cell + 1);
        for (int s = 1; s <= static_cast<int>(n); ++s) {
            const std::uint32_t bit = 1u << s;
            if ((row_used[i] & bit) || (col_used[j] & bit)) continue;
            l.cells[i][j] = s;
            row_used[i] |= bit;
            col_used[j] |= bit;
            if (fill(cell + 1)) return true;
            l.cells[i][j] = 0;
            row_used[i] &= ~bit;
            col_used[j] &= ~bit;
        }
        return false;
    };
    return fill(0);
}

}  // namespace

LatinSquare corner_latin(std::size_t n) {
    if (n == 1 || n == 3)
        throw std::invalid_argument(
            "corner_latin: no Latin square of order " + std::to_string(n) +
            " has the [[1,2],[2,1]] corner (order 3 forces a repeated symbol)");
    if (n == 0) throw std::invalid_argument("corner_latin: order must be positive");
    if (n % 2 == 0) {
        const LatinSquare half = hankel_latin(n / 2);
        LatinSquare l{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
        for (std::size_t i = 0; i < n / 2; ++i)
            for (std::size_t j = 0; j < n / 2; ++j) {
                const int v = half.cells[i][j];
                l.cells[2 * i][2 * j] = 2 * v - 1;
                l.cells[2 * i][2 * j + 1] = 2 * v;
                l.cells[2 * i + 1][2 * j] = 2 * v;
                l.cells[2 * i + 1][2 * j + 1] = 2 * v - 1;
            }
        return l;
    }
    LatinSquare attempt = odd_construction_attempt(n);
    if (is_latin(attempt.cells) && attempt.cells[0][0] == 1 && attempt.cells[1][1] == 1 &&
        attempt.cells[0][1] == 2 && attempt.cells[1][0] == 2)
        return attempt;
    LatinSquare l{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    l.cells[0][0] = 1;
    l.cells[0][1] = 2;
    l.cells[1][0] = 2;
    l.cells[1][1] = 1;
    if (!complete_with_corner(l))
        throw std::logic_error("corner_latin: backtracking completion failed");
    return l;
}

Transversal symbol_positions(const LatinSquare& l, int k) {
    if (k < 1 || k > static_cast<int>(l.n))
        throw std::invalid_argument("symbol_positions: symbol out of range");
    Transversal t;
    t.mapping.assign(l.n, 0);
    for (std::size_t i = 0; i < l.n; ++i)
        for (std::size_t j = 0; j < l.n; ++j)
            if (l.cells[i][j] == k) t.mapping[i] = j;
    return t;
}

bool colatin_check(const Matrix& m) {
    if (!m.square()) throw DimensionError("colatin_check: matrix not square");
    const std::size_t n = m.rows();
    if (n > 7)
        throw std::invalid_argument(
            "colatin_check: n > 7 is infeasible by transversal enumeration; use "
            "colatin_check_fast");
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    do {
        Rat sum(0);
        for (std::size_t i = 0; i < n; ++i) sum += m(i, cols[i]);
        if (sum != 0) return false;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return true;
}

bool colatin_check_fast(const Matrix& m) {
    const SVParts p = decompose(m);
    if (p.weight != 0) return false;
    for (const auto& e : p.m0.entries())
        if (e != 0) return false;
    return true;
}

std::vector<LatinSquare> all_latin_squares(std::size_t n) {
    std::vector<LatinSquare> out;
    if (n == 0) return out;
    LatinSquare l{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
        if (cell == n * n) {
            out.push_back(l);
            return;
        }
        const std::size_t i = cell / n, j = cell % n;
        for (int s = 1; s <= static_cast<int>(n); ++s) {
            const std::uint32_t bit = 1u << s;
            if ((row_used[i] & bit) || (col_used[j] & bit)) continue;
            l.cells[i][j] = s;
            row_used[i] |= bit;
            col_used[j] |= bit;
            fill(cell + 1);
            row_used[i] &= ~bit;
            col_used[j] &= ~bit;
        }
        l.cells[i][j] = 0;
    };
    fill(0);
    return out;
}

}  // namespace imf
