#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tutteconv/rational.hpp"

namespace tutteconv {

// Dense exact integer matrix, row major.
using IMat = std::vector<std::vector<Int>>;

inline std::size_t rows(const IMat& a) { return a.size(); }
inline std::size_t cols(const IMat& a) { return a.empty() ? 0 : a[0].size(); }

inline IMat identity_mat(std::size_t n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat zero_mat(std::size_t r, std::size_t c) { return IMat(r, std::vector<Int>(c, 0)); }

inline IMat mat_mul(const IMat& a, const IMat& b) {
    if (cols(a) != rows(b)) throw std::invalid_argument("matrix dimension mismatch");
    IMat out = zero_mat(rows(a), cols(b));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t k = 0; k < cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols(b); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Fraction-free determinant (Bareiss); exact for any square integer matrix.
inline Int det_bareiss(IMat a) {
    const std::size_t n = rows(a);
    if (n != cols(a)) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Smith normal form U * A * V = D with unimodular U, V and a nonnegative
// diagonal in a divisibility chain d1 | d2 | ... (zeros trailing).
struct SNFResult {
    IMat u, v, d;
    std::vector<Int> diagonal;          // full diagonal, min(rows, cols) entries
    std::vector<Int> invariant_factors; // the nonzero entries only
    int rank = 0;                       // number of nonzero entries
};

inline SNFResult snf(const IMat& input) {
    const std::size_t m = rows(input), n = cols(input);
    SNFResult res;
    res.u = identity_mat(m);
    res.v = identity_mat(n);
    res.d = input;
    IMat& d = res.d;
    IMat& u = res.u;
    IMat& v = res.v;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(v[i][a], v[i][b]);
    };
    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) d[dst][j] -= q * d[src][j];
        for (std::size_t j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) d[i][dst] -= q * d[i][src];
        for (std::size_t i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal-absolute-value pivot in the trailing block.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d[i][j] != 0 &&
                        (pi == m || abs(d[i][j]) < abs(d[pi][pj])))
                        pi = i, pj = j;
            if (pi == m) {
                t = steps;  // trailing block is zero
                break;
            }
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                row_sub(i, t, d[i][t] / d[t][t]);
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                col_sub(j, t, d[t][j] / d[t][t]);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block for the chain to hold.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_sub(t, i, Int(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t == steps) break;
    }

    for (std::size_t t = 0; t < steps; ++t) {
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < m; ++j) u[t][j] = -u[t][j];
        }
        res.diagonal.push_back(d[t][t]);
        if (d[t][t] != 0) {
            res.invariant_factors.push_back(d[t][t]);
            ++res.rank;
        }
    }
    return res;
}

// Exact inverse of an integer matrix with determinant +-1.
inline IMat inverse_unimodular(const IMat& a) {
    const std::size_t n = rows(a);
    if (n != cols(a)) throw std::invalid_argument("inverse of a non-square matrix");
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
        w[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("matrix is singular");
        std::swap(w[c], w[p]);
        const Rat inv = Rat(1) / w[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) w[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            const Rat f = w[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    IMat out = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(w[i][n + j]))
                throw std::invalid_argument("matrix is not unimodular");
            out[i][j] = num(w[i][n + j]);
        }
    return out;
}

// Exact rational kernel vector of the row system rows * x = 0, scaled to a
// primitive integer vector with positive leading entry.  Requires the row
// space to have corank exactly one in dimension `dim`.
inline std::vector<Int> primitive_kernel_vector(const IMat& rowvecs, std::size_t dim) {
    std::vector<std::vector<Rat>> w;
    for (const auto& r : rowvecs) {
        if (r.size() != dim) throw std::invalid_argument("kernel: row length mismatch");
        std::vector<Rat> q(dim);
        for (std::size_t j = 0; j < dim; ++j) q[j] = Rat(r[j]);
        w.push_back(std::move(q));
    }
    // Row echelon with column pivots.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < w.size(); ++c) {
        std::size_t p = rank;
        while (p < w.size() && w[p][c] == 0) ++p;
        if (p == w.size()) continue;
        std::swap(w[rank], w[p]);
        const Rat inv = Rat(1) / w[rank][c];
        for (std::size_t j = 0; j < dim; ++j) w[rank][j] *= inv;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == rank || w[i][c] == 0) continue;
            const Rat f = w[i][c];
            for (std::size_t j = 0; j < dim; ++j) w[i][j] -= f * w[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank + 1 != dim)
        throw std::invalid_argument("kernel: expected corank exactly one");
    // The unique free column.
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < dim && is_pivot[free_col]) ++free_col;
    std::vector<Rat> x(dim, 0);
    x[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = -w[i][free_col];
    // Clear denominators, make primitive, canonical sign.
    Int scale = 1;
    for (const auto& q : x) scale = lcm(scale, den(q));
    std::vector<Int> out(dim);
    Int g = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        out[j] = num(x[j]) * (scale / den(x[j]));
        g = gcd(g, out[j]);
    }
    for (auto& e : out) e /= g;
    for (const auto& e : out) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : out) f = -f;
        break;
    }
    return out;
}

}  // namespace tutteconv
