#ifndef HARPER_SNF_HPP
#define HARPER_SNF_HPP

#include <cstdlib>
#include <vector>

#include "harper/rational.hpp"

namespace harper {

using IMatrix = std::vector<std::vector<long long>>;

// Smith normal form of a rectangular integer matrix: S = L * A * R with L, R
// unimodular and S diagonal, d_1 | d_2 | ... | d_r, remaining diagonal zero.
struct SmithForm {
    IMatrix S, L, R;
    int rank = 0;
    std::vector<long long> diag; // min(m, n) entries, nonnegative
};

inline SmithForm smith_normal_form(IMatrix A) {
    const int m = int(A.size());
    const int n = m ? int(A[0].size()) : 0;
    SmithForm f;
    f.L.assign(m, std::vector<long long>(m, 0));
    f.R.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < m; ++i) f.L[i][i] = 1;
    for (int i = 0; i < n; ++i) f.R[i][i] = 1;

    auto row_add = [&](int dst, int src, long long q) { // row dst -= q * row src
        for (int j = 0; j < n; ++j) A[dst][j] -= q * A[src][j];
        for (int j = 0; j < m; ++j) f.L[dst][j] -= q * f.L[src][j];
    };
    auto col_add = [&](int dst, int src, long long q) { // col dst -= q * col src
        for (int i = 0; i < m; ++i) A[i][dst] -= q * A[i][src];
        for (int i = 0; i < n; ++i) f.R[i][dst] -= q * f.R[i][src];
    };
    auto row_swap = [&](int a, int b) { std::swap(A[a], A[b]); std::swap(f.L[a], f.L[b]); };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < n; ++i) std::swap(f.R[i][a], f.R[i][b]);
    };
    auto row_negate = [&](int r) {
        for (int j = 0; j < n; ++j) A[r][j] = -A[r][j];
        for (int j = 0; j < m; ++j) f.L[r][j] = -f.L[r][j];
    };

    int t = 0;
    while (t < m && t < n) {
        // locate a nonzero pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (A[i][j] != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        // clear row and column t by euclidean steps
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = t + 1; i < m; ++i)
                if (A[i][t] != 0) {
                    long long q = A[i][t] / A[t][t];
                    row_add(i, t, q);
                    if (A[i][t] != 0) { row_swap(t, i); dirty = true; }
                }
            for (int j = t + 1; j < n; ++j)
                if (A[t][j] != 0) {
                    long long q = A[t][j] / A[t][t];
                    col_add(j, t, q);
                    if (A[t][j] != 0) { col_swap(t, j); dirty = true; }
                }
        }
        if (A[t][t] < 0) row_negate(t);
        ++t;
    }
    // enforce divisibility chain
    for (bool again = true; again;) {
        again = false;
        for (int i = 0; i + 1 < t; ++i) {
            if (A[i][i] != 0 && A[i + 1][i + 1] % A[i][i] != 0) {
                // fold entry i+1 into row i and re-reduce the 2x2 block
                col_add(i, i + 1, -1); // col i += col i+1
                for (bool dirty = true; dirty;) {
                    dirty = false;
                    if (A[i + 1][i] != 0) {
                        long long q = A[i + 1][i] / A[i][i];
                        row_add(i + 1, i, q);
                        if (A[i + 1][i] != 0) { row_swap(i, i + 1); dirty = true; }
                    }
                    if (A[i][i + 1] != 0) {
                        long long q = A[i][i + 1] / A[i][i];
                        col_add(i + 1, i, q);
                        if (A[i][i + 1] != 0) { col_swap(i, i + 1); dirty = true; }
                    }
                }
                if (A[i][i] < 0) row_negate(i);
                if (A[i + 1][i + 1] < 0) row_negate(i + 1);
                again = true;
            }
        }
    }
    f.S = A;
    f.rank = t;
    // rank may drop below t only if a diagonal became zero; recount
    f.rank = 0;
    for (int i = 0; i < std::min(m, n); ++i) {
        f.diag.push_back(A[i][i]);
        if (A[i][i] != 0) ++f.rank;
    }
    return f;
}

// Solution set of A * x == b (mod Z^m) inside the torus [0,1)^n: a finite
// disjoint union of parallel affine subtori. All components share the same
// free directions; each base point is one discrete translate.
struct AffineSubtorus {
    int n = 0;
    std::vector<std::vector<Rational>> points;      // component base points, mod 1
    std::vector<std::vector<long long>> directions; // integer circle directions
    bool empty() const { return points.empty(); }
    int dim() const { return int(directions.size()); }
};

inline AffineSubtorus solve_torus_congruence(const IMatrix& A, const std::vector<Rational>& b) {
    const int m = int(A.size());
    const int n = m ? int(A[0].size()) : 0;
    AffineSubtorus sol;
    sol.n = n;
    SmithForm f = smith_normal_form(A);
    // c = L * b
    std::vector<Rational> c(m, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i] = c[i] + Rational(f.L[i][j]) * b[j];
    // rows past the rank demand c_i integral
    for (int i = f.rank; i < m; ++i)
        if (!(c[i].mod1() == Rational(0))) return sol; // empty
    // free coordinates give circle directions: columns of R past the rank
    for (int j = f.rank; j < n; ++j) {
        std::vector<long long> dir(n);
        for (int i = 0; i < n; ++i) dir[i] = f.R[i][j];
        sol.directions.push_back(dir);
    }
    // enumerate discrete choices s_i = (c_i + k) / d_i, k = 0..d_i-1
    std::vector<std::vector<Rational>> s_choices;
    for (int i = 0; i < f.rank; ++i) {
        long long d = f.diag[i];
        std::vector<Rational> ch;
        Rational c0 = c[i].mod1();
        for (long long k = 0; k < d; ++k) ch.push_back(((c0 + Rational(k)) / Rational(d)).mod1());
        s_choices.push_back(ch);
    }
    std::vector<int> pick(f.rank, 0);
    for (bool done = false; !done;) {
        std::vector<Rational> s(n, Rational(0));
        for (int i = 0; i < f.rank; ++i) s[i] = s_choices[i][pick[i]];
        std::vector<Rational> x(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) x[i] = x[i] + Rational(f.R[i][j]) * s[j];
            x[i] = x[i].mod1();
        }
        sol.points.push_back(x);
        done = true;
        for (int i = f.rank - 1; i >= 0; --i) {
            if (++pick[i] < int(s_choices[i].size())) { done = false; break; }
            pick[i] = 0;
        }
    }
    return sol;
}

} // namespace harper

#endif
