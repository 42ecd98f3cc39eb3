#ifndef HARPER_LINALG_HPP
#define HARPER_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "harper/monomial.hpp"

namespace harper {

// Small dense complex matrix, row-major.
class CMatrix {
public:
    int rows = 0, cols = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Complex(0, 0)) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Complex& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Complex& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    CMatrix adjoint() const {
        CMatrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        if (x.cols != y.rows) throw std::logic_error("matrix product shape mismatch");
        CMatrix m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                Complex v = x(i, k);
                if (v == Complex(0, 0)) continue;
                for (int j = 0; j < y.cols; ++j) m(i, j) += v * y(k, j);
            }
        return m;
    }
    friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
        CMatrix m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
        return m;
    }
    friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
        CMatrix m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
        return m;
    }
    friend CMatrix operator*(Complex s, const CMatrix& x) {
        CMatrix m = x;
        for (auto& v : m.a) v *= s;
        return m;
    }

    Complex trace() const {
        Complex t = 0;
        for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
        return t;
    }
    double frobenius_norm() const {
        double s = 0;
        for (auto& v : a) s += std::norm(v);
        return std::sqrt(s);
    }
    double max_abs_diff(const CMatrix& o) const {
        double m = 0;
        for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
        return m;
    }
    bool is_hermitian(double tol = 1e-12) const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }
};

struct EigenSystem {
    std::vector<double> values;   // ascending
    CMatrix vectors;              // columns, orthonormal, phase-normalized
};

// Hermitian eigensolver: cyclic complex Jacobi sweeps. Deterministic pivot
// order, converges quadratically; intended for the small matrices that arise
// here (k <= a few dozen).
inline EigenSystem hermitian_eigensystem(const CMatrix& h, double tol = 1e-14, int max_sweeps = 100) {
    const int n = h.rows;
    if (h.cols != n) throw std::logic_error("eigensystem needs a square matrix");
    CMatrix A = h;
    // symmetrize to kill tiny anti-Hermitian noise
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0.5 * (A(i, j) + std::conj(A(j, i)));
            A(i, j) = s;
        }
    CMatrix V = CMatrix::identity(n);
    double scale = std::max(A.frobenius_norm(), 1.0);

    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(A(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                Complex apq = A(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                double app = A(p, p).real(), aqq = A(q, q).real();
                // Unitary 2x2: diag phase absorbs arg(apq), then a real
                // rotation by theta diagonalizes the pivot block.
                Complex u = apq / mag; // e^{i arg}
                double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                // columns transform: col_p' = c*col_p + s*conj(u)*col_q ...
                for (int i = 0; i < n; ++i) {
                    Complex aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip + s * std::conj(u) * aiq;
                    A(i, q) = -s * u * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    Complex apj = A(p, j), aqj = A(q, j);
                    A(p, j) = c * apj + s * u * aqj;
                    A(q, j) = -s * std::conj(u) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    Complex vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip + s * std::conj(u) * viq;
                    V(i, q) = -s * u * vip + c * viq;
                }
            }
    }

    EigenSystem es;
    es.values.resize(n);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = A(i, i).real();
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return diag[x] < diag[y]; });
    es.vectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        es.values[j] = diag[idx[j]];
        // phase normalization: largest-modulus component made real positive
        int best = 0;
        double bm = -1;
        for (int i = 0; i < n; ++i)
            if (std::abs(V(i, idx[j])) > bm + 1e-15) { bm = std::abs(V(i, idx[j])); best = i; }
        Complex ph = V(best, idx[j]) / std::abs(V(best, idx[j]));
        for (int i = 0; i < n; ++i) es.vectors(i, j) = V(i, idx[j]) / ph;
    }
    return es;
}

// Multiplicity pattern of an ascending eigenvalue list: eigenvalues within
// tol of each other are clustered together.
inline std::vector<int> degeneracy_profile(const std::vector<double>& values, double tol) {
    std::vector<int> profile;
    for (size_t i = 0; i < values.size();) {
        size_t j = i + 1;
        while (j < values.size() && values[j] - values[j - 1] <= tol) ++j;
        profile.push_back(int(j - i));
        i = j;
    }
    return profile;
}

// Smallest gap between consecutive eigenvalues (infinity for k == 1).
inline double min_gap(const std::vector<double>& values) {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < values.size(); ++i) g = std::min(g, values[i] - values[i - 1]);
    return g;
}

} // namespace harper

#endif
